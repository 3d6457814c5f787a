"""Command-line front end.

Subcommands: ``commutant``, ``dirac``, ``beta``, ``verify`` and ``report``.
Output is a JSON (or plain-text) report with keys ``meta``, ``inputs``,
``dimensions``, ``checks`` and optionally ``basis`` and ``verdicts``.
Exact scalars are rendered as strings.  Exit status is 0 on success, 1 when
a verification check fails (or output cannot be written) and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .beta import BetaCandidate, beta_projections, enumerate_generic, resolve_beta
from .commutant import case_commutant, matches_parametric_form
from .constraints import DiracFamily, solve
from .exact import SubspaceBasis
from .presets import FORMS
from .triple import CASE_ALIASES, algebra_case
from .verdict import GRADINGS, VERDICT_CASES, dirac_constraints, verdict_table, yukawa_projection
from .verify import check_names, run_verify, select

CASE_CHOICES = ("unreduced", "reduced", "sm")


class UsageError(Exception):
    pass


@dataclass
class RunSpec:
    command: str
    case: str = "reduced"
    grading: str = "gamma"
    beta: str | None = None
    self_adjoint: bool = False
    fmt: str = "json"
    out: str | None = None
    basis: bool = False
    scope: str = "all"

    @property
    def case_tag(self) -> str:
        return CASE_ALIASES[self.case]

    def inputs(self) -> dict:
        d = {"command": self.command}
        if self.command in ("commutant", "dirac", "beta"):
            d["case"] = self.case_tag
        if self.command == "dirac":
            d.update(grading=self.grading, beta=self.beta, self_adjoint=self.self_adjoint)
        if self.command == "verify":
            d["scope"] = self.scope
        if self.command in ("commutant", "dirac"):
            d["basis"] = self.basis
        return d


@dataclass
class Report:
    spec: RunSpec
    dimensions: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    basis: list | None = None
    verdicts: list | None = None

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def as_dict(self) -> dict:
        d = {
            "meta": {"tool": "pstriple", "version": __version__, "command": self.spec.command},
            "inputs": self.spec.inputs(),
            "dimensions": self.dimensions,
            "checks": self.checks,
        }
        if self.basis is not None:
            d["basis"] = self.basis
        if self.verdicts is not None:
            d["verdicts"] = self.verdicts
        return d


# --------------------------------------------------------------------------
# argument parsing


def _common(p: argparse.ArgumentParser, case: bool = True) -> None:
    if case:
        p.add_argument("--case", choices=CASE_CHOICES, default="reduced")
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pstriple", description="Pseudo-Riemannian structures on finite spectral triples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("commutant", help="commutant of the represented algebra")
    _common(p)
    p.add_argument("--basis", action="store_true", help="emit the canonical basis")

    p = sub.add_parser("dirac", help="solve a family of Dirac operators")
    _common(p)
    p.add_argument("--grading", choices=GRADINGS, default="gamma")
    p.add_argument("--beta", help="beta name, comma-separated one-term signs, one:<signs> or eta:<signs>")
    p.add_argument("--self-adjoint", action="store_true", help="also impose D = D^*")
    p.add_argument("--basis", action="store_true", help="emit the canonical basis")

    p = sub.add_parser("beta", help="enumerate and classify betas")
    _common(p)

    p = sub.add_parser("verify", help="run named verification checks")
    p.add_argument("scope", nargs="?", default="all", help=f"'all', a check name or a prefix; checks: {', '.join(check_names())}")
    _common(p, case=False)

    p = sub.add_parser("report", help="all checks plus the full verdict table")
    _common(p, case=False)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> RunSpec:
    ns = build_parser().parse_args(argv)
    spec = RunSpec(
        command=ns.command,
        case=getattr(ns, "case", "reduced"),
        grading=getattr(ns, "grading", "gamma"),
        beta=getattr(ns, "beta", None),
        self_adjoint=getattr(ns, "self_adjoint", False),
        fmt=ns.fmt,
        out=ns.out,
        basis=getattr(ns, "basis", False),
        scope=getattr(ns, "scope", "all"),
    )
    if spec.beta is not None:
        _beta_candidate(spec)  # fail early on an undefined name
    if spec.command == "verify":
        try:
            select(spec.scope)
        except KeyError as exc:
            raise UsageError(f"argument scope: {exc.args[0]}") from None
    return spec


def _beta_candidate(spec: RunSpec) -> BetaCandidate:
    text = spec.beta
    try:
        if text and ":" not in text and text[0] in "+-1":
            signs = [int(x) for x in text.split(",")]
            if len(signs) == len(algebra_case(spec.case_tag).block_sizes):
                text = "one:" + text
            elif len(signs) == len(beta_projections(spec.case_tag)):
                text = "eta:" + text
        return resolve_beta(spec.case_tag, text)
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        raise UsageError(f"argument --beta: {msg}") from None


# --------------------------------------------------------------------------
# commands


def serialize_basis(space: SubspaceBasis | DiracFamily) -> list:
    """Each basis operator as ``[row, col, value]`` triples (1-based, exact strings)."""
    fam = space if isinstance(space, DiracFamily) else DiracFamily(space, ())
    out = []
    for x in fam.operators():
        out.append([[r + 1, c + 1, str(v)] for r, c, v in x.nonzero()])
    return out


def _check(name: str, anchor: str, passed: bool) -> dict:
    return {"name": name, "paper_anchor": anchor, "pass": bool(passed)}


def _cmd_commutant(spec: RunSpec, rep: Report) -> None:
    res = case_commutant(spec.case_tag)
    rep.dimensions = {"complex_dim": res.complex_dim, "real_dim": res.real_dim}
    form = FORMS.get(f"commutant-{spec.case_tag}")
    if form is not None:
        rep.checks.append(
            _check(f"commutant-{spec.case_tag}-form", f"commutant matches the {form.name} block form", matches_parametric_form(res.space, form))
        )
    if spec.basis:
        rep.basis = serialize_basis(res.space)


def _cmd_dirac(spec: RunSpec, rep: Report) -> None:
    cand = _beta_candidate(spec) if spec.beta else None
    fam = solve(dirac_constraints(spec.grading, cand.op if cand else None, spec.self_adjoint), case_tag=spec.case_tag)
    rep.dimensions = {"real_dim": fam.real_dim}
    rep.checks.append(_check("constraints-recheck", "every basis operator satisfies every constraint", fam.recheck()))
    y = yukawa_projection(fam)
    row = {
        "case": spec.case_tag,
        "grading": spec.grading,
        "beta": cand.name if cand else None,
        "lepton_yukawa_dim": y.lepton_dim,
        "quark_yukawa_dim": y.quark_dim,
        "lepton_mass_dim": y.lepton_mass_dim,
        "quark_mass_dim": y.quark_mass_dim,
        "yukawa_nonzero": y.nonzero,
        "physical": y.onto,
    }
    rep.verdicts = [row]
    if spec.basis:
        rep.basis = serialize_basis(fam)


def _candidate_row(c: BetaCandidate, physical: dict[str, bool]) -> dict:
    return {
        "name": c.name,
        "sign_pattern": list(c.sign_pattern),
        "one_term_witness": list(c.witness) if c.witness else None,
        "flags": c.flags.as_dict(),
        "physical": physical,
    }


def _cmd_beta(spec: RunSpec, rep: Report) -> None:
    tag = spec.case_tag
    gens = enumerate_generic(tag)
    gradings = [g for c, g in VERDICT_CASES if c == tag]
    physical = {g: {v.beta_name: v.physical for v in verdict_table() if v.case_tag == tag and v.grading == g} for g in gradings}
    rep.verdicts = [_candidate_row(c, {g: physical[g][c.name] for g in gradings}) for c in gens]
    rep.dimensions = {
        "projections": len(beta_projections(tag)),
        "candidates": len(gens),
        "nontrivial": sum(not c.flags.is_trivial for c in gens),
        "zero_cycles": sum(c.flags.is_zero_cycle for c in gens),
        "one_term_expressible": sum(c.flags.is_one_term_expressible for c in gens),
    }
    rep.checks.append(
        _check(
            "beta-axioms",
            "every beta is a self-adjoint involution commuting with the algebra, J and gamma",
            all(
                c.flags.is_involution and c.flags.is_self_adjoint and c.flags.commutes_with_J and c.flags.commutes_with_gamma and c.flags.commutes_with_algebra
                for c in gens
            ),
        )
    )


def _run_checks(spec: RunSpec, rep: Report, scope: str) -> None:
    results = run_verify(scope)
    rep.checks = [r.as_dict() for r in results]
    rep.dimensions = {r.name: r.details for r in results}


def _cmd_verify(spec: RunSpec, rep: Report) -> None:
    _run_checks(spec, rep, spec.scope)


def _cmd_report(spec: RunSpec, rep: Report) -> None:
    _run_checks(spec, rep, "all")
    rep.verdicts = [v.as_dict() for v in verdict_table()]


COMMAND_TABLE = {
    "commutant": _cmd_commutant,
    "dirac": _cmd_dirac,
    "beta": _cmd_beta,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def build_report(spec: RunSpec) -> Report:
    rep = Report(spec)
    COMMAND_TABLE[spec.command](spec, rep)
    return rep


# --------------------------------------------------------------------------
# rendering


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return json.dumps(v) if not isinstance(v, str) else v


def emit_report(rep: Report, fmt: str = "json") -> bytes:
    data = rep.as_dict()
    if fmt == "json":
        return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode()
    return ("\n".join(_text_lines(data)) + "\n").encode()


def main(argv: Sequence[str] | None = None) -> int:
    try:
        spec = parse_args(argv)
    except UsageError as exc:
        print(f"pstriple: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    rep = build_report(spec)
    payload = emit_report(rep, spec.fmt)
    if spec.out:
        try:
            with open(spec.out, "wb") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"pstriple: cannot write {spec.out}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    if not rep.ok:
        failed = ", ".join(c["name"] for c in rep.checks if not c["pass"])
        print(f"pstriple: failed checks: {failed}", file=sys.stderr)
        return 1
    return 0
