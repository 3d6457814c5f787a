"""Physical acceptability of Dirac families through their Yukawa blocks.

The Yukawa coordinates are the right/left chirality blocks of the particle
sector, split into the lepton row and the three colour rows.  A family is
physical when the lepton and quark mass matrices, read off the
right-to-left half of those blocks, can be chosen freely: the restriction
of the family to that half is onto.  The other half is the adjoint of the
first for self-adjoint operators, and every beta-compatible family is closed
under the adjoint, so the criterion reads the same with or without the
self-adjointness constraint.  The weaker test, that the restriction to all
Yukawa coordinates is merely nonzero, is reported as ``yukawa_nonzero``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .beta import BetaCandidate, enumerate_generic
from .constraints import AnticommuteWith, CommuteWith, CommuteWithJ, DiracFamily, SelfAdjoint, coordinate_projection, solve
from .exact import Mat
from .triple import CASE_ALIASES, TensorIndex, gamma, gamma_star

GRADINGS = ("gamma", "gamma-star")
RIGHT = (1, 2)
LEFT = (3, 4)

# (case, grading) pairs studied in the classification
VERDICT_CASES = (
    ("unreduced", "gamma"),
    ("reduced", "gamma"),
    ("reduced", "gamma-star"),
    ("standard-model", "gamma"),
)


def grading_op(name: str) -> Mat:
    if name == "gamma":
        return gamma()
    if name == "gamma-star":
        return gamma_star()
    raise ValueError(f"unknown grading {name!r}; expected one of {GRADINGS}")


@dataclass(frozen=True)
class YukawaCoordinateSet:
    lepton: tuple[TensorIndex, ...]
    quark: tuple[TensorIndex, ...]

    @property
    def lepton_mass(self) -> tuple[TensorIndex, ...]:
        """Right-to-left half of the lepton block (the entries of ``M_l``)."""
        return tuple(t for t in self.lepton if t.k in RIGHT)

    @property
    def quark_mass(self) -> tuple[TensorIndex, ...]:
        return tuple(t for t in self.quark if t.k in RIGHT)


def _chirality_pairs() -> list[tuple[int, int]]:
    return [(k, l) for k in RIGHT for l in LEFT] + [(k, l) for k in LEFT for l in RIGHT]


@lru_cache(maxsize=None)
def yukawa_coords() -> YukawaCoordinateSet:
    """Right/left-chirality blocks in the particle sector, split by colour."""
    lepton = tuple(TensorIndex(k, l, 1, 1, 1, 1) for k, l in _chirality_pairs())
    quark = tuple(TensorIndex(k, l, 1, 1, r, r) for k, l in _chirality_pairs() for r in (2, 3, 4))
    return YukawaCoordinateSet(lepton, quark)


@dataclass(frozen=True)
class YukawaProjection:
    """Real dimensions of a family restricted to the Yukawa coordinates.

    ``lepton_dim``/``quark_dim`` use the full blocks; ``*_mass_dim`` the
    right-to-left halves, compared against ``*_mass_full``.
    """

    lepton_dim: int
    quark_dim: int
    lepton_mass_dim: int
    quark_mass_dim: int
    lepton_mass_full: int
    quark_mass_full: int

    @property
    def nonzero(self) -> bool:
        return self.lepton_dim > 0 and self.quark_dim > 0

    @property
    def onto(self) -> bool:
        return self.lepton_mass_dim == self.lepton_mass_full and self.quark_mass_dim == self.quark_mass_full


def yukawa_projection(family: DiracFamily) -> YukawaProjection:
    yc = yukawa_coords()
    return YukawaProjection(
        coordinate_projection(family, yc.lepton).dim,
        coordinate_projection(family, yc.quark).dim,
        coordinate_projection(family, yc.lepton_mass).dim,
        coordinate_projection(family, yc.quark_mass).dim,
        2 * len(yc.lepton_mass),
        2 * len(yc.quark_mass),
    )


def is_physical(family: DiracFamily) -> bool:
    return yukawa_projection(family).onto


def dirac_constraints(grading: str, beta: Mat | None = None, self_adjoint: bool = False) -> list:
    cs: list = [CommuteWithJ(), AnticommuteWith(grading_op(grading), grading)]
    if beta is not None:
        cs.append(CommuteWith(beta, "beta"))
    if self_adjoint:
        cs.append(SelfAdjoint())
    return cs


@dataclass(frozen=True)
class Verdict:
    case_tag: str
    grading: str
    beta_name: str
    beta: BetaCandidate = field(repr=False)
    dirac_family: DiracFamily = field(repr=False)
    physical: bool
    reasons: tuple[str, ...]
    real_dim: int
    real_dim_self_adjoint: int
    yukawa: YukawaProjection

    def as_dict(self) -> dict:
        return {
            "case": self.case_tag,
            "grading": self.grading,
            "beta": self.beta_name,
            "sign_pattern": list(self.beta.sign_pattern),
            "trivial": self.beta.flags.is_trivial,
            "zero_cycle": self.beta.flags.is_zero_cycle,
            "one_term_expressible": self.beta.flags.is_one_term_expressible,
            "real_dim": self.real_dim,
            "real_dim_self_adjoint": self.real_dim_self_adjoint,
            "lepton_yukawa_dim": self.yukawa.lepton_dim,
            "quark_yukawa_dim": self.yukawa.quark_dim,
            "lepton_mass_dim": self.yukawa.lepton_mass_dim,
            "quark_mass_dim": self.yukawa.quark_mass_dim,
            "yukawa_nonzero": self.yukawa.nonzero,
            "physical": self.physical,
            "reasons": list(self.reasons),
        }


def _reasons(y: YukawaProjection) -> tuple[str, ...]:
    out = []
    for what, block, got, full in (
        ("lepton", y.lepton_dim, y.lepton_mass_dim, y.lepton_mass_full),
        ("quark", y.quark_dim, y.quark_mass_dim, y.quark_mass_full),
    ):
        if block == 0:
            out.append(f"{what} Yukawa block vanishes")
        elif got < full:
            out.append(f"{what} mass matrix constrained ({got} of {full} real parameters)")
    return tuple(out) or ("lepton and quark mass matrices unconstrained",)


def verdict(case: str, grading: str, candidate: BetaCandidate) -> Verdict:
    tag = CASE_ALIASES[case]
    fam = solve(dirac_constraints(grading, candidate.op), case_tag=tag)
    sa = solve(dirac_constraints(grading, candidate.op, self_adjoint=True), case_tag=tag)
    y = yukawa_projection(fam)
    return Verdict(tag, grading, candidate.name, candidate, fam, y.onto, _reasons(y), fam.real_dim, sa.real_dim, y)


@lru_cache(maxsize=None)
def _table() -> tuple[Verdict, ...]:
    return tuple(verdict(c, g, b) for c, g in VERDICT_CASES for b in enumerate_generic(c))


def verdict_table() -> list[Verdict]:
    """One verdict per generic beta for each studied (case, grading) pair."""
    return list(_table())


def physical_betas(case: str, grading: str, nontrivial_only: bool = True) -> list[Verdict]:
    tag = CASE_ALIASES[case]
    return [
        v
        for v in verdict_table()
        if v.case_tag == tag and v.grading == grading and v.physical and not (nontrivial_only and v.beta.flags.is_trivial)
    ]
