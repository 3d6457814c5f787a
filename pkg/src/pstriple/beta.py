"""Pseudo-Riemannian structures: enumeration and classification of betas.

A beta is a self-adjoint involution in the commutant of the algebra that
commutes with ``J`` and with the grading.  Two enumerations are provided:
the one-term 0-cycles ``pi(a) J pi(a) J^{-1}`` over sign-scaled block
identities, and the generic search inside the constrained commutant, which
turns out to be spanned by disjoint diagonal projections so that the
involutions are exactly the sign combinations of those projections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .commutant import case_commutant
from .constraints import REAL_DIM, CommuteWith, CommuteWithJ, MemberOf, SelfAdjoint, realify_sparse, solve
from .exact import Mat, SubspaceBasis, dagger
from .presets import ONE_TERM_NAMES, listed_reduced_betas
from .triple import (
    CASE_ALIASES,
    DIM,
    AlgebraCase,
    algebra_case,
    gamma,
    gamma_star,
    identity,
    j_conjugate,
    opposite,
    rep,
    sign_element,
)

Signs = tuple[int, ...]


@dataclass(frozen=True)
class BetaFlags:
    is_involution: bool
    is_self_adjoint: bool
    commutes_with_J: bool
    commutes_with_gamma: bool
    commutes_with_gamma_star: bool
    commutes_with_algebra: bool
    is_zero_cycle: bool
    is_one_term_expressible: bool
    is_trivial: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(self.__dict__)


@dataclass(frozen=True)
class BetaCandidate:
    """A candidate beta with its defining sign pattern and re-verified flags.

    ``sign_pattern`` holds the one-term signs for one-term candidates and the
    projection signs for generic ones.  ``witness`` is a one-term sign
    pattern ``a`` with ``pi(a) J pi(a) J^{-1} = op`` when one exists.
    """

    case_tag: str
    sign_pattern: Signs
    op: Mat = field(repr=False)
    flags: BetaFlags
    name: str = ""
    witness: Signs | None = None


def _tag(case: AlgebraCase | str) -> str:
    return case.tag if isinstance(case, AlgebraCase) else CASE_ALIASES[case]


def _is_trivial(op: Mat) -> bool:
    one = identity()
    return op == one or op == -one


@lru_cache(maxsize=None)
def zero_cycle_span(case: str) -> SubspaceBasis:
    """Real span of ``pi(a) J pi(b) J^{-1}`` over pairs of real generators."""
    c = algebra_case(CASE_ALIASES[case])
    gens = c.real_generators
    opp = [opposite(b) for b in gens]
    return SubspaceBasis.span(REAL_DIM, (realify_sparse(a @ ob) for a in gens for ob in opp))


def is_zero_cycle(op: Mat, case: AlgebraCase | str) -> bool:
    return zero_cycle_span(_tag(case)).contains_vector(realify_sparse(op))


def _all_signs(n: int) -> list[Signs]:
    return [tuple(s) for s in itertools.product((1, -1), repeat=n)]


def one_term_op(case: AlgebraCase | str, signs: Sequence[int]) -> Mat:
    a = rep(case, sign_element(case, signs))
    return a @ opposite(a)


@lru_cache(maxsize=None)
def _one_term_table(tag: str) -> tuple[tuple[Signs, Mat], ...]:
    n = len(algebra_case(tag).block_sizes)
    return tuple((s, one_term_op(tag, s)) for s in _all_signs(n))


def one_term_expressible(op: Mat, case: AlgebraCase | str) -> Signs | None:
    """First sign pattern (lexicographic, ``+1`` first) whose one-term beta is ``op``."""
    for s, x in _one_term_table(_tag(case)):
        if x == op:
            return s
    return None


def _commutes(a: Mat, b: Mat) -> bool:
    return a @ b == b @ a


def classify(case: AlgebraCase | str, op: Mat) -> BetaFlags:
    tag = _tag(case)
    c = algebra_case(tag)
    witness = one_term_expressible(op, tag)
    return BetaFlags(
        is_involution=op @ op == identity(),
        is_self_adjoint=dagger(op) == op,
        commutes_with_J=j_conjugate(op) == op,
        commutes_with_gamma=_commutes(op, gamma()),
        commutes_with_gamma_star=_commutes(op, gamma_star()),
        commutes_with_algebra=all(_commutes(op, g) for g in c.real_generators),
        is_zero_cycle=is_zero_cycle(op, tag),
        is_one_term_expressible=witness is not None,
        is_trivial=_is_trivial(op),
    )


def _candidate(tag: str, signs: Signs, op: Mat, name: str) -> BetaCandidate:
    return BetaCandidate(tag, signs, op, classify(tag, op), name, one_term_expressible(op, tag))


def _one_term_name(tag: str, signs: Signs) -> str:
    table = ONE_TERM_NAMES.get(tag, {})
    op = one_term_op(tag, signs)
    for name, s in table.items():
        if one_term_op(tag, s) in (op, -op):
            return name
    return ""


def one_term_beta(case: AlgebraCase | str, signs: Sequence[int]) -> BetaCandidate:
    """``pi(a) J pi(a)^* J^{-1}`` for the algebra element with blocks ``signs[b] * 1``."""
    tag = _tag(case)
    n = len(algebra_case(tag).block_sizes)
    if len(signs) != n:
        raise ValueError(f"{tag} one-term beta needs {n} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    s = tuple(int(x) for x in signs)
    return _candidate(tag, s, one_term_op(tag, s), _one_term_name(tag, s))


def _dedup(cands: list[BetaCandidate]) -> list[BetaCandidate]:
    seen: list[Mat] = []
    out = []
    for c in cands:
        if any(c.op == x or c.op == -x for x in seen):
            continue
        seen.append(c.op)
        out.append(c)
    return out


def enumerate_one_term(case: AlgebraCase | str) -> list[BetaCandidate]:
    """Distinct one-term betas up to global sign, in lexicographic sign order."""
    tag = _tag(case)
    if tag not in ("unreduced", "reduced"):
        raise ValueError("one-term enumeration is defined for the Pati-Salam cases only")
    n = len(algebra_case(tag).block_sizes)
    return _dedup([one_term_beta(tag, s) for s in _all_signs(n)])


@lru_cache(maxsize=None)
def beta_projections(case: str) -> tuple[Mat, ...]:
    """Basis of the constrained commutant, checked to be a resolution of the identity.

    The linear solve gives every self-adjoint, J- and gamma-commuting element
    of the commutant.  Its canonical basis consists of disjoint diagonal 0/1
    projections summing to the identity, so ``beta^2 = 1`` reduces to
    choosing a sign per projection.
    """
    tag = CASE_ALIASES[case]
    fam = solve([CommuteWithJ(), CommuteWith(gamma(), "gamma"), MemberOf(case_commutant(tag).space), SelfAdjoint()])
    projs = tuple(fam.operators())
    covered: set[int] = set()
    for p in projs:
        support = set()
        for r, c, v in p.nonzero():
            if r != c or v != 1:
                raise ArithmeticError("constrained commutant is not block-scalar")
            support.add(r)
        if support & covered:
            raise ArithmeticError("constrained commutant projections overlap")
        covered |= support
    if covered != set(range(DIM)):
        raise ArithmeticError("constrained commutant projections do not sum to the identity")
    return projs


def _generic_names(tag: str) -> dict[str, Mat]:
    if tag == "reduced":
        return listed_reduced_betas()
    return {name: one_term_op(tag, s) for name, s in ONE_TERM_NAMES[tag].items()}


def eta_name(signs: Sequence[int]) -> str:
    return "eta:" + ",".join(str(x) for x in signs)


def enumerate_generic(case: AlgebraCase | str) -> list[BetaCandidate]:
    """All betas in the constrained commutant, one per global-sign pair.

    Sign patterns are enumerated lexicographically with the first sign fixed
    to ``+1``.  Reduced candidates are named ``b1..b8`` after the listed
    displays; other cases reuse the one-term names where they apply and
    fall back to ``eta:<signs>``.
    """
    return list(_generic(_tag(case)))


@lru_cache(maxsize=None)
def _generic(tag: str) -> tuple[BetaCandidate, ...]:
    projs = beta_projections(tag)
    named = _generic_names(tag)
    out = []
    for rest in _all_signs(len(projs) - 1):
        s = (1,) + rest
        op = Mat.zeros(DIM)
        for sign, p in zip(s, projs):
            op = op + p.scale(Fraction(sign))
        name = next((n for n, x in named.items() if op == x or op == -x), eta_name(s))
        out.append(_candidate(tag, s, op, name))
    if tag == "reduced":
        order = {n: i for i, n in enumerate(named)}
        out.sort(key=lambda c: order.get(c.name, len(order)))
    return tuple(out)


def resolve_beta(case: AlgebraCase | str, spec: str) -> BetaCandidate:
    """Resolve a beta by name, ``one:<signs>`` or ``eta:<signs>``.

    Signs are comma separated, e.g. ``one:1,-1,1`` or ``eta:1,1,-1,1``.
    Raises ``KeyError`` for a name unknown to the case.
    """
    tag = _tag(case)
    kind, _, rest = spec.partition(":")
    if rest:
        signs = tuple(int(x) for x in rest.split(","))
        if kind == "one":
            return one_term_beta(tag, signs)
        if kind == "eta":
            n = len(beta_projections(tag))
            if len(signs) != n or any(x not in (1, -1) for x in signs):
                raise ValueError(f"{tag} needs {n} signs of +1/-1")
            flip = signs[0]
            for c in enumerate_generic(tag):
                if c.sign_pattern == tuple(flip * x for x in signs):
                    if flip == 1:
                        return c
                    op = -c.op
                    return BetaCandidate(tag, signs, op, classify(tag, op), c.name, one_term_expressible(op, tag))
        raise KeyError(f"unknown beta specification {spec!r}")
    for s in ONE_TERM_NAMES.get(tag, {}).values():
        cand = one_term_beta(tag, s)
        if cand.name == spec:
            return cand
    for c in enumerate_generic(tag):
        if c.name == spec:
            return c
    raise KeyError(f"beta {spec!r} is not defined for the {tag} case")


def beta_names(case: AlgebraCase | str) -> list[str]:
    tag = _tag(case)
    names = list(ONE_TERM_NAMES.get(tag, {}))
    if tag == "reduced":
        names += list(listed_reduced_betas())
    return names


def two_term_zero_cycle(eta: Sequence[int]) -> Mat:
    """Reduced-case 0-cycle ``sum_t pi(a_t) J pi(a_t) J^{-1}`` with

    ``a_1 = (1_2, 0_2, eta1, eta2 1_3)`` and ``a_2 = (0_2, 1_2, eta3, eta4 1_3)``.
    """
    if len(eta) != 4:
        raise ValueError("the reduced two-term 0-cycle takes four signs")
    e1, e2, e3, e4 = (Fraction(x) for x in eta)
    one2, zero2, one3 = Mat.identity(2), Mat.zeros(2), Mat.identity(3)
    terms = ((one2, zero2, e1, one3.scale(e2)), (zero2, one2, e3, one3.scale(e4)))
    out = Mat.zeros(DIM)
    for a in terms:
        x = rep("reduced", a)
        out = out + x @ j_conjugate(x)
    return out
