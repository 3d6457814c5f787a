"""Real-linear constraint systems on End(H) and their exact solution spaces.

An operator ``X`` is realified coordinate-wise: entry ``f = row*32 + col``
contributes ``Re X[f]`` at slot ``2f`` and ``Im X[f]`` at slot ``2f+1``.
Every constraint (including the antilinear ones coming from ``J`` and the
adjoint) lowers to integer rows on these 2048 real coordinates.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .exact import (
    Echelon,
    GaussianRational,
    Mat,
    SubspaceBasis,
    _nullspace_from_rref,
    anticommutator,
    commutator,
    dagger,
)
from .triple import DIM, J_PERMUTATION, TensorIndex, j_conjugate, sector_part

N_ENTRIES = DIM * DIM
REAL_DIM = 2 * N_ENTRIES


# --------------------------------------------------------------------------
# realification


def realify_sparse(x: Mat) -> dict[int, Fraction]:
    if x.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} operator, got {x.shape}")
    out: dict[int, Fraction] = {}
    den = x.den
    for (r, c), v in np.ndenumerate(x.re):
        if v:
            out[2 * (r * DIM + c)] = Fraction(int(v), den)
    for (r, c), v in np.ndenumerate(x.im):
        if v:
            out[2 * (r * DIM + c) + 1] = Fraction(int(v), den)
    return out


def realify(x: Mat) -> tuple[Fraction, ...]:
    vec = [Fraction(0)] * REAL_DIM
    for c, v in realify_sparse(x).items():
        vec[c] = v
    return tuple(vec)


def unrealify(v: Mapping[int, object] | Sequence[object]) -> Mat:
    items = v.items() if isinstance(v, Mapping) else ((c, x) for c, x in enumerate(v) if x)
    entries: dict[tuple[int, int], object] = {}
    for c, x in items:
        f, part = divmod(c, 2)
        rc = divmod(f, DIM)
        re, im = entries.get(rc, (0, 0))
        entries[rc] = (x, im) if part == 0 else (re, x)
    return Mat.from_sparse(DIM, DIM, {k: GaussianRational(re, im) for k, (re, im) in entries.items()})


# --------------------------------------------------------------------------
# constraints


def _complex_rows(eqs: Mapping[object, Mapping[int, tuple[int, int]]]) -> Iterator[dict[int, int]]:
    """Split complex equations ``sum w_f x_f = 0`` into real and imaginary rows."""
    for key in sorted(eqs):
        coeffs = eqs[key]
        re_row: dict[int, int] = {}
        im_row: dict[int, int] = {}
        for f, (p, q) in coeffs.items():
            if p:
                re_row[2 * f] = p
                im_row[2 * f + 1] = p
            if q:
                re_row[2 * f + 1] = -q
                im_row[2 * f] = q
        if re_row:
            yield re_row
        if im_row:
            yield im_row


def _bracket_rows(g: Mat, s: int) -> Iterator[dict[int, int]]:
    """Rows of ``X g - s g X = 0`` (``s = 1`` commutator, ``s = -1`` anticommutator)."""
    eqs: dict[tuple[int, int], dict[int, list[int]]] = defaultdict(dict)
    nz = [(r, c, int(g.re[r, c]), int(g.im[r, c])) for r, c, _ in g.nonzero()]

    def add(eq: tuple[int, int], f: int, p: int, q: int) -> None:
        cur = eqs[eq].get(f)
        if cur is None:
            eqs[eq][f] = [p, q]
        else:
            cur[0] += p
            cur[1] += q

    for c, b, p, q in nz:  # X[a,c] g[c,b]
        for a in range(DIM):
            add((a, b), a * DIM + c, p, q)
    for a, c, p, q in nz:  # -s g[a,c] X[c,b]
        for b in range(DIM):
            add((a, b), c * DIM + b, -s * p, -s * q)
    cleaned = {k: {f: (pq[0], pq[1]) for f, pq in v.items() if pq[0] or pq[1]} for k, v in eqs.items()}
    return _complex_rows(cleaned)


def _involution_rows(perm_pair) -> Iterator[dict[int, int]]:
    """Rows of ``X[f] = conj(X[perm(f)])`` for an involutive pairing of entries."""
    for f in range(N_ENTRIES):
        g = perm_pair(f)
        if g < f:
            continue
        if g == f:
            yield {2 * f + 1: 1}
        else:
            yield {2 * f: 1, 2 * g: -1}
            yield {2 * f + 1: 1, 2 * g + 1: 1}


def _j_pair(f: int) -> int:
    r, c = divmod(f, DIM)
    return J_PERMUTATION[r] * DIM + J_PERMUTATION[c]


def _dagger_pair(f: int) -> int:
    r, c = divmod(f, DIM)
    return c * DIM + r


@dataclass(frozen=True)
class CommuteWith:
    op: Mat = field(repr=False)
    name: str = ""
    order = 2

    def rows(self) -> Iterator[dict[int, int]]:
        return _bracket_rows(self.op, 1)

    def holds(self, x: Mat) -> bool:
        return commutator(x, self.op).is_zero()

    def describe(self) -> str:
        return f"commute with {self.name or 'operator'}"


@dataclass(frozen=True)
class AnticommuteWith:
    op: Mat = field(repr=False)
    name: str = ""
    order = 1

    def rows(self) -> Iterator[dict[int, int]]:
        return _bracket_rows(self.op, -1)

    def holds(self, x: Mat) -> bool:
        return anticommutator(x, self.op).is_zero()

    def describe(self) -> str:
        return f"anticommute with {self.name or 'operator'}"


@dataclass(frozen=True)
class CommuteWithJ:
    order = 0

    def rows(self) -> Iterator[dict[int, int]]:
        return _involution_rows(_j_pair)

    def holds(self, x: Mat) -> bool:
        return j_conjugate(x) == x

    def describe(self) -> str:
        return "commute with J"


@dataclass(frozen=True)
class SelfAdjoint:
    order = 4

    def rows(self) -> Iterator[dict[int, int]]:
        return _involution_rows(_dagger_pair)

    def holds(self, x: Mat) -> bool:
        return dagger(x) == x

    def describe(self) -> str:
        return "self-adjoint"


@dataclass(frozen=True)
class MemberOf:
    space: SubspaceBasis = field(repr=False)
    name: str = ""
    order = 3

    def rows(self) -> Iterator[dict[int, object]]:
        for r in self.space.annihilator().rows:
            yield dict(r)

    def holds(self, x: Mat) -> bool:
        return self.space.contains_vector(realify_sparse(x))

    def describe(self) -> str:
        return f"member of {self.name or 'subspace'}"


Constraint = CommuteWith | AnticommuteWith | CommuteWithJ | SelfAdjoint | MemberOf


@dataclass(frozen=True)
class DiracFamily:
    space: SubspaceBasis = field(repr=False)
    constraints: tuple = field(repr=False)
    case_tag: str | None = None

    @property
    def real_dim(self) -> int:
        return self.space.dim

    def operators(self) -> Iterator[Mat]:
        for r in self.space.rows:
            yield unrealify(dict(r))

    def recheck(self) -> bool:
        """Verify every basis operator against every constraint at operator level."""
        return all(c.holds(x) for x in self.operators() for c in self.constraints)


def lowering_order(constraints: Iterable[Constraint]) -> list[Constraint]:
    return sorted(constraints, key=lambda c: c.order)


def solve_space(constraints: Iterable[Constraint]) -> SubspaceBasis:
    ech = Echelon(REAL_DIM)
    for c in lowering_order(constraints):
        for row in c.rows():
            ech.add(row)
    return _nullspace_from_rref(REAL_DIM, ech.reduced())


def solve(constraints: Iterable[Constraint], case_tag: str | None = None, recheck: bool = False) -> DiracFamily:
    """Simultaneous solution space of ``constraints`` (canonical, order independent)."""
    cs = tuple(constraints)
    fam = DiracFamily(solve_space(cs), cs, case_tag)
    if recheck and not fam.recheck():
        raise AssertionError("solution basis violates a constraint")
    return fam


# --------------------------------------------------------------------------
# coefficient-level propositions


def _offsets(idx: Iterable[tuple[int, int, int, int, int, int]]) -> np.ndarray:
    out = []
    for i, j, k, l, r, s in idx:
        row, col = TensorIndex(k, l, i, j, r, s).to_offset()
        out.append(row * DIM + col)
    return np.array(out)


_ALL = [
    (i, j, k, l, r, s)
    for i in (1, 2)
    for j in (1, 2)
    for k in range(1, 5)
    for l in range(1, 5)
    for r in range(1, 5)
    for s in range(1, 5)
]
# D_{ijklrs} against D_{jilksr}
_SA_LEFT = _offsets(_ALL)
_SA_RIGHT = _offsets((j, i, l, k, s, r) for i, j, k, l, r, s in _ALL)
_KLRS = [(k, l, r, s) for k in range(1, 5) for l in range(1, 5) for r in range(1, 5) for s in range(1, 5)]
# D_{11klrs} against D_{22rskl}, and D_{12klrs} against D_{21rskl}
_J_LEFT = _offsets([(1, 1, k, l, r, s) for k, l, r, s in _KLRS] + [(1, 2, k, l, r, s) for k, l, r, s in _KLRS])
_J_RIGHT = _offsets([(2, 2, r, s, k, l) for k, l, r, s in _KLRS] + [(2, 1, r, s, k, l) for k, l, r, s in _KLRS])


def _conj_pairs_equal(x: Mat, left: np.ndarray, right: np.ndarray) -> bool:
    re, im = x.re.ravel(), x.im.ravel()
    return bool(np.all(re[left] == re[right]) and np.all(im[left] == -im[right]))


def selfadjoint_coefficient_check(x: Mat) -> bool:
    """``D_{ijklrs} = conj(D_{jilksr})`` for every index."""
    return _conj_pairs_equal(x, _SA_LEFT, _SA_RIGHT)


def j_commute_coefficient_check(x: Mat) -> bool:
    """``D_{11klrs} = conj(D_{22rskl})`` and ``D_{12klrs} = conj(D_{21rskl})``."""
    return _conj_pairs_equal(x, _J_LEFT, _J_RIGHT)


def split_D0(d: Mat) -> tuple[Mat, Mat]:
    """Split a J-commuting operator into ``D_0`` (sectors 11, 12) and ``J D_0 J^{-1}``."""
    if not j_commute_coefficient_check(d):
        raise ValueError("split_D0 requires an operator commuting with J")
    d0 = sector_part(d, 1, 1) + sector_part(d, 1, 2)
    return d0, j_conjugate(d0)


def riemannian_restriction(d: Mat) -> Mat:
    """Self-adjoint part ``(d + d^*) / 2``."""
    return (d + dagger(d)).scale(Fraction(1, 2))


def coordinate_projection(family: DiracFamily | SubspaceBasis, coords: Iterable[TensorIndex]) -> SubspaceBasis:
    """Image of the family under restriction to the listed tensor coordinates."""
    space = family.space if isinstance(family, DiracFamily) else family
    offsets = sorted({r * DIM + c for r, c in (t.to_offset() for t in coords)})
    if not offsets:
        raise ValueError("coordinate set must be nonempty")
    slot = {}
    for n, f in enumerate(offsets):
        slot[2 * f] = 2 * n
        slot[2 * f + 1] = 2 * n + 1
    images = ({slot[c]: v for c, v in r if c in slot} for r in space.rows)
    return SubspaceBasis.span(2 * len(offsets), images)
