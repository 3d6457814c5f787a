"""Commutants inside End(H) and parametric block forms.

A :class:`ParametricForm` is a finite sum of tensor monomials
``A (x) e_ij (x) B`` whose outer factors range over given linear spans of
4x4 matrices.  Instantiating every free slot with a spanning element yields
a spanning set of the family, so a displayed family can be compared with a
computed solution space by plain subspace equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .constraints import REAL_DIM, CommuteWith, coordinate_projection, realify_sparse, solve
from .exact import I, Mat, SubspaceBasis, subspace_equal
from .triple import DIM, TensorIndex, algebra_case, embed, j_conjugate


@dataclass(frozen=True)
class Factor:
    """Linear span of 4x4 matrices filling one outer tensor slot."""

    span: tuple[Mat, ...] = field(repr=False)
    label: str = ""

    @classmethod
    def block(cls, rows: Iterable[int], cols: Iterable[int], label: str = "") -> "Factor":
        return cls.blocks((rows, cols), label=label)

    @classmethod
    def blocks(cls, *rects: tuple[Iterable[int], Iterable[int]], label: str = "") -> "Factor":
        """Free entries on a union of rectangles ``(rows, cols)`` (1-based)."""
        cells = sorted({(r, c) for rows, cols in rects for r in rows for c in cols})
        return cls(tuple(Mat.unit(4, r - 1, c - 1) for r, c in cells), label)

    @classmethod
    def free(cls, label: str = "") -> "Factor":
        return cls.block(range(1, 5), range(1, 5), label)

    @classmethod
    def fixed(cls, m: Mat, label: str = "") -> "Factor":
        return cls((m,), label)

    @classmethod
    def spanned(cls, *ms: Mat, label: str = "") -> "Factor":
        return cls(tuple(ms), label)

    @property
    def size(self) -> int:
        return len(self.span)


@dataclass(frozen=True)
class Term:
    first: Factor
    sector: tuple[int, int]
    third: Factor


@dataclass(frozen=True)
class ParametricForm:
    """Complex span of ``sum_k A_k (x) e_ij (x) B_k`` over the listed terms.

    With ``j_mirror`` the family is ``{D_0 + J D_0 J^{-1}}`` for ``D_0`` in
    that span, which is how the Dirac-operator families are displayed.
    """

    name: str
    terms: tuple[Term, ...]
    j_mirror: bool = False

    def monomials(self) -> Iterator[Mat]:
        for t in self.terms:
            i, j = t.sector
            for a in t.first.span:
                for b in t.third.span:
                    yield embed(a, i, j, b)

    def parameter_count(self) -> int:
        """Complex slot count; equals the complex dimension when slots are independent."""
        return sum(t.first.size * t.third.size for t in self.terms)

    def real_span(self) -> SubspaceBasis:
        vectors = []
        for x in self.monomials():
            for y in (x, x.scale(I)):
                if self.j_mirror:
                    y = y + j_conjugate(y)
                vectors.append(realify_sparse(y))
        return SubspaceBasis.span(REAL_DIM, vectors)


def matches_parametric_form(space: SubspaceBasis, form: ParametricForm) -> bool:
    return subspace_equal(form.real_span(), space)


# --------------------------------------------------------------------------
# commutants


@dataclass(frozen=True)
class CommutantResult:
    space: SubspaceBasis = field(repr=False)
    complex_dim: int
    structure: dict = field(compare=False, hash=False)

    @property
    def real_dim(self) -> int:
        return self.space.dim


def is_complex_subspace(space: SubspaceBasis) -> bool:
    """True when the realified space is closed under multiplication by ``i``."""
    ech = space.echelon()
    for row in space.rows:
        turned = {}
        for c, v in row:
            if c % 2 == 0:
                turned[c + 1] = v
            else:
                turned[c - 1] = -v
        if ech.reduce(turned):
            return False
    return True


def _sector_coords(i: int, j: int) -> list[TensorIndex]:
    return [
        TensorIndex(k, l, i, j, r, s)
        for k in range(1, 5)
        for l in range(1, 5)
        for r in range(1, 5)
        for s in range(1, 5)
    ]


def structure_report(space: SubspaceBasis) -> dict:
    """Per-sector dimension and first/third-factor supports of a realified space."""
    out: dict = {}
    for i in (1, 2):
        for j in (1, 2):
            proj = coordinate_projection(space, _sector_coords(i, j))
            first: set[tuple[int, int]] = set()
            third: set[tuple[int, int]] = set()
            for row in space.rows:
                for c, _ in row:
                    f = c // 2
                    idx = TensorIndex.from_flat(f // DIM + 1, f % DIM + 1)
                    if (idx.i, idx.j) == (i, j):
                        first.add((idx.k, idx.l))
                        third.add((idx.r, idx.s))
            out[f"{i}{j}"] = {
                "real_dim": proj.dim,
                "first_factor_support": sorted(first),
                "third_factor_support": sorted(third),
            }
    return out


def commutant(generators: Sequence[Mat]) -> CommutantResult:
    """Operators commuting with every generator."""
    if not generators:
        raise ValueError("commutant needs at least one generator")
    fam = solve([CommuteWith(g) for g in generators])
    if fam.space.dim % 2 or not is_complex_subspace(fam.space):
        raise ArithmeticError("commutant of a *-closed set must be complex-linear")
    return CommutantResult(fam.space, fam.space.dim // 2, structure_report(fam.space))


@lru_cache(maxsize=None)
def case_commutant(tag: str, complexified: bool = True) -> CommutantResult:
    case = algebra_case(tag)
    gens = case.complexified_generators if complexified else case.real_generators
    return commutant(gens)
