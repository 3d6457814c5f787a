"""Exact dense linear algebra over the Gaussian rationals Q(i).

Matrices store integer numerator arrays for the real and imaginary parts
plus a single positive common denominator, kept in lowest terms.  Products
drop to machine integers whenever the entry bound proves the result cannot
overflow, and fall back to Python integers otherwise, so every result is
exact.

Subspaces are stored in reduced row-echelon form with the leftmost-pivot
rule.  Rows are kept sparse (sorted ``(column, value)`` pairs) because the
operator spaces handled here live in ambient dimension 2048 while their
constraint rows touch only a handful of coordinates.
"""

from __future__ import annotations

import heapq
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

Rational = Union[int, Fraction]

# int64 products are only used when |a|*|b|*n stays below this bound
_INT64_SAFE = 2**62

_GR_PATTERN = re.compile(r"([+-]?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)i")


class DimensionMismatch(ValueError):
    """Raised when two objects live in ambient spaces of different size."""


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar ``re + im*i`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: "Scalar") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts ``"p/q"`` and ``"p/q+r/s i"``."""
        s = text.replace(" ", "")
        if not s.endswith("i"):
            return cls(Fraction(s))
        m = _GR_PATTERN.fullmatch(s)
        if m is None:
            raise ValueError(f"not a Gaussian rational: {text!r}")
        real, sign, imag = m.groups()
        return cls(Fraction(real), Fraction(sign + imag))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)} i"

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: "Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: "Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: "Scalar") -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: "Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: "Scalar") -> "GaussianRational":
        o = GaussianRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: "Scalar") -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self == GaussianRational.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))


Scalar = Union[int, Fraction, complex, GaussianRational]

I = GaussianRational(0, 1)


def _obj(values: Iterable[int], shape: tuple[int, int]) -> np.ndarray:
    arr = np.empty(shape[0] * shape[1], dtype=object)
    arr[:] = list(values)
    return arr.reshape(shape)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(abs(int(arr.max())), abs(int(arr.min())))


def _int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ma, mb = _max_abs(a), _max_abs(b)
    if ma == 0 or mb == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)
    if ma * mb * max(a.shape[1], 1) < _INT64_SAFE:
        out = a.astype(np.int64) @ b.astype(np.int64)
        return out.astype(object)
    return a.dot(b)


class Mat:
    """Immutable matrix over Q(i): ``(re + i*im) / den`` with integer numerators."""

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re_num: np.ndarray, im_num: np.ndarray, den: int = 1) -> None:
        if re_num.shape != im_num.shape or re_num.ndim != 2:
            raise ValueError("real and imaginary numerators must be 2-d arrays of equal shape")
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = den
        for v in re_num.flat:
            if g == 1:
                break
            g = math.gcd(g, int(v))
        for v in im_num.flat:
            if g == 1:
                break
            g = math.gcd(g, int(v))
        if g > 1:
            re_num = re_num // g
            im_num = im_num // g
            den //= g
        re_num = re_num.astype(object)
        im_num = im_num.astype(object)
        re_num.flags.writeable = False
        im_num.flags.writeable = False
        self.re = re_num
        self.im = im_num
        self.den = int(den)
        self._hash: int | None = None

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        entries = [GaussianRational.coerce(x) for r in rows for x in r]
        return cls.from_entries(nrows, ncols, entries)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[Scalar]) -> "Mat":
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        gs = [GaussianRational.coerce(x) for x in entries]
        den = 1
        for g in gs:
            den = math.lcm(den, g.re.denominator, g.im.denominator)
        re_num = _obj((int(g.re * den) for g in gs), (rows, cols))
        im_num = _obj((int(g.im * den) for g in gs), (rows, cols))
        return cls(re_num, im_num, den)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: Mapping[tuple[int, int], Scalar]) -> "Mat":
        gs = {k: GaussianRational.coerce(v) for k, v in entries.items()}
        den = 1
        for g in gs.values():
            den = math.lcm(den, g.re.denominator, g.im.denominator)
        re_num = np.zeros((rows, cols), dtype=object)
        im_num = np.zeros((rows, cols), dtype=object)
        for (r, c), g in gs.items():
            re_num[r, c] = int(g.re * den)
            im_num[r, c] = int(g.im * den)
        return cls(re_num, im_num, den)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        z = np.zeros((rows, cols), dtype=object)
        return cls(z, z.copy())

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    @classmethod
    def unit(cls, n: int, i: int, j: int, m: int | None = None) -> "Mat":
        """Matrix unit with a single 1 at 0-based position ``(i, j)``."""
        out = np.zeros((n, n if m is None else m), dtype=np.int64)
        out[i, j] = 1
        return cls(out, np.zeros_like(out))

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "Mat":
        n = len(values)
        return cls.from_sparse(n, n, {(k, k): v for k, v in enumerate(values)})

    # inspection -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    @property
    def rows(self) -> int:
        return self.re.shape[0]

    @property
    def cols(self) -> int:
        return self.re.shape[1]

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        r, c = key
        return GaussianRational(Fraction(int(self.re[r, c]), self.den), Fraction(int(self.im[r, c]), self.den))

    @property
    def entries(self) -> tuple[GaussianRational, ...]:
        return tuple(self[r, c] for r in range(self.rows) for c in range(self.cols))

    def nonzero(self) -> Iterator[tuple[int, int, GaussianRational]]:
        mask = (self.re != 0) | (self.im != 0)
        for r, c in zip(*np.nonzero(mask)):
            yield int(r), int(c), self[int(r), int(c)]

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def is_real(self) -> bool:
        return not self.im.any()

    def to_rows(self) -> list[list[GaussianRational]]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.den == other.den
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self.den, tuple(self.re.flat), tuple(self.im.flat)))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols > 64:
            return f"Mat({self.rows}x{self.cols}, nnz={sum(1 for _ in self.nonzero())})"
        body = "; ".join(", ".join(str(x) for x in row) for row in self.to_rows())
        return f"Mat([{body}])"

    # arithmetic -----------------------------------------------------------

    def _aligned(self, other: "Mat") -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, int]:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        return self.re * fa, self.im * fa, other.re * fb, other.im * fb, den

    def __add__(self, other: "Mat") -> "Mat":
        ar, ai, br, bi, den = self._aligned(other)
        return Mat(ar + br, ai + bi, den)

    def __sub__(self, other: "Mat") -> "Mat":
        ar, ai, br, bi, den = self._aligned(other)
        return Mat(ar - br, ai - bi, den)

    def __neg__(self) -> "Mat":
        return Mat(-self.re, -self.im, self.den)

    def scale(self, c: Scalar) -> "Mat":
        g = GaussianRational.coerce(c)
        d = math.lcm(g.re.denominator, g.im.denominator)
        pr, pi = int(g.re * d), int(g.im * d)
        return Mat(self.re * pr - self.im * pi, self.re * pi + self.im * pr, self.den * d)

    def __rmul__(self, c: Scalar) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        rr = _int_matmul(self.re, other.re)
        ii = _int_matmul(self.im, other.im)
        ri = _int_matmul(self.re, other.im)
        ir = _int_matmul(self.im, other.re)
        return Mat(rr - ii, ri + ir, self.den * other.den)

    def conj(self) -> "Mat":
        return Mat(self.re, -self.im, self.den)

    def transpose(self) -> "Mat":
        return Mat(self.re.T.copy(), self.im.T.copy(), self.den)

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def dagger(self) -> "Mat":
        return Mat(self.re.T.copy(), -self.im.T, self.den)

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "Mat":
        """Return ``M[row_perm][:, col_perm]``."""
        rp, cp = np.asarray(row_perm), np.asarray(col_perm)
        return Mat(self.re[np.ix_(rp, cp)], self.im[np.ix_(rp, cp)], self.den)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return self.permute(rows, cols)


def commutator(a: Mat, b: Mat) -> Mat:
    return a @ b - b @ a


def anticommutator(a: Mat, b: Mat) -> Mat:
    return a @ b + b @ a


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    rr = np.kron(a.re, b.re) - np.kron(a.im, b.im)
    ii = np.kron(a.re, b.im) + np.kron(a.im, b.re)
    return Mat(rr.astype(object), ii.astype(object), a.den * b.den)


def dagger(a: Mat) -> Mat:
    return a.dagger()


def block_diag(*blocks: Mat) -> Mat:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    entries: dict[tuple[int, int], GaussianRational] = {}
    r0 = c0 = 0
    for b in blocks:
        for r, c, v in b.nonzero():
            entries[(r0 + r, c0 + c)] = v
        r0 += b.rows
        c0 += b.cols
    return Mat.from_sparse(n, m, entries)


# --------------------------------------------------------------------------
# sparse elimination core (works over Fraction or GaussianRational)

SparseRow = dict  # column -> nonzero field element


class Echelon:
    """Incremental row reduction producing a canonical RREF.

    Rows are added one at a time and reduced against the current pivots in
    increasing column order; each surviving row is normalised to a leading 1.
    ``reduced()`` performs the back substitution that makes the form unique.
    """

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}

    def reduce(self, row: Mapping[int, object]) -> SparseRow:
        """Reduce ``row`` against the stored pivots (forward elimination only)."""
        out: SparseRow = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        heap = [c for c in out if c in pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = out.get(c)
            if not coef:
                continue
            for j, v in pivots[c].items():
                old = out.get(j)
                if old is None:
                    out[j] = -coef * v
                    if j in pivots:
                        heapq.heappush(heap, j)
                else:
                    nv = old - coef * v
                    if nv:
                        out[j] = nv
                    else:
                        del out[j]
        return out

    def add(self, row: Mapping[int, object]) -> bool:
        """Add a row; return True if it increased the rank."""
        red = self.reduce(row)
        if not red:
            return False
        p = min(red)
        lead = red[p]
        if lead != 1:
            red = {c: v / lead for c, v in red.items()}
        self.pivots[p] = red
        return True

    def extend(self, rows: Iterable[Mapping[int, object]]) -> None:
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced(self) -> list[tuple[int, SparseRow]]:
        """Fully reduced rows as ``(pivot, row)`` sorted by pivot."""
        done: dict[int, SparseRow] = {}
        for p in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[p])
            for j in [c for c in row if c != p and c in done]:
                coef = row.pop(j)
                for k, v in done[j].items():
                    if k == j:
                        continue
                    nv = row.get(k, 0) - coef * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            done[p] = row
        return [(p, done[p]) for p in sorted(done)]


def _canonical_value(v: object) -> object:
    if isinstance(v, GaussianRational):
        return v.re if v.im == 0 else v
    return Fraction(v)


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical (RREF) basis of a linear subspace of ``F^ambient_dim``.

    ``rows`` holds the basis as sparse rows: tuples of ``(column, value)``
    pairs with a leading 1 at the pivot.  Two instances describe the same
    subspace exactly when they compare equal.
    """

    ambient_dim: int
    rows: tuple[tuple[tuple[int, object], ...], ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Mapping[int, object] | Sequence[object]]) -> "SubspaceBasis":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if not isinstance(v, Mapping):
                if len(v) != ambient_dim:
                    raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
                v = {c: x for c, x in enumerate(v) if x}
            ech.add(v)
        return cls.from_echelon(ech)

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "SubspaceBasis":
        rows = tuple(
            tuple(sorted((c, _canonical_value(v)) for c, v in row.items())) for _, row in ech.reduced()
        )
        return cls(ech.ncols, rows)

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(((c, Fraction(1)),) for c in range(ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r[0][0] for r in self.rows)

    def sparse_rows(self) -> list[dict[int, object]]:
        return [dict(r) for r in self.rows]

    def vectors(self) -> list[list[object]]:
        """Dense basis vectors (zeros filled in)."""
        out = []
        for r in self.rows:
            v: list[object] = [Fraction(0)] * self.ambient_dim
            for c, x in r:
                v[c] = x
            out.append(v)
        return out

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for r in self.rows:
            ech.pivots[r[0][0]] = dict(r)
        return ech

    def contains_vector(self, vec: Mapping[int, object]) -> bool:
        return not self.echelon().reduce(vec)

    def annihilator(self) -> "SubspaceBasis":
        """Canonical basis of the orthogonal complement under the standard bilinear pairing."""
        return _nullspace_from_rref(self.ambient_dim, [(r[0][0], dict(r)) for r in self.rows])

    def __contains__(self, vec: object) -> bool:
        if isinstance(vec, Mapping):
            return self.contains_vector(vec)
        return self.contains_vector({c: x for c, x in enumerate(vec) if x})  # type: ignore[arg-type]


def _nullspace_from_rref(ncols: int, rref_rows: Sequence[tuple[int, Mapping[int, object]]]) -> SubspaceBasis:
    pivot_set = {p for p, _ in rref_rows}
    by_col: dict[int, list[tuple[int, object]]] = {}
    for p, row in rref_rows:
        for c, v in row.items():
            if c != p:
                by_col.setdefault(c, []).append((p, v))
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec: dict[int, object] = {f: Fraction(1)}
        for p, v in by_col.get(f, ()):
            vec[p] = -v
        vectors.append(vec)
    return SubspaceBasis.span(ncols, vectors)


def _mat_sparse_rows(a: Mat) -> list[dict[int, object]]:
    rows: list[dict[int, object]] = [dict() for _ in range(a.rows)]
    for r, c, v in a.nonzero():
        rows[r][c] = v if v.im else v.re
    return rows


def rref(a: Mat) -> tuple[Mat, int]:
    """Reduced row-echelon form (leftmost pivot, full reduction) and rank."""
    ech = Echelon(a.cols)
    ech.extend(_mat_sparse_rows(a))
    red = ech.reduced()
    entries: dict[tuple[int, int], object] = {}
    for i, (_, row) in enumerate(red):
        for c, v in row.items():
            entries[(i, c)] = v
    return Mat.from_sparse(a.rows, a.cols, entries), len(red)


def rank(a: Mat) -> int:
    ech = Echelon(a.cols)
    ech.extend(_mat_sparse_rows(a))
    return ech.rank


def nullspace(a: Mat) -> SubspaceBasis:
    """Canonical basis of ``{x : a x = 0}``."""
    ech = Echelon(a.cols)
    ech.extend(_mat_sparse_rows(a))
    return _nullspace_from_rref(a.cols, ech.reduced())


def nullspace_rows(ncols: int, rows: Iterable[Mapping[int, object]]) -> SubspaceBasis:
    """Nullspace of a sparse system given as rows ``{column: coefficient}``."""
    ech = Echelon(ncols)
    ech.extend(rows)
    return _nullspace_from_rref(ncols, ech.reduced())


def _check_same_ambient(s: SubspaceBasis, t: SubspaceBasis) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}")


def subspace_equal(s: SubspaceBasis, t: SubspaceBasis) -> bool:
    _check_same_ambient(s, t)
    return s.rows == t.rows


def subspace_contains(s: SubspaceBasis, t: SubspaceBasis) -> bool:
    """True when ``t`` is a subspace of ``s``."""
    _check_same_ambient(s, t)
    if t.dim > s.dim:
        return False
    ech = s.echelon()
    return all(not ech.reduce(dict(r)) for r in t.rows)


def subspace_intersect(s: SubspaceBasis, t: SubspaceBasis) -> SubspaceBasis:
    _check_same_ambient(s, t)
    conditions = [dict(r) for r in s.annihilator().rows] + [dict(r) for r in t.annihilator().rows]
    return nullspace_rows(s.ambient_dim, conditions)


def subspace_sum(s: SubspaceBasis, t: SubspaceBasis) -> SubspaceBasis:
    _check_same_ambient(s, t)
    return SubspaceBasis.span(s.ambient_dim, [dict(r) for r in s.rows + t.rows])
