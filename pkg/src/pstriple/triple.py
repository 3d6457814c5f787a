"""Spectral data of the finite Pati-Salam triples.

The Hilbert space is ``H = F + F*`` with ``F`` the 4x4 fermion matrices
(rows: nu_R/e_R/nu_L/e_L, columns: lepton and three quark colours).  An
operator ``a (x) e_ij (x) b`` of ``M4 (x) M2 (x) M4`` sends the sector-``j``
component ``v`` to ``a v b^t`` in sector ``i``.  Basis vectors of ``H`` are
therefore indexed by ``(k, i, r)``: row of ``v``, sector, column of ``v``,
flattened as ``(k*2 + i)*4 + r`` (0-based).

Tensor indices are 1-based to agree with the usual ``e_kl (x) e_ij (x) e_rs``
notation; everything that touches numpy arrays is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exact import GaussianRational, I, Mat, Scalar, block_diag, dagger, kron

DIM = 32
SECTOR_NAMES = ("particle", "antiparticle")
_ROW_NAMES = (("nu", "u"), ("e", "d"), ("nu", "u"), ("e", "d"))
_ROW_CHIRALITY = ("R", "R", "L", "L")


def h_index(k: int, i: int, r: int) -> int:
    """0-based flat basis index of ``(k, i, r)`` given 0-based components."""
    return (k * 2 + i) * 4 + r


def h_components(n: int) -> tuple[int, int, int]:
    """Inverse of :func:`h_index` (0-based)."""
    return n // 8, (n // 4) % 2, n % 4


@dataclass(frozen=True, order=True)
class TensorIndex:
    """Coefficient position ``(k,l | i,j | r,s)`` of ``e_kl (x) e_ij (x) e_rs``, 1-based."""

    k: int
    l: int
    i: int
    j: int
    r: int
    s: int

    def __post_init__(self) -> None:
        for name, bound in (("k", 4), ("l", 4), ("i", 2), ("j", 2), ("r", 4), ("s", 4)):
            v = getattr(self, name)
            if not 1 <= v <= bound:
                raise ValueError(f"tensor index {name}={v} outside 1..{bound}")

    def to_flat(self) -> tuple[int, int]:
        """1-based ``(row, col)`` of the 32x32 matrix."""
        row = ((self.k - 1) * 2 + self.i - 1) * 4 + self.r
        col = ((self.l - 1) * 2 + self.j - 1) * 4 + self.s
        return row, col

    def to_offset(self) -> tuple[int, int]:
        row, col = self.to_flat()
        return row - 1, col - 1

    @classmethod
    def from_flat(cls, row: int, col: int) -> "TensorIndex":
        if not (1 <= row <= DIM and 1 <= col <= DIM):
            raise ValueError(f"flat index ({row}, {col}) outside 1..{DIM}")
        k, i, r = h_components(row - 1)
        l, j, s = h_components(col - 1)
        return cls(k + 1, l + 1, i + 1, j + 1, r + 1, s + 1)

    @classmethod
    def all(cls) -> Iterator["TensorIndex"]:
        for row in range(1, DIM + 1):
            for col in range(1, DIM + 1):
                yield cls.from_flat(row, col)


def entry(x: Mat, idx: TensorIndex) -> GaussianRational:
    r, c = idx.to_offset()
    return x[r, c]


def coefficient(x: Mat, i: int, j: int, k: int, l: int, r: int, s: int) -> GaussianRational:
    """``D_{ijklrs}``: coefficient of ``e_kl (x) e_ij (x) e_rs`` in ``x``."""
    return entry(x, TensorIndex(k, l, i, j, r, s))


def e(n: int, i: int, j: int) -> Mat:
    """1-based matrix unit ``e_ij`` of size ``n``."""
    return Mat.unit(n, i - 1, j - 1)


def ones(n: int) -> Mat:
    return Mat.identity(n)


def signs(*values: int) -> Mat:
    return Mat.diag(list(values))


def embed(a: Mat, i: int, j: int, b: Mat) -> Mat:
    """The operator ``a (x) e_ij (x) b`` on ``H``."""
    if a.shape != (4, 4) or b.shape != (4, 4):
        raise ValueError(f"embed expects 4x4 factors, got {a.shape} and {b.shape}")
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError(f"sector indices must be 1 or 2, got ({i}, {j})")
    return kron(kron(a, e(2, i, j)), b)


def identity() -> Mat:
    return Mat.identity(DIM)


@lru_cache(maxsize=None)
def gamma() -> Mat:
    """Chirality grading: right-handed +1 on particles, opposite on antiparticles."""
    return embed(signs(1, 1, -1, -1), 1, 1, ones(4)) + embed(ones(4), 2, 2, signs(-1, -1, 1, 1))


@lru_cache(maxsize=None)
def gamma_star() -> Mat:
    """Grading in which left-handed leptons share parity with right-handed quarks."""
    return embed(signs(1, 1, -1, -1), 1, 1, signs(1, -1, -1, -1)) + embed(
        signs(-1, 1, 1, 1), 2, 2, signs(1, 1, -1, -1)
    )


# J(v, w) = (w^*, v^*) with ^* the matrix adjoint: (k, i, r) <-> (r, 1-i, k) plus conjugation
J_PERMUTATION: tuple[int, ...] = tuple(
    h_index(r, 1 - i, k) for k, i, r in (h_components(n) for n in range(DIM))
)


def apply_J(v: Sequence[Scalar]) -> tuple[GaussianRational, ...]:
    if len(v) != DIM:
        raise ValueError(f"expected a {DIM}-vector")
    g = [GaussianRational.coerce(x) for x in v]
    return tuple(g[J_PERMUTATION[n]].conjugate() for n in range(DIM))


def j_conjugate(x: Mat) -> Mat:
    """``J x J^{-1}`` (antilinear in ``x``)."""
    return x.conj().permute(J_PERMUTATION, J_PERMUTATION)


def opposite(x: Mat) -> Mat:
    """``J x^* J^{-1}``."""
    return j_conjugate(dagger(x))


def sector_part(x: Mat, i: int, j: int) -> Mat:
    """Keep only the ``e_ij`` sector of ``x`` (1-based sector labels)."""
    rows = {n for n in range(DIM) if h_components(n)[1] == i - 1}
    cols = {n for n in range(DIM) if h_components(n)[1] == j - 1}
    entries = {}
    for r, c, v in x.nonzero():
        if r in rows and c in cols:
            entries[(r, c)] = v
    return Mat.from_sparse(DIM, DIM, entries)


# --------------------------------------------------------------------------
# particle labels


@dataclass(frozen=True)
class ParticleLabel:
    name: str
    chirality: str
    sector: str

    def __str__(self) -> str:
        bar = "" if self.sector == "particle" else "~"
        return f"{bar}{self.name}_{self.chirality}"


def label(flat_index: int) -> ParticleLabel:
    """Label of the 1-based basis vector ``flat_index`` of ``H``.

    The antiparticle of ``v_{kr}`` sits at ``(r, 2, k)``, so ``J`` maps every
    label to its own antiparticle.
    """
    if not 1 <= flat_index <= DIM:
        raise ValueError(f"basis index {flat_index} outside 1..{DIM}")
    k, i, r = h_components(flat_index - 1)
    row, col = (k, r) if i == 0 else (r, k)
    kind = _ROW_NAMES[row][0 if col == 0 else 1]
    name = kind if col == 0 else f"{kind}{col}"
    return ParticleLabel(name, _ROW_CHIRALITY[row], SECTOR_NAMES[i])


def index_of(lab: ParticleLabel) -> int:
    for n in range(1, DIM + 1):
        if label(n) == lab:
            return n
    raise KeyError(lab)


# --------------------------------------------------------------------------
# triple configuration


@dataclass(frozen=True)
class TripleConfig:
    ko_dimension: int = 6
    signature: tuple[int, int] = (0, 2)
    epsilon_dj: int = 1

    @property
    def p(self) -> int:
        return self.signature[0]

    def beta_gamma_sign(self) -> int:
        """Sign ``s`` in ``beta gamma = s gamma beta``."""
        return (-1) ** self.p

    def beta_j_sign(self) -> int:
        """Sign ``s`` in ``beta J = s J beta``."""
        return (-1) ** (self.p * (self.p - 1) // 2) * self.epsilon_dj**self.p

    def beta_d_sign(self) -> int:
        """Sign ``s`` in ``beta D_+ = s D_+ beta`` for the Riemannian restriction."""
        return (-1) ** self.p


CONFIG = TripleConfig()


# --------------------------------------------------------------------------
# algebras and representations

QUATERNION_UNITS: tuple[Mat, ...] = (
    Mat.identity(2),
    Mat.from_rows([[I, 0], [0, -I]]),
    Mat.from_rows([[0, 1], [-1, 0]]),
    Mat.from_rows([[0, I], [I, 0]]),
)

CASES = ("unreduced", "reduced", "standard-model")
CASE_ALIASES = {"unreduced": "unreduced", "reduced": "reduced", "sm": "standard-model", "standard-model": "standard-model"}


def quaternion(alpha: Scalar, beta: Scalar) -> Mat:
    a = GaussianRational.coerce(alpha)
    b = GaussianRational.coerce(beta)
    return Mat.from_rows([[a, b], [-b.conjugate(), a.conjugate()]])


def _block(x: Mat | Scalar, n: int, what: str) -> Mat:
    if not isinstance(x, Mat):
        if n != 1:
            raise ValueError(f"{what}: expected a {n}x{n} block, got a scalar")
        return Mat.from_rows([[x]])
    if x.shape != (n, n):
        raise ValueError(f"{what}: expected a {n}x{n} block, got {x.shape}")
    return x


@dataclass(frozen=True)
class AlgebraCase:
    tag: str
    block_sizes: tuple[int, ...]
    real_generators: tuple[Mat, ...] = field(repr=False)
    complexified_generators: tuple[Mat, ...] = field(repr=False)
    block_structure: dict = field(repr=False, hash=False, compare=False)

    @property
    def one_term_length(self) -> int:
        return len(self.block_sizes)


def rep(case: AlgebraCase | str, element: Sequence[Mat | Scalar]) -> Mat:
    """Representation of an algebra element on ``H``.

    ``element`` lists the direct-summand blocks: ``(q1, q2, m)`` for the
    unreduced algebra, ``(q1, q2, lam, n)`` for the reduced one and
    ``(lam, q, m)`` for the Standard Model.  Quaternions are 2x2 complex
    matrices; ``lam`` may be a scalar.
    """
    tag = case.tag if isinstance(case, AlgebraCase) else CASE_ALIASES[case]
    if tag == "unreduced":
        if len(element) != 3:
            raise ValueError("unreduced element is (q1, q2, m)")
        q1, q2, m = (_block(x, n, w) for x, n, w in zip(element, (2, 2, 4), ("q1", "q2", "m")))
        return kron(kron(block_diag(q1, q2), e(2, 1, 1)), ones(4)) + kron(kron(m, e(2, 2, 2)), ones(4))
    if tag == "reduced":
        if len(element) != 4:
            raise ValueError("reduced element is (q1, q2, lambda, n)")
        q1, q2, lam, n = (
            _block(x, k, w) for x, k, w in zip(element, (2, 2, 1, 3), ("q1", "q2", "lambda", "n"))
        )
        return kron(kron(block_diag(q1, q2), e(2, 1, 1)), ones(4)) + kron(
            kron(block_diag(lam, n), e(2, 2, 2)), ones(4)
        )
    if tag == "standard-model":
        if len(element) != 3:
            raise ValueError("standard-model element is (lambda, q, m)")
        lam, q, m = (_block(x, k, w) for x, k, w in zip(element, (1, 2, 3), ("lambda", "q", "m")))
        return kron(kron(block_diag(lam, lam.conj(), q), e(2, 1, 1)), ones(4)) + kron(
            kron(block_diag(lam, m), e(2, 2, 2)), ones(4)
        )
    raise ValueError(f"unknown algebra case {tag!r}")


def _units(n: int) -> list[Mat]:
    return [Mat.unit(n, a, b) for a in range(n) for b in range(n)]


def _real_basis_mn(n: int) -> list[Mat]:
    out = []
    for u in _units(n):
        out.append(u)
        out.append(u.scale(I))
    return out


def _zero(n: int) -> Mat:
    return Mat.zeros(n)


def _generators(tag: str, kinds: Sequence[tuple[int, str]], realify: bool) -> tuple[Mat, ...]:
    """Images of a basis of each summand, the other summands set to zero.

    ``kinds`` lists ``(size, 'H' | 'M')`` per summand.  With ``realify`` the
    basis is a real basis of the real algebra; otherwise it spans its
    complexification (matrix units for both quaternion and matrix blocks).
    """
    case = tag
    gens = []
    for pos, (n, kind) in enumerate(kinds):
        if realify:
            basis = list(QUATERNION_UNITS) if kind == "H" else _real_basis_mn(n)
        else:
            basis = _units(n)
        for b in basis:
            element = [_zero(m) for m, _ in kinds]
            element[pos] = b
            gens.append(rep(case, element))
    return tuple(gens)


def _sm_generators(realify: bool) -> tuple[Mat, ...]:
    gens = []
    if realify:
        gens.append(rep("standard-model", (Mat.identity(1), _zero(2), _zero(3))))
        gens.append(rep("standard-model", (Mat.from_rows([[I]]), _zero(2), _zero(3))))
    else:
        # complex span of pi(1), pi(i) on the lambda summand
        gens.append(embed(e(4, 1, 1), 1, 1, ones(4)) + embed(e(4, 1, 1), 2, 2, ones(4)))
        gens.append(embed(e(4, 2, 2), 1, 1, ones(4)))
    for b in QUATERNION_UNITS if realify else _units(2):
        gens.append(rep("standard-model", (_zero(1), b, _zero(3))))
    for b in _real_basis_mn(3) if realify else _units(3):
        gens.append(rep("standard-model", (_zero(1), _zero(2), b)))
    return tuple(gens)


@lru_cache(maxsize=None)
def algebra_case(tag: str) -> AlgebraCase:
    tag = CASE_ALIASES.get(tag, tag)
    if tag == "unreduced":
        kinds = ((2, "H"), (2, "H"), (4, "M"))
        return AlgebraCase(
            tag,
            (2, 2, 4),
            _generators(tag, kinds, True),
            _generators(tag, kinds, False),
            {"particle_first_factor": [[1, 2], [3, 4]], "antiparticle_first_factor": [[1, 2, 3, 4]]},
        )
    if tag == "reduced":
        kinds = ((2, "H"), (2, "H"), (1, "M"), (3, "M"))
        return AlgebraCase(
            tag,
            (2, 2, 1, 3),
            _generators(tag, kinds, True),
            _generators(tag, kinds, False),
            {"particle_first_factor": [[1, 2], [3, 4]], "antiparticle_first_factor": [[1], [2, 3, 4]]},
        )
    if tag == "standard-model":
        return AlgebraCase(
            tag,
            (1, 2, 3),
            _sm_generators(True),
            _sm_generators(False),
            {"particle_first_factor": [[1], [2], [3, 4]], "antiparticle_first_factor": [[1], [2, 3, 4]]},
        )
    raise ValueError(f"unknown algebra case {tag!r}")


def sign_element(case: AlgebraCase | str, sgn: Sequence[int]) -> tuple[Mat, ...]:
    """Algebra element whose blocks are ``sgn[b]`` times the identity."""
    c = case if isinstance(case, AlgebraCase) else algebra_case(case)
    if len(sgn) != len(c.block_sizes):
        raise ValueError(f"{c.tag} needs {len(c.block_sizes)} signs, got {len(sgn)}")
    return tuple(Mat.identity(n).scale(Fraction(s)) for n, s in zip(c.block_sizes, sgn))
