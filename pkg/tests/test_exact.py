from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pstriple.exact import (
    DimensionMismatch,
    GaussianRational,
    I,
    Mat,
    SubspaceBasis,
    block_diag,
    commutator,
    dagger,
    kron,
    nullspace,
    rank,
    rref,
    subspace_contains,
    subspace_equal,
    subspace_intersect,
    subspace_sum,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)
small_ints = st.integers(min_value=-3, max_value=3)


def gaussian_matrices(rows, cols, elems=None):
    if elems is None:
        elems = st.builds(GaussianRational, small_ints, small_ints)
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(Mat.from_rows)


def same(a: sympy.Matrix, b: sympy.Matrix) -> bool:
    return (a - b).expand().is_zero_matrix


def to_sympy(m: Mat) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(v.re.numerator, v.re.denominator) + sympy.I * sympy.Rational(v.im.numerator, v.im.denominator) for v in row] for row in m.to_rows()]
    )


# -- scalars ----------------------------------------------------------------


def test_gaussian_string_forms():
    assert str(GaussianRational(Fraction(3, 4))) == "3/4"
    assert str(GaussianRational(1, -2)) == "1-2 i"
    assert str(GaussianRational(0, Fraction(1, 3))) == "0+1/3 i"
    assert str(GaussianRational(-5)) == "-5"


@given(gaussians)
def test_gaussian_parse_roundtrip(z):
    assert GaussianRational.parse(str(z)) == z


@pytest.mark.parametrize("bad", ["", "1+", "i", "1+2j", "1/0x", "1+2ii"])
def test_gaussian_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        GaussianRational.parse(bad)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


def test_i_squared():
    assert I * I == GaussianRational(-1)


# -- matrices -----------------------------------------------------------------


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Mat.zeros(2) @ Mat.zeros(3)
    with pytest.raises(DimensionMismatch):
        Mat.zeros(2) + Mat.zeros(2, 3)


def test_common_denominator_normalised():
    m = Mat.from_rows([[Fraction(1, 2), Fraction(1, 4)], [0, 1]])
    assert m.scale(4) == Mat.from_rows([[2, 1], [0, 4]])
    assert m[0, 1] == GaussianRational(Fraction(1, 4))


@settings(max_examples=40)
@given(gaussian_matrices(3, 3), gaussian_matrices(3, 3))
def test_matmul_matches_sympy(a, b):
    assert same(to_sympy(a @ b), to_sympy(a) * to_sympy(b))


def test_matmul_large_entries_exact():
    big = 2**70
    a = Mat.from_rows([[big, 1], [1, big]])
    b = a @ a
    assert b[0, 0] == GaussianRational(big * big + 1)


@settings(max_examples=30)
@given(gaussian_matrices(2, 2), gaussian_matrices(2, 2), gaussian_matrices(2, 2), gaussian_matrices(2, 2))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=30)
@given(gaussian_matrices(3, 3), gaussian_matrices(3, 3))
def test_dagger_reverses_products(a, b):
    assert dagger(a @ b) == dagger(b) @ dagger(a)
    assert dagger(dagger(a)) == a


def test_block_diag_and_commutator():
    a = Mat.from_rows([[1, 2], [3, 4]])
    bd = block_diag(a, Mat.identity(1))
    assert bd.shape == (3, 3)
    assert commutator(bd, Mat.identity(3)).is_zero()


# -- elimination --------------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(gaussian_matrices(4, 6))
def test_rank_and_rref_match_sympy(a):
    r, rk = rref(a)
    assert rk == rank(a) == to_sympy(a).rank()
    assert same(to_sympy(r), to_sympy(a).rref(simplify=True)[0])


@settings(max_examples=40, deadline=None)
@given(gaussian_matrices(3, 5, st.builds(GaussianRational, small_ints)))
def test_nullspace_rank_nullity(a):
    ns = nullspace(a)
    assert ns.dim + rank(a) == a.cols
    for v in ns.vectors():
        col = Mat.from_rows([[x] for x in v])
        assert (a @ col).is_zero()


def test_subspace_operations():
    e1 = SubspaceBasis.span(3, [{0: 1}])
    e2 = SubspaceBasis.span(3, [{1: 1}])
    plane = subspace_sum(e1, e2)
    diag = SubspaceBasis.span(3, [{0: 1, 1: 1}])
    assert plane.dim == 2
    assert subspace_contains(plane, diag)
    assert not subspace_contains(e1, diag)
    assert subspace_equal(subspace_intersect(plane, diag), diag)
    assert subspace_intersect(e1, e2).dim == 0
    assert subspace_equal(SubspaceBasis.span(3, [{0: 2, 1: 2}, {0: 1}]), plane)


def test_canonical_basis_is_order_independent():
    vs = [{0: 1, 2: 3}, {1: Fraction(1, 2)}, {0: 2, 1: 1, 2: 6}]
    a = SubspaceBasis.span(3, vs)
    b = SubspaceBasis.span(3, list(reversed(vs)))
    assert a.rows == b.rows
    assert a.dim == 2
