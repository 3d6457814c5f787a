from __future__ import annotations

import itertools

import pytest

from pstriple.beta import (
    beta_names,
    beta_projections,
    enumerate_generic,
    enumerate_one_term,
    is_zero_cycle,
    one_term_beta,
    one_term_expressible,
    resolve_beta,
    two_term_zero_cycle,
    zero_cycle_span,
)
from pstriple.constraints import realify_sparse, unrealify
from pstriple.exact import commutator
from pstriple.presets import listed_reduced_betas
from pstriple.triple import CASES, algebra_case, embed, gamma, ones, identity, j_conjugate, opposite, rep, sign_element


def test_one_term_examples():
    assert one_term_beta("unreduced", (1, 1, 1)).op == identity()
    assert one_term_beta("unreduced", (1, 1, 1)).flags.is_trivial
    nontrivial = one_term_beta("unreduced", (1, -1, 1))
    assert nontrivial.name == "nontrivial" and not nontrivial.flags.is_trivial
    assert one_term_beta("unreduced", (-1, 1, -1)).op == nontrivial.op


def test_one_term_errors():
    with pytest.raises(ValueError):
        one_term_beta("unreduced", (1, 1))
    with pytest.raises(ValueError):
        one_term_beta("reduced", (1, 1, 1))
    with pytest.raises(ValueError):
        one_term_beta("reduced", (1, 0, 1, 1))
    with pytest.raises(ValueError):
        enumerate_one_term("standard-model")


@pytest.mark.parametrize("tag, total, nontrivial", [("unreduced", 2, 1), ("reduced", 4, 3)])
def test_enumerate_one_term_counts(tag, total, nontrivial):
    cands = enumerate_one_term(tag)
    assert len(cands) == total
    assert sum(not c.flags.is_trivial for c in cands) == nontrivial
    for c in cands:
        f = c.flags
        assert f.is_involution and f.is_self_adjoint and f.commutes_with_J and f.commutes_with_gamma


@pytest.mark.parametrize("tag, expected", [("unreduced", 2), ("reduced", 8), ("standard-model", 32)])
def test_enumerate_generic_counts(tag, expected):
    cands = enumerate_generic(tag)
    assert len(cands) == expected == 2 ** (len(beta_projections(tag)) - 1)


@pytest.mark.parametrize("tag", CASES)
def test_generic_candidates_are_distinct_up_to_sign(tag):
    ops = [c.op for c in enumerate_generic(tag)]
    for a, b in itertools.combinations(ops, 2):
        assert a != b and a != -b


@pytest.mark.parametrize("tag", CASES)
def test_generic_invariants(tag):
    for c in enumerate_generic(tag):
        assert c.op @ c.op == identity()
        assert j_conjugate(c.op) == c.op
        assert c.op @ gamma() == gamma() @ c.op
        assert c.flags.is_trivial == (c.op in (identity(), -identity()))


@pytest.mark.parametrize("tag", ["unreduced", "reduced"])
def test_one_term_subset_of_generic(tag):
    gen = [c.op for c in enumerate_generic(tag)]
    for c in enumerate_one_term(tag):
        assert any(c.op == g or c.op == -g for g in gen)


def test_unreduced_generic_equals_one_term():
    gen = {c.name for c in enumerate_generic("unreduced")}
    assert gen == {"identity", "nontrivial"}


def test_reduced_generic_matches_listed():
    listed = listed_reduced_betas()
    gen = enumerate_generic("reduced")
    assert [c.name for c in gen] == list(listed)
    for c in gen:
        assert c.op == listed[c.name]
        assert c.flags.is_zero_cycle
    assert sorted(c.name for c in gen if c.flags.is_one_term_expressible) == ["b1", "b3", "b6", "b7"]


def test_one_term_witnesses():
    listed = listed_reduced_betas()
    assert one_term_expressible(listed["b3"], "reduced") == (1, -1, 1, 1)
    assert one_term_expressible(listed["b2"], "reduced") is None
    assert is_zero_cycle(listed["b2"], "reduced")
    assert one_term_expressible(identity(), "reduced") == (1, 1, 1, 1)


def test_two_term_zero_cycles_cover_listed():
    listed = listed_reduced_betas()
    for cand in enumerate_generic("reduced"):
        assert two_term_zero_cycle(cand.sign_pattern) == listed[cand.name]
    assert two_term_zero_cycle((1, -1, 1, -1)) == resolve_beta("reduced", "final").op
    with pytest.raises(ValueError):
        two_term_zero_cycle((1, 1))


@pytest.mark.parametrize("tag", CASES)
def test_zero_cycle_span(tag):
    span = zero_cycle_span(tag)
    assert span.contains_vector(realify_sparse(identity()))
    # closed under left multiplication by the algebra
    for g in algebra_case(tag).real_generators[:6]:
        for row in span.rows[:6]:
            x = unrealify(dict(row))
            assert span.contains_vector(realify_sparse(g @ x))


def test_zero_cycles_are_sector_diagonal():
    # pi(a) and J pi(b) J^-1 never mix particles with antiparticles
    mixing = embed(ones(4), 1, 2, ones(4)) + embed(ones(4), 2, 1, ones(4))
    for tag in CASES:
        assert not is_zero_cycle(mixing, tag)
    assert is_zero_cycle(gamma(), "unreduced") and is_zero_cycle(gamma(), "reduced")


def test_standard_model_final_is_one_term():
    final = resolve_beta("standard-model", "final")
    assert final.witness is not None
    a = rep("standard-model", sign_element("standard-model", (1, 1, -1)))
    assert final.op == a @ opposite(a)
    generic_names = [c.name for c in enumerate_generic("standard-model")]
    assert "final" in generic_names and "identity" in generic_names


def test_resolve_beta():
    assert resolve_beta("reduced", "b7").op == resolve_beta("reduced", "final").op
    assert resolve_beta("sm", "one:1,1,-1").op == resolve_beta("sm", "final").op
    eta = resolve_beta("reduced", "eta:1,-1,1,-1")
    assert eta.name == "b7"
    flipped = resolve_beta("reduced", "eta:-1,1,-1,1")
    assert flipped.op == -eta.op
    with pytest.raises(KeyError):
        resolve_beta("unreduced", "b7")
    with pytest.raises(ValueError):
        resolve_beta("reduced", "eta:1,1")
    assert "b7" in beta_names("reduced") and "b7" not in beta_names("unreduced")


def test_betas_commute_with_algebra():
    for tag in CASES:
        for c in enumerate_generic(tag):
            assert all(commutator(c.op, g).is_zero() for g in algebra_case(tag).real_generators[::3])
