"""Acceptance criteria, one test each, printing a single PASS/FAIL line."""

from __future__ import annotations

import itertools
import random

from pstriple.beta import enumerate_generic, enumerate_one_term, resolve_beta
from pstriple.cli import build_report, emit_report, parse_args
from pstriple.commutant import case_commutant, matches_parametric_form
from pstriple.constraints import (
    AnticommuteWith,
    CommuteWith,
    CommuteWithJ,
    SelfAdjoint,
    j_commute_coefficient_check,
    selfadjoint_coefficient_check,
    solve,
)
from pstriple.exact import commutator, dagger, subspace_equal
from pstriple.presets import FORMS, listed_reduced_betas
from pstriple.sampling import random_symmetric_pair
from pstriple.triple import CASES, J_PERMUTATION, algebra_case, gamma, gamma_star, j_conjugate
from pstriple.verdict import physical_betas, verdict_table
from pstriple.verify import lemma_holds, lemma_sample


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


def test_criterion_1_commutants(capsys):
    un, red = case_commutant("unreduced"), case_commutant("reduced")
    un_form, red_form = FORMS["commutant-unreduced"], FORMS["commutant-reduced"]
    ok = (
        un.complex_dim == un_form.parameter_count() == 48
        and red.complex_dim == red_form.parameter_count() == 64
        and matches_parametric_form(un.space, un_form)
        and matches_parametric_form(red.space, red_form)
    )
    report(capsys, 1, ok, f"complex dims {un.complex_dim}, {red.complex_dim}")


def test_criterion_2_coefficient_propositions(capsys):
    rng = random.Random(1)
    n = 1000
    agree = 0
    for _ in range(n):
        x = random_symmetric_pair(rng)
        agree += selfadjoint_coefficient_check(x) == (dagger(x) == x) and j_commute_coefficient_check(x) == (j_conjugate(x) == x)
    report(capsys, 2, agree == n, f"{agree}/{n} operators agree")


def test_criterion_3_dirac_families(capsys):
    results = []
    for grading, form in ((gamma(), "dirac-gamma"), (gamma_star(), "dirac-gamma-star")):
        fam = solve([CommuteWithJ(), AnticommuteWith(grading)])
        f = FORMS[form]
        results.append((fam.real_dim, fam.real_dim == 512 == 2 * f.parameter_count() and matches_parametric_form(fam.space, f)))
    report(capsys, 3, all(ok for _, ok in results), f"real dims {[d for d, _ in results]}")


def test_criterion_4_beta_families(capsys):
    rows = []
    for case, name, form in (("unreduced", "nontrivial", "beta-nontrivial"), ("reduced", "case2", "beta-case2"), ("reduced", "final", "beta-final")):
        fam = solve([CommuteWithJ(), CommuteWith(resolve_beta(case, name).op)])
        f = FORMS[form]
        rows.append((name, fam.real_dim, fam.real_dim == 2 * f.parameter_count() and matches_parametric_form(fam.space, f)))
    report(capsys, 4, all(ok for *_, ok in rows), ", ".join(f"{n} {d}" for n, d, _ in rows))


def test_criterion_5_beta_enumeration(capsys):
    un = enumerate_one_term("unreduced")
    red = enumerate_one_term("reduced")
    gen = enumerate_generic("reduced")
    listed = listed_reduced_betas()
    ok = (
        len(un) == 2
        and sum(not c.flags.is_trivial for c in un) == 1
        and len(red) == 4
        and sum(not c.flags.is_trivial for c in red) == 3
        and len(gen) == 8
        and all(c.op == listed[c.name] for c in gen)
        and sorted(listed) == sorted(c.name for c in gen)
        and sorted(c.name for c in gen if c.flags.is_one_term_expressible) == ["b1", "b3", "b6", "b7"]
        and all(c.flags.is_zero_cycle for c in gen)
    )
    report(capsys, 5, ok, f"one-term {len(un)}/{len(red)}, reduced generic {len(gen)}")


def test_criterion_6_physics_verdicts(capsys):
    table = verdict_table()
    un_rows = [v for v in table if v.case_tag == "unreduced" and v.beta_name == "nontrivial"]
    a = len(un_rows) == 1 and not un_rows[0].physical and un_rows[0].yukawa.lepton_dim == un_rows[0].yukawa.quark_dim == 0
    star = physical_betas("reduced", "gamma-star")
    final = resolve_beta("reduced", "final").op
    b = (
        len(star) == 1
        and star[0].beta.op == final
        and star[0].real_dim == 320 == 2 * FORMS["dirac-beta-final"].parameter_count()
        and matches_parametric_form(star[0].dirac_family.space, FORMS["dirac-beta-final"])
    )
    plain = physical_betas("reduced", "gamma")
    c = len(plain) == 1 and plain[0].beta.op == final and b and subspace_equal(plain[0].dirac_family.space, star[0].dirac_family.space)
    sm = [v for v in physical_betas("standard-model", "gamma") if v.beta.flags.is_zero_cycle]
    d = len(sm) == 1 and sm[0].beta.flags.is_one_term_expressible
    report(capsys, 6, a and b and c and d, f"(a) {a} (b) {b} (c) {c} (d) {d}, standard-model physical {[v.beta_name for v in sm]}")


def test_criterion_7_structural_signs(capsys):
    j_sq = all(J_PERMUTATION[J_PERMUTATION[n]] == n for n in range(32))
    signs = j_conjugate(gamma()) == -gamma() and j_conjugate(gamma_star()) == -gamma_star()
    betas = all(
        j_conjugate(c.op) == c.op and c.op @ gamma() == gamma() @ c.op
        for tag in CASES
        for c in enumerate_generic(tag)
    ) and all(j_conjugate(c.op) == c.op and c.op @ gamma() == gamma() @ c.op for tag in ("unreduced", "reduced") for c in enumerate_one_term(tag))
    red = all(commutator(g, gamma_star()).is_zero() for g in algebra_case("reduced").real_generators)
    un = any(not commutator(g, gamma_star()).is_zero() for g in algebra_case("unreduced").real_generators)
    ok = j_sq and signs and betas and red and un
    report(capsys, 7, ok, f"J^2 {j_sq}, gradings odd {signs}, betas {betas}, gamma_* reduced {red}, unreduced fails {un}")


def test_criterion_8_lemma(capsys):
    rng = random.Random(2)
    n = 150
    comm = anti = vanished = 0
    for _ in range(n):
        c, a, v = lemma_holds(*lemma_sample(rng))
        comm += c
        anti += a
        vanished += v
    ok = comm == n and anti == n and vanished > 0
    report(capsys, 8, ok, f"commutator {comm}/{n}, anticommutator {anti}/{n}, vanishing brackets in {vanished}")


def test_criterion_9_determinism(capsys):
    spec = parse_args(["verify", "all"])
    first = emit_report(build_report(spec))
    second = emit_report(build_report(spec))
    beta = resolve_beta("reduced", "final").op
    cs = [CommuteWithJ(), AnticommuteWith(gamma_star()), CommuteWith(beta), SelfAdjoint()]
    spaces = {tuple(solve(list(p)).space.rows) for p in itertools.permutations(cs)}
    ok = first == second and len(spaces) == 1 and b'"pass": false' not in first
    report(capsys, 9, ok, f"report bytes identical {first == second}, {len(spaces)} distinct space over 24 orders")
