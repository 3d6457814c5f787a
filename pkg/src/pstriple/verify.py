"""Named verification checks reproducing the classification results.

Each check returns a pass flag and a small dictionary of exact details
(dimensions, counts, names).  Checks are registered in a fixed order so
that reports are deterministic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .beta import (
    beta_projections,
    enumerate_generic,
    enumerate_one_term,
    one_term_beta,
    resolve_beta,
    two_term_zero_cycle,
)
from .commutant import case_commutant, matches_parametric_form
from .constraints import (
    AnticommuteWith,
    CommuteWith,
    CommuteWithJ,
    j_commute_coefficient_check,
    selfadjoint_coefficient_check,
    solve,
    split_D0,
)
from .exact import Mat, anticommutator, commutator, dagger, subspace_equal
from .presets import FORMS, listed_reduced_betas
from .sampling import random_combination, random_operator, random_symmetric_pair
from .triple import CASES, DIM, J_PERMUTATION, algebra_case, gamma, gamma_star, identity, j_conjugate, opposite
from .verdict import dirac_constraints, grading_op, physical_betas, verdict_table

COEFFICIENT_SAMPLES = 250
LEMMA_SAMPLES = 120
SEED = 20240601

Details = dict


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    run: Callable[[], tuple[bool, Details]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    passed: bool
    details: Details

    def as_dict(self) -> dict:
        return {"name": self.name, "paper_anchor": self.anchor, "pass": self.passed}


REGISTRY: dict[str, Check] = {}


def check(name: str, anchor: str):
    def deco(fn: Callable[[], tuple[bool, Details]]):
        REGISTRY[name] = Check(name, anchor, fn)
        return fn

    return deco


# --------------------------------------------------------------------------
# commutants and structure


def _commutant_check(tag: str, form_name: str, expected: int) -> tuple[bool, Details]:
    res = case_commutant(tag)
    form = FORMS[form_name]
    match = matches_parametric_form(res.space, form)
    ok = res.complex_dim == expected == form.parameter_count() and match
    return ok, {"complex_dim": res.complex_dim, "parameter_count": form.parameter_count(), "form_match": match}


@check("commutant-unreduced", "commutant of the unreduced Pati-Salam algebra: A1 (x) e11 (x) E1 + 1_4 (x) e22 (x) E2")
def _commutant_unreduced():
    return _commutant_check("unreduced", "commutant-unreduced", 48)


@check("commutant-reduced", "commutant of the reduced Pati-Salam algebra: A1 in C1, A2 in C2")
def _commutant_reduced():
    return _commutant_check("reduced", "commutant-reduced", 64)


@check("commutant-real-generators", "commutant of the real algebra equals that of its complexification")
def _commutant_real():
    same = {tag: subspace_equal(case_commutant(tag).space, case_commutant(tag, complexified=False).space) for tag in CASES}
    # lambda acts on 8 copies (both sectors), lambda-bar, q and m on 4 each:
    # 64 + 16 + 16 + 16
    sm = case_commutant("standard-model").complex_dim
    return all(same.values()) and sm == 112, {"equal": same, "standard_model_complex_dim": sm}


@check("structure-signs", "KO-dimension 6 signs: J^2 = 1, J gamma = -gamma J, and the order-zero condition")
def _structure():
    one = identity()
    # J is entrywise conjugation followed by a real permutation, so J^2 = 1
    # amounts to that permutation being an involution
    j_squared = all(J_PERMUTATION[J_PERMUTATION[n]] == n for n in range(DIM))
    res = {
        "J_squared_identity": j_squared,
        "J_gamma": j_conjugate(gamma()) == -gamma(),
        "J_gamma_star": j_conjugate(gamma_star()) == -gamma_star(),
        "gamma_involution": gamma() @ gamma() == one and gamma_star() @ gamma_star() == one,
    }
    for tag in CASES:
        gens = algebra_case(tag).real_generators
        opp = [opposite(b) for b in gens]
        res[f"order_zero_{tag}"] = all(commutator(a, ob).is_zero() for a in gens for ob in opp)
        res[f"gamma_commutes_{tag}"] = all(commutator(a, gamma()).is_zero() for a in gens)
        res[f"gamma_star_commutes_{tag}"] = all(commutator(a, gamma_star()).is_zero() for a in gens)
    expect_star = {"unreduced": False, "reduced": True, "standard-model": True}
    ok = all(v for k, v in res.items() if not k.startswith("gamma_star_commutes")) and all(
        res[f"gamma_star_commutes_{t}"] == e for t, e in expect_star.items()
    )
    return ok, res


@check("coefficient-propositions", "coefficient form of D = D^* and DJ = JD")
def _coefficients():
    rng = random.Random(SEED)
    sa_agree = j_agree = sa_true = j_true = 0
    for _ in range(COEFFICIENT_SAMPLES):
        x = random_symmetric_pair(rng)
        sa, jj = dagger(x) == x, j_conjugate(x) == x
        sa_agree += selfadjoint_coefficient_check(x) == sa
        j_agree += j_commute_coefficient_check(x) == jj
        sa_true += sa
        j_true += jj
    n = COEFFICIENT_SAMPLES
    ok = sa_agree == n and j_agree == n and 0 < sa_true < n and 0 < j_true < n
    return ok, {"samples": n, "self_adjoint_agree": sa_agree, "j_agree": j_agree, "self_adjoint_true": sa_true, "j_true": j_true}


def lemma_sample(rng: random.Random) -> tuple[Mat, Mat, Mat]:
    """``(A, D0, D)`` with ``A`` sector-diagonal, ``AJ = +-JA`` and ``D = D0 + J D0 J^{-1}``."""
    betas = [c.op for tag in ("reduced", "standard-model") for c in enumerate_generic(tag)]
    kind = rng.randrange(3)
    if kind == 0:
        a = rng.choice(betas)
        d = random_combination(rng, list(_lemma_family("beta", a).operators())) if rng.random() < 0.7 else None
    elif kind == 1:
        name = rng.choice(("gamma", "gamma-star"))
        a = grading_op(name)
        d = random_combination(rng, list(_lemma_family(name, None).operators())) if rng.random() < 0.7 else None
    else:
        alpha = rng.choice((1, -1))
        a11 = random_operator(rng, 0.1, sectors=[(1, 1)])
        a = a11 + j_conjugate(a11).scale(alpha)
        d = None
    if d is None:
        d0 = random_operator(rng, 0.05, sectors=[(1, 1), (1, 2)])
        d = d0 + j_conjugate(d0)
    d0, _ = split_D0(d)
    return a, d0, d


_LEMMA_CACHE: dict = {}


def _lemma_family(kind: str, op: Mat | None):
    key = (kind, op)
    if key not in _LEMMA_CACHE:
        if kind == "beta":
            _LEMMA_CACHE[key] = solve([CommuteWithJ(), CommuteWith(op)])
        else:
            _LEMMA_CACHE[key] = solve([CommuteWithJ(), AnticommuteWith(grading_op(kind))])
    return _LEMMA_CACHE[key]


def lemma_holds(a: Mat, d0: Mat, d: Mat) -> tuple[bool, bool, bool]:
    """Agreement for commutator and anticommutator, plus whether any bracket vanished."""
    c_full, c_half = commutator(a, d).is_zero(), commutator(a, d0).is_zero()
    a_full, a_half = anticommutator(a, d).is_zero(), anticommutator(a, d0).is_zero()
    return c_full == c_half, a_full == a_half, c_full or a_full


@check("lemma-d0", "[A, D] = 0 iff [A, D_0] = 0, and analogously for anticommutators")
def _lemma():
    rng = random.Random(SEED + 1)
    comm = anti = vanished = 0
    for _ in range(LEMMA_SAMPLES):
        c, a, v = lemma_holds(*lemma_sample(rng))
        comm += c
        anti += a
        vanished += v
    n = LEMMA_SAMPLES
    return comm == n and anti == n and vanished > 0, {"samples": n, "commutator_agree": comm, "anticommutator_agree": anti, "vanishing_samples": vanished}


# --------------------------------------------------------------------------
# Dirac and beta families


def _family_check(constraints, form_name: str, expected_real: int) -> tuple[bool, Details]:
    fam = solve(constraints)
    form = FORMS[form_name]
    match = matches_parametric_form(fam.space, form)
    ok = fam.real_dim == expected_real == 2 * form.parameter_count() and match
    return ok, {"real_dim": fam.real_dim, "parameter_count": form.parameter_count(), "form_match": match}


@check("dirac-gamma", "Dirac operators commuting with J and anticommuting with gamma")
def _dirac_gamma():
    return _family_check(dirac_constraints("gamma"), "dirac-gamma", 512)


@check("dirac-gamma-star", "Dirac operators commuting with J and anticommuting with gamma_*")
def _dirac_gamma_star():
    return _family_check(dirac_constraints("gamma-star"), "dirac-gamma-star", 512)


@check("beta-nontrivial-family", "Dirac operators commuting with the nontrivial unreduced beta")
def _beta_nontrivial():
    return _family_check([CommuteWithJ(), CommuteWith(resolve_beta("unreduced", "nontrivial").op)], "beta-nontrivial", 512)


@check("beta-case2-family", "Dirac operators commuting with the second reduced one-term beta")
def _beta_case2():
    return _family_check([CommuteWithJ(), CommuteWith(resolve_beta("reduced", "case2").op)], "beta-case2", 512)


@check("beta-final-family", "Dirac operators commuting with the final reduced one-term beta")
def _beta_final():
    return _family_check([CommuteWithJ(), CommuteWith(resolve_beta("reduced", "final").op)], "beta-final", 640)


# --------------------------------------------------------------------------
# beta enumeration


def _same_ops(xs, ys) -> bool:
    return len(xs) == len(ys) and all(any(x == y or x == -y for y in ys) for x in xs)


@check("beta-unreduced-count", "unreduced case: exactly two betas, one-term or generic")
def _beta_unreduced():
    one = enumerate_one_term("unreduced")
    gen = enumerate_generic("unreduced")
    nontrivial = sum(not c.flags.is_trivial for c in one)
    same = _same_ops([c.op for c in one], [c.op for c in gen])
    return len(one) == 2 and nontrivial == 1 and same, {"one_term": len(one), "nontrivial": nontrivial, "generic": len(gen), "same_set": same}


@check("beta-reduced-one-term", "reduced case: four one-term betas, three nontrivial")
def _beta_reduced_one_term():
    one = enumerate_one_term("reduced")
    nontrivial = sum(not c.flags.is_trivial for c in one)
    witness = one_term_beta("reduced", (1, -1, 1, 1)).op == listed_reduced_betas()["b3"]
    return len(one) == 4 and nontrivial == 3 and witness, {"one_term": len(one), "nontrivial": nontrivial, "b3_witness": witness}


@check("beta-reduced-count", "reduced case: eight betas up to sign, four expressible by one term (b1, b3, b6, b7)")
def _beta_reduced():
    gen = enumerate_generic("reduced")
    listed = listed_reduced_betas()
    identical = [c.name for c in gen] == list(listed) and all(c.op == listed[c.name] for c in gen)
    expressible = sorted(c.name for c in gen if c.flags.is_one_term_expressible)
    zero = all(c.flags.is_zero_cycle for c in gen)
    one = [c.op for c in enumerate_one_term("reduced")]
    subset = all(any(x == c.op or x == -c.op for c in gen) for x in one)
    ok = len(gen) == 8 and identical and expressible == ["b1", "b3", "b6", "b7"] and zero and subset
    return ok, {"generic": len(gen), "matches_listed": identical, "one_term_expressible": expressible, "all_zero_cycles": zero, "one_term_subset": subset}


@check("beta-reduced-two-term", "reduced betas as two-term 0-cycles with signs eta_1..eta_4")
def _beta_two_term():
    listed = listed_reduced_betas()
    hits = {}
    for eta in itertools.product((1, -1), repeat=4):
        op = two_term_zero_cycle(eta)
        names = [n for n, x in listed.items() if x == op or x == -op]
        hits[",".join(map(str, eta))] = names[0] if len(names) == 1 else None
    covered = sorted({v for v in hits.values() if v})
    final = two_term_zero_cycle((1, -1, 1, -1)) == resolve_beta("reduced", "final").op
    return covered == sorted(listed) and None not in hits.values() and final, {"covered": covered, "final_witness": final}


@check("beta-standard-model-count", "standard-model case: 32 sign candidates eta_1..eta_6 up to global sign")
def _beta_sm():
    gen = enumerate_generic("standard-model")
    zero = sum(c.flags.is_zero_cycle for c in gen)
    return len(gen) == 32 and len(beta_projections("standard-model")) == 6, {"generic": len(gen), "zero_cycles": zero}


@check("beta-axioms", "every beta is a self-adjoint involution commuting with the algebra, J and gamma")
def _beta_axioms():
    bad = []
    for tag in CASES:
        for c in enumerate_generic(tag):
            f = c.flags
            if not (f.is_involution and f.is_self_adjoint and f.commutes_with_J and f.commutes_with_gamma and f.commutes_with_algebra):
                bad.append(f"{tag}:{c.name}")
    return not bad, {"failures": bad}


# --------------------------------------------------------------------------
# physics verdicts


@check("verdict-unreduced", "unreduced Pati-Salam: no nontrivial beta leaves the Yukawa terms")
def _verdict_unreduced():
    rows = [v for v in verdict_table() if v.case_tag == "unreduced" and not v.beta.flags.is_trivial]
    vanish = all(v.yukawa.lepton_dim == 0 and v.yukawa.quark_dim == 0 for v in rows)
    phys = physical_betas("unreduced", "gamma")
    return not phys and vanish and rows != [], {"nontrivial": len(rows), "physical": len(phys), "yukawa_vanish": vanish}


@check("verdict-reduced-gamma-star", "reduced Pati-Salam with gamma_*: the final beta is the only physical one")
def _verdict_star():
    phys = physical_betas("reduced", "gamma-star")
    names = [v.beta_name for v in phys]
    ok = len(phys) == 1 and phys[0].beta.op == resolve_beta("reduced", "final").op
    match = ok and matches_parametric_form(phys[0].dirac_family.space, FORMS["dirac-beta-final"])
    dim = phys[0].real_dim if phys else 0
    return ok and match and dim == 320, {"physical": names, "real_dim": dim, "form_match": match}


@check("verdict-reduced-gamma", "reduced Pati-Salam with gamma: same unique beta, same family as with gamma_*")
def _verdict_gamma():
    phys = physical_betas("reduced", "gamma")
    star = physical_betas("reduced", "gamma-star")
    ok = len(phys) == 1 and len(star) == 1 and phys[0].beta.op == star[0].beta.op
    same = ok and subspace_equal(phys[0].dirac_family.space, star[0].dirac_family.space)
    return ok and same, {"physical": [v.beta_name for v in phys], "same_family": same}


@check("verdict-standard-model", "Standard Model: exactly one nontrivial physical 0-cycle beta, the one-term final beta")
def _verdict_sm():
    phys = [v for v in physical_betas("standard-model", "gamma") if v.beta.flags.is_zero_cycle]
    final = resolve_beta("standard-model", "final").op
    ok = len(phys) == 1 and phys[0].beta.op in (final, -final) and phys[0].beta.flags.is_one_term_expressible
    return ok, {"physical": [v.beta_name for v in phys]}


@check("constraint-order", "solution spaces do not depend on the order of constraints")
def _order():
    beta = resolve_beta("reduced", "final").op
    cs = dirac_constraints("gamma-star", beta)
    spaces = [solve(list(p)).space for p in itertools.permutations(cs)]
    same = all(s.rows == spaces[0].rows for s in spaces)
    return same, {"permutations": len(spaces)}


# --------------------------------------------------------------------------


def check_names() -> list[str]:
    return list(REGISTRY)


def select(scope: str = "all") -> list[Check]:
    """Checks for ``all``, an exact check name, or a name prefix such as ``beta``."""
    if scope == "all":
        return list(REGISTRY.values())
    if scope in REGISTRY:
        return [REGISTRY[scope]]
    picked = [c for n, c in REGISTRY.items() if n.startswith(scope + "-")]
    if not picked:
        raise KeyError(f"unknown verification scope {scope!r}")
    return picked


def run_verify(scope: str = "all") -> list[CheckResult]:
    out = []
    for c in select(scope):
        passed, details = c.run()
        out.append(CheckResult(c.name, c.anchor, bool(passed), details))
    return out
