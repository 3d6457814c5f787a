"""Built-in parametric families and the transcribed list of reduced-case betas.

Block anchoring conventions for the displays with partially blank blocks:
the first factor is split into row blocks ``{1,2} | {3,4}`` (right/left
chirality) and column blocks ``{1} | {2,3,4}``; the third factor into row
blocks ``{1} | {2,3,4}`` (lepton/colour) and column blocks ``{1,2} | {3,4}``.
These are the anchorings under which the displays reproduce the solved
spaces exactly; ``tests/test_presets.py`` shows the transposed alternatives
fail.
"""

from __future__ import annotations

from .commutant import Factor, ParametricForm, Term
from .exact import Mat
from .triple import embed, identity, ones, signs

R = (1, 2)
L = (3, 4)
LEPTON = (1,)
COLOUR = (2, 3, 4)
ALL = (1, 2, 3, 4)


def _diag_blocks(*groups: tuple[int, ...]) -> Factor:
    return Factor.blocks(*((g, g) for g in groups))


def _offdiag(a: tuple[int, ...], b: tuple[int, ...]) -> Factor:
    return Factor.blocks((a, b), (b, a))


def _proj(*idx: int) -> Mat:
    return Mat.diag([1 if n in idx else 0 for n in ALL])


# --------------------------------------------------------------------------
# commutants

COMMUTANT_UNREDUCED = ParametricForm(
    "commutant-unreduced",
    (
        Term(Factor.spanned(_proj(*R), _proj(*L), label="C1"), (1, 1), Factor.free("E1")),
        Term(Factor.fixed(ones(4)), (2, 2), Factor.free("E2")),
    ),
)

COMMUTANT_REDUCED = ParametricForm(
    "commutant-reduced",
    (
        Term(Factor.spanned(_proj(*R), _proj(*L), label="C1"), (1, 1), Factor.free("E1")),
        Term(Factor.spanned(_proj(*LEPTON), _proj(*COLOUR), label="C2"), (2, 2), Factor.free("E2")),
    ),
)

# --------------------------------------------------------------------------
# Dirac families (D_0 part, mirrored by J)

_E12_GAMMA = (
    Term(Factor.block(R, ALL, "[P Q; 0 0]"), (1, 2), Factor.block(ALL, R, "[Z 0; T 0]")),
    Term(Factor.block(L, ALL, "[0 0; U V]"), (1, 2), Factor.block(ALL, L, "[0 W; 0 S]")),
)

_E12_GAMMA_STAR = (
    Term(
        Factor.blocks((R, LEPTON), (L, COLOUR), label="[d1; d2; . P]"),
        (1, 2),
        Factor.blocks((LEPTON, R), (COLOUR, L), label="[s1 s2 .; . E]"),
    ),
    Term(
        Factor.blocks((R, COLOUR), (L, LEPTON), label="[. F; m1; m2]"),
        (1, 2),
        Factor.blocks((LEPTON, L), (COLOUR, R), label="[. n1 n2; G .]"),
    ),
)

DIRAC_GAMMA = ParametricForm(
    "dirac-gamma",
    (Term(_offdiag(R, L), (1, 1), Factor.free("A")),) + _E12_GAMMA,
    j_mirror=True,
)

DIRAC_GAMMA_STAR = ParametricForm(
    "dirac-gamma-star",
    (
        Term(_diag_blocks(R, L), (1, 1), _offdiag(LEPTON, COLOUR)),
        Term(_offdiag(R, L), (1, 1), _diag_blocks(LEPTON, COLOUR)),
    )
    + _E12_GAMMA_STAR,
    j_mirror=True,
)

BETA_NONTRIVIAL = ParametricForm(
    "beta-nontrivial",
    (Term(_diag_blocks(R, L), (1, 1), Factor.free("A")),) + _E12_GAMMA,
    j_mirror=True,
)

BETA_CASE2 = ParametricForm(
    "beta-case2",
    (
        Term(_diag_blocks(R, L), (1, 1), _diag_blocks(LEPTON, COLOUR)),
        Term(_offdiag(R, L), (1, 1), _offdiag(LEPTON, COLOUR)),
    )
    + _E12_GAMMA_STAR,
    j_mirror=True,
)

BETA_FINAL = ParametricForm(
    "beta-final",
    (
        Term(Factor.free("A11"), (1, 1), _diag_blocks(LEPTON, COLOUR)),
        Term(Factor.block(ALL, LEPTON, "delta column"), (1, 2), Factor.block(LEPTON, ALL, "sigma row")),
        Term(Factor.block(ALL, COLOUR, "[0 F]"), (1, 2), Factor.block(COLOUR, ALL, "[0; G]")),
    ),
    j_mirror=True,
)

# physically admissible family for the reduced algebra with the final beta
DIRAC_BETA_FINAL_GRADED = ParametricForm(
    "dirac-beta-final",
    (
        Term(_offdiag(R, L), (1, 1), _diag_blocks(LEPTON, COLOUR)),
        Term(Factor.block(R, LEPTON, "delta1,2"), (1, 2), Factor.block(LEPTON, R, "sigma1,2")),
        Term(Factor.block(L, COLOUR, "E1"), (1, 2), Factor.block(COLOUR, L, "F1")),
        Term(Factor.block(L, LEPTON, "delta3,4"), (1, 2), Factor.block(LEPTON, L, "sigma3,4")),
        Term(Factor.block(R, COLOUR, "E2"), (1, 2), Factor.block(COLOUR, R, "F2")),
    ),
    j_mirror=True,
)

FORMS = {
    f.name: f
    for f in (
        COMMUTANT_UNREDUCED,
        COMMUTANT_REDUCED,
        DIRAC_GAMMA,
        DIRAC_GAMMA_STAR,
        BETA_NONTRIVIAL,
        BETA_CASE2,
        BETA_FINAL,
        DIRAC_BETA_FINAL_GRADED,
    )
}


# --------------------------------------------------------------------------
# reduced-case betas as listed (order fixes the names beta1..beta8)

_PR, _PL = _proj(*R), _proj(*L)
_P1, _P3 = _proj(1), _proj(2, 3, 4)
_H = signs(1, 1, -1, -1)
_C = signs(1, -1, -1, -1)
_ONE = ones(4)


def listed_reduced_betas(as_printed: bool = False) -> dict[str, Mat]:
    """The eight reduced betas, transcribed term by term.

    The printed fourth entry carries a sign slip in its ``e22`` lepton block
    (it does not commute with ``J``); ``as_printed=True`` returns it
    verbatim, the default returns the J-consistent completion of its
    ``e11`` part.
    """
    b4_e22_lepton = signs(-1, -1, 1, 1) if as_printed else _H
    return {
        "b1": identity(),
        "b2": embed(_PR, 1, 1, _ONE) + embed(_PL, 1, 1, _C) + embed(_P1, 2, 2, _ONE) + embed(_P3, 2, 2, _H),
        "b3": embed(_H, 1, 1, _ONE) + embed(_ONE, 2, 2, _H),
        "b4": embed(_PR, 1, 1, _ONE)
        + embed(_PL, 1, 1, signs(-1, 1, 1, 1))
        + embed(_P1, 2, 2, b4_e22_lepton)
        + embed(_P3, 2, 2, _ONE),
        "b5": embed(_PR, 1, 1, _C) + embed(_PL, 1, 1, _ONE) + embed(_P1, 2, 2, _ONE) + embed(_P3, 2, 2, -_H),
        "b6": embed(_H, 1, 1, _C) + embed(_C, 2, 2, _H),
        "b7": embed(_ONE, 1, 1, _C) + embed(_C, 2, 2, _ONE),
        "b8": embed(_PR, 1, 1, _C) + embed(-_PL, 1, 1, _ONE) + embed(_P1, 2, 2, _H) + embed(-_P3, 2, 2, _ONE),
    }


# one-term sign patterns named after the propositions that study them
ONE_TERM_NAMES = {
    "unreduced": {"identity": (1, 1, 1), "nontrivial": (1, -1, 1)},
    "reduced": {
        "identity": (1, 1, 1, 1),
        "nontrivial": (1, -1, 1, 1),
        "case2": (-1, 1, 1, -1),
        "final": (1, 1, 1, -1),
    },
    "standard-model": {"identity": (1, 1, 1), "final": (1, 1, -1)},
}
