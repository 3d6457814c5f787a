"""Seeded random operators for property checks.

Samples are built so that the properties under test hold for a sizeable
fraction of them (symmetrised or family-drawn operators) rather than almost
never, which keeps equivalence checks meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exact import GaussianRational, Mat, dagger
from .triple import DIM, j_conjugate, sector_part


def random_scalar(rng: random.Random, bound: int = 3) -> GaussianRational:
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_operator(rng: random.Random, density: float = 0.05, sectors: Sequence[tuple[int, int]] | None = None) -> Mat:
    """Sparse Gaussian-integer operator, optionally restricted to tensor sectors."""
    entries = {}
    for r in range(DIM):
        for c in range(DIM):
            if rng.random() < density:
                entries[(r, c)] = random_scalar(rng)
    x = Mat.from_sparse(DIM, DIM, entries)
    if sectors is not None:
        parts = [sector_part(x, i, j) for i, j in sectors]
        x = parts[0]
        for p in parts[1:]:
            x = x + p
    return x


def random_symmetric_pair(rng: random.Random) -> Mat:
    """Operator that is self-adjoint, J-fixed, both or neither, chosen at random."""
    x = random_operator(rng)
    kind = rng.randrange(4)
    if kind & 1:
        x = x + dagger(x)
    if kind & 2:
        x = x + j_conjugate(x)
    if rng.random() < 0.2:
        # a single-entry perturbation usually breaks the symmetry
        r, c = rng.randrange(DIM), rng.randrange(DIM)
        x = x + Mat.from_sparse(DIM, DIM, {(r, c): random_scalar(rng, 1)})
    return x


def random_combination(rng: random.Random, basis: Sequence[Mat], terms: int = 4) -> Mat:
    x = Mat.zeros(DIM)
    for b in rng.sample(list(basis), min(terms, len(basis))):
        x = x + b.scale(Fraction(rng.choice((-2, -1, 1, 2))))
    return x
