"""Random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from qgt import lie
from qgt.series import XY, exp

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def random_fraction(rng: random.Random, size: int = 3) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_lie(
    rng: random.Random, truncation: int, max_degree: int | None = None, density: float = 0.6, min_degree: int = 1
):
    top = truncation if max_degree is None else min(max_degree, truncation)
    coords = {}
    for d in range(min_degree, top + 1):
        for w in lie.lyndon_basis(d):
            if rng.random() < density:
                coords[w] = random_fraction(rng)
    return lie.LieElement(XY, truncation, coords)


def random_grouplike(rng: random.Random, truncation: int):
    return exp(lie.embed_lie(random_lie(rng, truncation)))
