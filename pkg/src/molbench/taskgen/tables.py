"""Sampling weight tables for customized-generation requirements.

Atom weights cover the 17-element vocabulary (carbon is mandatory and is
never drawn); bond weights cover the five checked categories. Group
weights live in the pattern registry.
"""

from __future__ import annotations

import random

ATOM_WEIGHTS = {
    "oxygen": 5, "nitrogen": 3, "sulfur": 3, "fluorine": 2, "chlorine": 2,
    "bromine": 2, "iodine": 2, "phosphorus": 1, "boron": 1, "silicon": 1,
    "selenium": 1, "tellurium": 1, "arsenic": 1, "antimony": 1, "bismuth": 1,
    "polonium": 1,
}

BOND_WEIGHTS = {"single": 5, "double": 4, "triple": 3, "rotatable": 1,
                "aromatic": 1}


def weighted_choice(rng: random.Random, weights: dict[str, int]) -> str:
    names = list(weights)
    return rng.choices(names, weights=[weights[n] for n in names], k=1)[0]


def weighted_sample_without_replacement(rng: random.Random,
                                        weights: dict[str, int],
                                        k: int) -> list[str]:
    pool = dict(weights)
    out = []
    for _ in range(min(k, len(pool))):
        name = weighted_choice(rng, pool)
        out.append(name)
        del pool[name]
    return out
