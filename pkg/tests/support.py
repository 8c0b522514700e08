"""Shared fixtures-by-function for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from schrodinger.pbw import AlgebraElement, monomials_up_to

_MONOS = {d: monomials_up_to(d) for d in range(4)}


def random_element(rng: random.Random, degree: int = 3, terms: int = 3) -> AlgebraElement:
    """A sparse element of U_<=degree with small integer coefficients."""
    monos = _MONOS[degree]
    out = {}
    for _ in range(terms):
        out[rng.choice(monos)] = Fraction(rng.randint(-3, 3))
    return AlgebraElement(out)


def element_from_oracle(nf: dict) -> AlgebraElement:
    return AlgebraElement({tuple(k): v for k, v in nf.items()})
