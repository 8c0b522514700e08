"""Acceptance criteria 1-12, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or directly as a script.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from support import element_from_oracle, random_element  # noqa: E402

from schrodinger.annihilators import EQUAL, compare_slices, intersection_check  # noqa: E402
from schrodinger.blocks import (  # noqa: E402
    BlockType, bgg_check, block_type, ext_table, expected_ext_integral, expected_ext_nonintegral,
    findim_projective, half_integer_block_check, truncated_projective,
)
from schrodinger.central import (  # noqa: E402
    HCPolynomial, casimir, center_basis, central_character, hc_homomorphism, verify_central,
)
from schrodinger.modules import Weight, dual_module, module_hom, tensor_sl2  # noqa: E402
from schrodinger.pbw import (  # noqa: E402
    GENERATORS, AlgebraElement, bracket, generator, multiply, sigma,
)
from schrodinger.verma import (  # noqa: E402
    format_vector, radical_module, simple_module, singular_vectors, verma,
)
from schrodinger.weyl import phi, phi_generator, tensor_with_M, weyl_module  # noqa: E402

F = Fraction

ALL_TYPES = [
    Weight(F(1, 3), 1),
    Weight(F(-1, 2), 1),
    Weight(2, 1),
    Weight(F(1, 3), 0),
    Weight(0, 0),
]


def crit1():
    c = casimir()
    return all(bracket(generator(g), c).is_zero() for g in GENERATORS) and verify_central(c)


def crit2():
    h, z = HCPolynomial.h(), HCPolynomial.z()
    target = z * (h + F(3, 2)) ** 2 - F(1, 4) * z
    literal = HCPolynomial({(2, 1): 1, (1, 1): 3, (0, 1): 2})
    return hc_homomorphism(casimir()) == target == literal


def crit3():
    assert {block_type(lam) for lam in ALL_TYPES} == set(BlockType)
    expected = [oracles.verma_dimension(i) for i in range(21)]
    return all(verma(lam, 20).character() == expected for lam in ALL_TYPES)


def crit4():
    for k in range(-10, 11):
        hv = F(k, 2)
        for zv in (F(1), F(2)):
            for n in range(1, 11):
                same = central_character(Weight(hv, zv)) == central_character(Weight(hv - n, zv))
                if same != (hv == F(n - 3, 2)):
                    return False
    return True


def crit5():
    # (a) half-integral weight lambda_1 = (-1/2, charge)
    for zv in (F(1), F(2), F(-3, 5)):
        M = verma(Weight(F(-1, 2), zv), 2)
        sv = singular_vectors(M, 2)
        if singular_vectors(M, 1) or len(sv) != 1:
            return False
        expected = {(1, 0, "v"): 2 * zv, (0, 2, "v"): F(1)}
        vec = dict(zip(M.labels[2], sv[0]))
        ratio = vec[(0, 2, "v")]
        if any(vec[k] != ratio * c for k, c in expected.items()):
            return False
    # (b) generic and integral weights with nonzero charge
    for lam in (Weight(F(1, 3), 1), Weight(F(-2, 7), 3), Weight(2, 1), Weight(-1, 1), Weight(0, F(1, 2))):
        M = verma(lam, 12)
        if any(singular_vectors(M, i) for i in range(1, 13)):
            return False
    # (c) zero charge: q v at depth 1
    for lam in (Weight(F(1, 3), 0), Weight(0, 0), Weight(F(-5, 2), 0)):
        M = verma(lam, 1)
        sv = singular_vectors(M, 1)
        if len(sv) != 1 or format_vector(M, 1, sv[0]) != "q v":
            return False
    return True


def crit6():
    D = 14
    table = ext_table(Weight(F(1, 3), 0), range(6), D)
    if any(table[f"{i},{j}"] != expected_ext_nonintegral(i, j) for i in range(6) for j in range(6)):
        return False
    # integral block around lambda = 0; index i is the weight -i, so the h-value is -i
    table = ext_table(Weight(0, 0), range(-4, 5), D)
    for i in range(-4, 5):
        for j in range(-4, 5):
            if table[f"{i},{j}"] != expected_ext_integral(-i, -j):
                return False
    return half_integer_block_check(F(1), 10).ok()


def crit7():
    return all(bgg_check(lam, k, 12) for lam in (Weight(F(1, 3), 0), Weight(0, 0)) for k in range(4))


def crit8():
    for i in range(5):
        table = findim_projective(i, 4)
        if any(table[j]["dim"] != (i + 1) * (j + 1) for j in range(5)):
            return False
        split = {i + 1: 1, i - 1: 1} if i else {1: 1}
        if table[1]["decomposition"] != split:
            return False
    return True


def crit9():
    for c in (F(1), F(-2), F(3, 7)):
        for x, y in itertools.product(GENERATORS, repeat=2):
            X, Y = phi_generator(x, c), phi_generator(y, c)
            if phi(bracket(generator(x), generator(y)), c) != X * Y - Y * X:
                return False
    rng = random.Random(2024)
    for _ in range(10):
        a = F(rng.randint(-12, 12), rng.choice([1, 2, 3, 5]))
        c = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 4]))
        T = tensor_with_M(a, 12, c)
        V = verma(Weight(a - F(1, 2), c), 12)
        if T.character() != V.character() or module_hom(V, T).dim < 1:
            return False
    return True


def crit10():
    return all(len(center_basis(d)) == oracles.center_count(d) for d in range(7))


def crit11():
    weights = [
        Weight(F(1, 3), 1), Weight(F(-2, 5), -2),
        Weight(F(-1, 2), 1), Weight(F(3, 2), 2),
        Weight(1, 1), Weight(-2, F(1, 2)),
        Weight(F(1, 3), 0), Weight(F(-7, 4), 0),
        Weight(0, 0), Weight(-3, 0),
        Weight(F(-3, 2), 1), Weight(5, -1),
    ]
    assert {block_type(lam) for lam in weights} == set(BlockType)
    if not all(compare_slices(lam, d) == EQUAL for lam in weights for d in (1, 2, 3)):
        return False
    sample = [Weight(F(k, 3), F(k + 1, 2)) for k in (1, 2, 4, 5, 7, 8, 10, 11)]
    return intersection_check(sample, 2) == 0


def crit12():
    rng = random.Random(7)
    for _ in range(200):
        u, v, w = (random_element(rng) for _ in range(3))
        if multiply(multiply(u, v), w) != multiply(u, multiply(v, w)):
            return False
    for x, y, w in itertools.product(GENERATORS, repeat=3):
        a, b, c = generator(x), generator(y), generator(w)
        if not (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero():
            return False
    for _ in range(200):
        u, v = random_element(rng), random_element(rng)
        if sigma(sigma(u)) != u or sigma(u * v) != sigma(v) * sigma(u):
            return False
    for n in range(5):
        for word in itertools.product(GENERATORS, repeat=n):
            if AlgebraElement.word(word) != element_from_oracle(oracles.normal_form("".join(word))):
                return False
    modules = []
    for lam in ALL_TYPES:
        V = verma(lam, 10)
        modules += [V, dual_module(V), simple_module(lam, 10), radical_module(lam, 10), tensor_sl2(V, 3)]
    for lam in (Weight(F(1, 3), 0), Weight(0, 0)):
        modules += [truncated_projective(lam, k, 8) for k in range(3)]
    modules += [weyl_module(F(2), 10), tensor_with_M(F(1, 3), 8, F(-1))]
    return all(M.relation_defects() == [] for M in modules)


CRITERIA = [
    (1, "Casimir centrality", crit1, 1),
    (2, "Harish-Chandra image of the Casimir", crit2, None),
    (3, "Verma weight-space dimensions", crit3, None),
    (4, "central-character criterion", crit4, None),
    (5, "singular vectors", crit5, 10),
    (6, "Ext tables and the two-vertex block", crit6, 60),
    (7, "BGG reciprocity", crit7, None),
    (8, "finite-dimensional projectives", crit8, None),
    (9, "Weyl realization", crit9, None),
    (10, "center dimensions up to degree 6", crit10, 120),
    (11, "annihilators centrally generated", crit11, None),
    (12, "property suites", crit12, None),
]


def evaluate(number, title, check, limit):
    start = time.perf_counter()
    ok = bool(check())
    elapsed = time.perf_counter() - start
    timed = limit is None or elapsed < limit
    status = "PASS" if ok and timed else "FAIL"
    note = f"{elapsed:.2f} s" + (f", limit {limit} s" if limit else "")
    if ok and not timed:
        note += ", too slow"
    return status, f"[{status}] criterion {number:2d}: {title} ({note})"


@pytest.mark.parametrize("number,title,check,limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit, capsys):
    status, line = evaluate(number, title, check, limit)
    with capsys.disabled():
        print("\n" + line)
    assert status == "PASS", line


if __name__ == "__main__":
    failed = 0
    for crit in CRITERIA:
        status, line = evaluate(*crit)
        print(line, flush=True)
        failed += status != "PASS"
    sys.exit(1 if failed else 0)
