import random
from fractions import Fraction

import pytest

from schrodinger.annihilators import (
    EQUAL, FilteredIdealSlice, _action_on_verma, annihilator_slice, central_ideal_slice,
    compare_slices, intersection_check,
)
from schrodinger.central import casimir
from schrodinger.modules import Weight
from schrodinger.pbw import AlgebraElement, generator, monomials_up_to

import oracles
from support import random_element

F = Fraction
z = generator("z")


def kills(u, lam, grid):
    """u . f^a q^b v = 0 for all a, b <= grid, via the independent rewriter."""
    for a in range(grid + 1):
        for b in range(grid + 1):
            total = {}
            for m, c in u.items():
                word = "".join(g * k for g, k in zip("fqhzpe", m))
                for key, val in oracles.verma_action(word, a, b, lam.h_val, lam.z_val).items():
                    total[key] = total.get(key, 0) + c * val
            if any(total.values()):
                return False
    return True


def test_annihilator_examples():
    assert annihilator_slice(Weight(F(2, 3), 0), 1).contains(z)
    s = annihilator_slice(Weight(1, 1), 1)
    assert s.dim == 1 and s.contains(z - 1)
    assert annihilator_slice(Weight(1, 1), 3).contains(casimir() - 6)


def test_bound():
    with pytest.raises(ValueError):
        annihilator_slice(Weight(1, 1), 5)
    with pytest.raises(ValueError):
        annihilator_slice(Weight(1, 1), -1)
    with pytest.raises(ValueError):
        central_ideal_slice(Weight(1, 1), 0)


def test_central_slice_examples():
    lam = Weight(1, 1)
    assert central_ideal_slice(lam, 1) == FilteredIdealSlice.from_elements(1, [z - 1])
    assert central_ideal_slice(lam, 2).dim == len(monomials_up_to(1)) == 7
    s3 = central_ideal_slice(lam, 3)
    assert s3.contains(casimir() - 6)
    for m in monomials_up_to(2):
        assert s3.contains(AlgebraElement.monomial(m) * (z - 1))
    assert not s3.contains(casimir())


def test_slice_elements_kill_verma_by_oracle():
    lam = Weight(F(-1, 2), 1)
    for u in annihilator_slice(lam, 2).basis:
        assert kills(u, lam, 4)


def test_central_inside_annihilator():
    for lam in (Weight(F(2, 5), 3), Weight(0, 0), Weight(F(-1, 2), 2)):
        for d in (1, 2, 3):
            assert central_ideal_slice(lam, d) <= annihilator_slice(lam, d)


def test_grid_is_large_enough():
    rng = random.Random(21)
    lam = Weight(F(3, 4), F(-2))
    ann = annihilator_slice(lam, 3)
    assert ann == annihilator_slice(lam, 3, grid=6)
    hits = 0
    for k in range(50):
        if k % 2:
            u = random_element(rng, 3, 4)
        else:
            u = sum((rng.randint(-2, 2) * b for b in rng.sample(ann.basis, 3)), AlgebraElement())
        small = all(not v for a in range(4) for b in range(4) for v in _sum_action(u, a, b, lam).values())
        large = all(not v for a in range(7) for b in range(7) for v in _sum_action(u, a, b, lam).values())
        assert small == large
        hits += small
    assert hits >= 20


def _sum_action(u, a, b, lam):
    out = {}
    for m, c in u.items():
        for key, val in _action_on_verma(m, a, b, lam).items():
            out[key] = out.get(key, 0) + c * val
    return out


def test_compare_examples():
    assert compare_slices(Weight(1, 1), 3) == EQUAL
    assert compare_slices(Weight(F(1, 3), 0), 3) == EQUAL
    assert compare_slices(Weight(F(-1, 2), 1), 2) == EQUAL


def test_intersection_examples():
    assert intersection_check([Weight(1, 1)], 1) == 1
    assert intersection_check([Weight(1, 1), Weight(1, 2)], 1) == 0
    with pytest.raises(ValueError):
        intersection_check([], 1)


def test_slice_serialization():
    data = annihilator_slice(Weight(1, 1), 1).to_dict()
    assert data == {"dim": 1, "basis": ["z - 1"]}
