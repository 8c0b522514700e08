import random
from fractions import Fraction

import pytest

from schrodinger.central import (
    HCPolynomial, casimir, center_basis, central_character, expected_center_dimension,
    hc_homomorphism, kappa, theta_polynomial, verify_central, verify_central_mod_z,
)
from schrodinger.modules import Weight
from schrodinger.pbw import AlgebraElement, GENERATORS, bracket, generator, parse_element
from schrodinger.verma import central_action, verma

import oracles
from support import element_from_oracle

f, q, h, z, p, e = (generator(g) for g in GENERATORS)


def test_casimir_shape():
    c = casimir()
    assert c == parse_element("(h^2 + h + 4*f e) z - 2*(f p^2 - e q^2 - h p q)")
    assert c.weights() == {0}
    assert c.degree() == 3


def test_casimir_against_oracle_rewriter():
    # assemble c from words normalized by the independent rewriter
    words = {"hhz": 1, "hz": 1, "fez": 4, "fpp": -2, "eqq": 2, "hpq": 2}
    total = AlgebraElement()
    for w, c in words.items():
        total = total + c * element_from_oracle(oracles.normal_form(w))
    assert total == casimir()


def test_verify_central_examples():
    assert verify_central(casimir())
    assert verify_central(z)
    assert not verify_central(e)


def test_hc_examples():
    assert hc_homomorphism(casimir()) == theta_polynomial()
    assert str(hc_homomorphism(casimir())) == "h^2 z + 3*h z + 2*z"
    assert hc_homomorphism(z) == HCPolynomial.z()
    assert hc_homomorphism(f * e) == HCPolynomial()
    with pytest.raises(ValueError):
        hc_homomorphism(e)


def test_hc_multiplicative_against_cartan_factor():
    rng = random.Random(2)
    cartan = [h, z, h * h, h * z + 1]
    weight0 = [f * e, q * p, casimir(), f * p * p, h * q * p + 3, e * q * q]
    for _ in range(30):
        u = rng.choice(weight0)
        v = rng.choice(cartan)
        assert hc_homomorphism(u * v) == hc_homomorphism(u) * hc_homomorphism(v)


def test_central_character_examples():
    assert central_character(Weight(1, 1)).theta == 6
    assert central_character(Weight(Fraction(7, 3), 0)).theta == 0
    lam = Weight(Fraction(-3, 2), 5)
    assert central_character(lam).theta == Fraction(-5, 4)
    mat = central_action(verma(lam, 0), casimir(), 0)
    assert mat == [[Fraction(-5, 4)]]


def test_casimir_acts_by_theta_on_grid():
    grid = [Weight(Fraction(a, 2), Fraction(b, 3)) for a in range(-3, 2) for b in range(-2, 3) if (a, b)][:50]
    theta = hc_homomorphism(casimir())
    for lam in grid:
        chi = central_character(lam)
        assert theta(lam) == chi.theta
        assert central_action(verma(lam, 0), casimir(), 0) == [[chi.theta]]


def test_casimir_scalar_on_whole_verma():
    lam = Weight(Fraction(2, 5), Fraction(-3, 7))
    M = verma(lam, 6)
    theta = central_character(lam).theta
    for i in range(4):  # words of c reach up to three steps below
        mat = central_action(M, casimir(), i)
        n = M.dim(i)
        assert mat == [[theta if r == c else 0 for c in range(n)] for r in range(n)]


def test_theta_criterion_random():
    rng = random.Random(8)
    for _ in range(30):
        hv = Fraction(rng.randint(-12, 12), 2)
        zv = Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.choice([1, 2, 3]))
        n = rng.randint(1, 10)
        same = central_character(Weight(hv, zv)) == central_character(Weight(hv - n, zv))
        assert same == (hv == Fraction(n - 3, 2))


@pytest.mark.parametrize("d", range(0, 5))
def test_center_dimension(d):
    basis = center_basis(d)
    assert len(basis) == expected_center_dimension(d) == oracles.center_count(d)
    assert all(verify_central(u) for u in basis)
    assert all(u.degree() <= d for u in basis)


def test_center_degree_three_contains_casimir():
    from schrodinger import linalg
    from schrodinger.annihilators import to_vector
    basis = center_basis(3)
    vecs = [to_vector(u, 3) for u in basis]
    expected = [AlgebraElement.scalar(1), z, z * z, z * z * z, casimir()]
    assert linalg.rank(vecs) == linalg.rank(vecs + [to_vector(u, 3) for u in expected]) == 5


def test_center_bound():
    with pytest.raises(ValueError):
        center_basis(9)
    with pytest.raises(ValueError):
        center_basis(-1)


def test_kappa():
    k = kappa()
    assert verify_central_mod_z(k)
    assert not verify_central(k)
    assert not bracket(e, k).is_zero()
    assert all(m[3] >= 1 for m, _ in (casimir() + 2 * k).items())
    assert not verify_central_mod_z(e)
