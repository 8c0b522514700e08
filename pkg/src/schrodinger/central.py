"""Casimir element, Harish-Chandra projection and the center in low degree."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .modules import Weight
from .pbw import (
    E, F, GENERATORS, H, P, Q, Z,
    AlgebraElement, bracket, format_terms, generator, monomials_up_to,
)

DEFAULT_CENTER_BOUND = 8


class HCPolynomial:
    """Commutative polynomial in h and z: a map ``(i, j) -> coeff`` for ``h^i z^j``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        self._terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def h(cls) -> "HCPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def z(cls) -> "HCPolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c) -> "HCPolynomial":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def __call__(self, lam: Weight) -> Fraction:
        return self.evaluate(lam)

    def evaluate(self, lam: Weight) -> Fraction:
        """The value at ``lam``, i.e. the composite with evaluation at lam."""
        return sum((c * lam.h_val ** i * lam.z_val ** j for (i, j), c in self._terms.items()), Fraction(0))

    def _lift(self, other) -> "HCPolynomial":
        return other if isinstance(other, HCPolynomial) else HCPolynomial.const(other)

    def __add__(self, other) -> "HCPolynomial":
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return HCPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "HCPolynomial":
        return HCPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "HCPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "HCPolynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "HCPolynomial":
        other = self._lift(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return HCPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HCPolynomial":
        out = HCPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = HCPolynomial.const(other)
        return isinstance(other, HCPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        def body(i: int, j: int) -> str:
            parts = []
            for g, k in (("h", i), ("z", j)):
                if k == 1:
                    parts.append(g)
                elif k > 1:
                    parts.append(f"{g}^{k}")
            return " ".join(parts)

        keys = sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        return format_terms((body(*k), self._terms[k]) for k in keys)

    def __repr__(self) -> str:
        return f"HCPolynomial({self})"


@dataclass(frozen=True)
class CentralCharacter:
    """Scalars by which ``c`` and ``z`` act on a highest weight module."""

    theta: Fraction
    charge: Fraction


def casimir() -> AlgebraElement:
    """c = (h^2 + h + 4fe) z - 2(f p^2 - e q^2 - h p q), normalized."""
    f, q, h, z, p, e = (generator(g) for g in GENERATORS)
    return (h * h + h + 4 * f * e) * z - 2 * (f * p * p - e * q * q - h * p * q)


def kappa() -> AlgebraElement:
    """f p^2 - e q^2 - h p q, central modulo the ideal generated by z."""
    f, q, h, z, p, e = (generator(g) for g in GENERATORS)
    return f * p * p - e * q * q - h * p * q


def verify_central(u: AlgebraElement) -> bool:
    return all(bracket(generator(g), u).is_zero() for g in GENERATORS)


def verify_central_mod_z(u: AlgebraElement) -> bool:
    """Every bracket with a generator has z in each PBW monomial.

    The ideal generated by the central element z is spanned by the PBW
    monomials with positive z-exponent.
    """
    for g in GENERATORS:
        br = bracket(generator(g), u)
        if any(m[Z] == 0 for m, _ in br.items()):
            return False
    return True


def hc_homomorphism(u: AlgebraElement) -> HCPolynomial:
    """Projection of a weight-0 element onto the polynomial algebra in h, z."""
    if u.is_zero():
        return HCPolynomial()
    if u.weights() != {0}:
        raise ValueError("Harish-Chandra projection needs a weight-0 element")
    out: dict[tuple[int, int], Fraction] = {}
    for m, c in u.items():
        if m[F] == m[Q] == m[P] == m[E] == 0:
            out[(m[H], m[Z])] = c
    return HCPolynomial(out)


def central_character(lam: Weight) -> CentralCharacter:
    h, z = lam.h_val, lam.z_val
    return CentralCharacter((h * h + 3 * h + 2) * z, z)


def theta_polynomial() -> HCPolynomial:
    """The image of the Casimir written as z (h + 3/2)^2 - z / 4."""
    h, z = HCPolynomial.h(), HCPolynomial.z()
    return z * (h + Fraction(3, 2)) ** 2 - Fraction(1, 4) * z


def center_basis(d: int, bound: int = DEFAULT_CENTER_BOUND) -> list[AlgebraElement]:
    """Basis of the centralizer of all generators inside ``U_{<=d}``.

    Central elements commute with h, so only weight-0 monomials occur; the
    remaining conditions are the kernels of ``ad e``, ``ad f``, ``ad p``,
    ``ad q`` on that finite space.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d > bound:
        raise ValueError(f"degree {d} exceeds the configured bound {bound}")
    monos = monomials_up_to(d, weight=0)
    rows: dict[tuple[int, tuple], dict[int, Fraction]] = {}
    for col, m in enumerate(monos):
        u = AlgebraElement.monomial(m)
        for g in (E, F, P, Q):
            for tm, c in bracket(AlgebraElement.gen(g), u).items():
                rows.setdefault((g, tm), {})[col] = c
    kernel = linalg.nullspace_sparse(rows.values(), len(monos))
    basis = linalg.row_basis(kernel[::-1]) if kernel else []
    out = [AlgebraElement({m: c for m, c in zip(monos, v) if c}) for v in basis]
    out.sort(key=lambda u: (u.degree(), str(u)))
    return out


def expected_center_dimension(d: int) -> int:
    """#{(a, b) : a + 3b <= d}, the count of monomials z^a c^b in U_{<=d}."""
    return sum(d - 3 * b + 1 for b in range(d // 3 + 1))
