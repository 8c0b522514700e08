"""The Weyl algebra quotient at a fixed nonzero charge and the map into it.

``B`` is generated by p, q with ``pq - qp = charge``; elements are kept in
the normal form ``sum c * q^m p^n``.  The map ``phi`` sends the enveloping
algebra (with z specialized to the charge) into ``B``, and the module
``B / B p`` becomes a simple highest weight module of highest weight -1/2.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .modules import SHIFT, TruncatedModule, Weight, from_action
from .pbw import AlgebraElement, format_terms


class WeylElement:
    """``sum c * q^m p^n`` at a fixed nonzero charge."""

    __slots__ = ("charge", "_terms")

    def __init__(self, charge, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        self.charge = Fraction(charge)
        if self.charge == 0:
            raise ValueError("the Weyl algebra needs a nonzero charge")
        self._terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, charge, c) -> "WeylElement":
        return cls(charge, {(0, 0): c})

    @classmethod
    def q(cls, charge) -> "WeylElement":
        return cls(charge, {(1, 0): 1})

    @classmethod
    def p(cls, charge) -> "WeylElement":
        return cls(charge, {(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def _check(self, other: "WeylElement") -> None:
        if other.charge != self.charge:
            raise ValueError("charge mismatch")

    def _lift(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            self._check(other)
            return other
        return WeylElement.scalar(self.charge, other)

    def __add__(self, other) -> "WeylElement":
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return WeylElement(self.charge, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.charge, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "WeylElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "WeylElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "WeylElement":
        return weyl_multiply(self, self._lift(other))

    def __rmul__(self, other) -> "WeylElement":
        return weyl_multiply(self._lift(other), self)

    def __pow__(self, n: int) -> "WeylElement":
        out = WeylElement.scalar(self.charge, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            other = WeylElement.scalar(self.charge, other)
        return self.charge == other.charge and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.charge, frozenset(self._terms.items())))

    def is_zero(self) -> bool:
        return not self._terms

    def __str__(self) -> str:
        def body(m: int, n: int) -> str:
            parts = []
            for g, k in (("q", m), ("p", n)):
                if k == 1:
                    parts.append(g)
                elif k > 1:
                    parts.append(f"{g}^{k}")
            return " ".join(parts)

        keys = sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        return format_terms((body(*k), self._terms[k]) for k in keys)

    def __repr__(self) -> str:
        return f"WeylElement({self.charge}, {self})"


def weyl_multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """Product in normal form, using ``p^n q^m = sum_k C(n,k) C(m,k) k! c^k q^(m-k) p^(n-k)``."""
    if u.charge != v.charge:
        raise ValueError("charge mismatch")
    c = u.charge
    out: dict[tuple[int, int], Fraction] = {}
    for (m1, n1), c1 in u._terms.items():
        for (m2, n2), c2 in v._terms.items():
            for k in range(min(n1, m2) + 1):
                coeff = c1 * c2 * comb(n1, k) * comb(m2, k) * factorial(k) * c ** k
                key = (m1 + m2 - k, n1 + n2 - k)
                out[key] = out.get(key, 0) + coeff
    return WeylElement(c, out)


def phi_generator(name: str, charge) -> WeylElement:
    """Images of the six generators."""
    c = Fraction(charge)
    if c == 0:
        raise ValueError("phi needs a nonzero charge")
    q, p = WeylElement.q(c), WeylElement.p(c)
    if name == "e":
        return (p * p) * (1 / (2 * c))
    if name == "f":
        return (q * q) * (-1 / (2 * c))
    if name == "h":
        return (q * p) * (-1 / c) - Fraction(1, 2)
    if name == "z":
        return WeylElement.scalar(c, c)
    if name == "p":
        return p
    if name == "q":
        return q
    raise ValueError(f"unknown generator {name!r}")


def phi(u: AlgebraElement, charge) -> WeylElement:
    """Image of ``u`` with e -> p^2/(2c), f -> -q^2/(2c), h -> -qp/c - 1/2, z -> c."""
    c = Fraction(charge)
    if c == 0:
        raise ValueError("phi needs a nonzero charge")
    images = {g: phi_generator(g, c) for g in "fqhzpe"}
    out = WeylElement(c)
    for m, coeff in u.items():
        term = WeylElement.scalar(c, coeff)
        for g, k in zip("fqhzpe", m):
            if k:
                term = term * images[g] ** k
        out = out + term
    return out


def weyl_module(charge, depth: int) -> TruncatedModule:
    """``B / B p`` with basis ``q^n . 1`` (n <= depth), a highest weight module of weight -1/2."""
    c = Fraction(charge)
    if c == 0:
        raise ValueError("the Weyl module needs a nonzero charge")
    top = Weight(Fraction(-1, 2), c)
    labels = [[n] for n in range(depth + 1)]

    def act(g: str, i: int, n: int) -> dict:
        if g == "q":
            return {n + 1: Fraction(1)}
        if g == "p":
            return {n - 1: n * c} if n else {}
        if g == "e":
            return {n - 2: Fraction(n * (n - 1)) * c / 2} if n >= 2 else {}
        if g == "f":
            return {n + 2: -1 / (2 * c)}
        if g == "h":
            return {n: -n - Fraction(1, 2)}
        return {n: c}

    return from_action(top, labels, act, name=f"WeylModule({c})")


def sl2_verma_action(a: Fraction, g: str, k: int) -> dict[int, Fraction]:
    """Action of an sl2 generator on ``f^k v_a``; p, q, z act by zero."""
    if g == "e":
        return {k - 1: k * (a - k + 1)} if k else {}
    if g == "f":
        return {k + 1: Fraction(1)}
    if g == "h":
        return {k: a - 2 * k}
    return {}


def tensor_with_M(a, depth: int, charge) -> TruncatedModule:
    """``M (x) Verma_sl2(a)`` with the diagonal action, truncated to ``depth``.

    The basis at depth i is ``q^n . 1 (x) f^k v_a`` with ``n + 2k = i``.
    """
    a = Fraction(a)
    M = weyl_module(charge, depth)
    top = Weight(a - Fraction(1, 2), Fraction(charge))
    labels = [[(i - 2 * k, k) for k in range(i // 2 + 1)] for i in range(depth + 1)]

    def act(g: str, i: int, lab: tuple[int, int]) -> dict:
        n, k = lab
        out: dict = {}
        mat = M.matrix(g, n)
        if mat is not None:
            for r in range(mat.shape[0]):
                c = mat[r, 0] if mat.shape[1] else 0
                if c:
                    key = (M.labels[n + SHIFT[g]][r], k)
                    out[key] = out.get(key, 0) + c
        for k2, c in sl2_verma_action(a, g, k).items():
            if c:
                key = (n, k2)
                out[key] = out.get(key, 0) + c
        return out

    return from_action(top, labels, act, name=f"M(x)Verma_sl2({a})")
