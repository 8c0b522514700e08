"""Annihilators of Verma modules cut down to the filtered pieces ``U_{<=d}``.

An element u of ``U_{<=d}`` kills the Verma module iff it kills every
``f^a q^b v``.  Each coefficient of ``u f^a q^b v`` is a polynomial in
``(a, b)`` of degree at most 2d in each variable (``e`` contributes the
quadratic factor ``a(lambda(h) - a + 1)``), so checking the grid
``0 <= a, b <= 2d`` is enough.  The annihilator is spanned by its
h-weight components, so every computation runs one weight at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .central import casimir, central_character
from .modules import Weight
from .pbw import (
    AlgebraElement, _mono_times_mono, format_element, mono_weight,
    monomials_up_to, term_order_key,
)

DEFAULT_DEGREE_BOUND = 4

EQUAL = "equal"
STRICT = "central ⊊ annihilator"
OTHER = "other"


def _ordered_monomials(d: int) -> list[tuple]:
    return sorted(monomials_up_to(d), key=term_order_key)


@dataclass
class FilteredIdealSlice:
    """A subspace of ``U_{<=d}`` in reduced echelon form over a fixed monomial order."""

    degree: int
    basis: list[AlgebraElement]

    @classmethod
    def from_vectors(cls, d: int, vectors: Iterable[Sequence[Fraction]]) -> "FilteredIdealSlice":
        monos = _ordered_monomials(d)
        basis = linalg.row_basis(list(vectors))
        return cls(d, [AlgebraElement({m: c for m, c in zip(monos, v) if c}) for v in basis])

    @classmethod
    def from_elements(cls, d: int, elements: Iterable[AlgebraElement]) -> "FilteredIdealSlice":
        return cls.from_vectors(d, [to_vector(u, d) for u in elements])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[list[Fraction]]:
        return [to_vector(u, self.degree) for u in self.basis]

    def contains(self, u: AlgebraElement) -> bool:
        if u.degree() > self.degree:
            return False
        vecs = self.vectors()
        return linalg.rank(vecs + [to_vector(u, self.degree)]) == len(vecs)

    def __le__(self, other: "FilteredIdealSlice") -> bool:
        return all(other.contains(u) for u in self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, FilteredIdealSlice) and self.degree == other.degree and self <= other and other <= self

    def to_dict(self) -> dict:
        return {"dim": self.dim, "basis": [format_element(u) for u in self.basis]}


def to_vector(u: AlgebraElement, d: int) -> list[Fraction]:
    monos = _ordered_monomials(d)
    if u.degree() > d:
        raise ValueError(f"element of degree {u.degree()} outside U_<={d}")
    return [u.coefficient(m) for m in monos]


def _check_bound(d: int, bound: int) -> None:
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d > bound:
        raise ValueError(f"degree {d} exceeds the configured bound {bound}")


def _action_on_verma(m: tuple, a: int, b: int, lam: Weight) -> dict[tuple[int, int], Fraction]:
    """``m . f^a q^b v`` in the basis ``f^a' q^b' v``."""
    out: dict[tuple[int, int], Fraction] = {}
    for mm, c in _mono_times_mono(m, (a, b, 0, 0, 0, 0)):
        a2, b2, hc, zd, s, t = mm
        if s or t:
            continue
        val = c * lam.h_val ** hc * lam.z_val ** zd
        if val:
            out[(a2, b2)] = out.get((a2, b2), 0) + val
    return out


def annihilator_slice(lam: Weight, d: int, bound: int = DEFAULT_DEGREE_BOUND, grid: int | None = None) -> FilteredIdealSlice:
    """Basis of ``Ann(Verma(lam))`` intersected with ``U_{<=d}``.

    ``grid`` overrides the evaluation range ``0..grid`` for ``(a, b)``.
    """
    _check_bound(d, bound)
    top = 2 * d if grid is None else grid
    monos = _ordered_monomials(d)
    position = {m: i for i, m in enumerate(monos)}
    vectors = []
    for w in sorted({mono_weight(m) for m in monos}):
        block = [m for m in monos if mono_weight(m) == w]
        rows: dict[tuple, dict[int, Fraction]] = {}
        for col, m in enumerate(block):
            for a in range(top + 1):
                for b in range(top + 1):
                    for key, c in _action_on_verma(m, a, b, lam).items():
                        rows.setdefault((a, b) + key, {})[col] = c
        for sol in linalg.nullspace_sparse(rows.values(), len(block)):
            vec = [Fraction(0)] * len(monos)
            for m, c in zip(block, sol):
                vec[position[m]] = c
            vectors.append(vec)
    return FilteredIdealSlice.from_vectors(d, vectors)


def central_ideal_slice(lam: Weight, d: int) -> FilteredIdealSlice:
    """Span of ``U_{<=d-1} (z - lam(z)) + U_{<=d-3} (c - theta)`` inside ``U_{<=d}``."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    chi = central_character(lam)
    zgen = AlgebraElement.gen("z") - chi.charge
    cgen = casimir() - chi.theta
    elements = [AlgebraElement.monomial(m) * zgen for m in monomials_up_to(d - 1)]
    if d >= 3:
        elements += [AlgebraElement.monomial(m) * cgen for m in monomials_up_to(d - 3)]
    return FilteredIdealSlice.from_elements(d, elements)


def compare_slices(lam: Weight, d: int) -> str:
    """``equal``, ``central ⊊ annihilator`` or ``other``."""
    ann = annihilator_slice(lam, d)
    cen = central_ideal_slice(lam, d)
    if cen <= ann:
        return EQUAL if cen.dim == ann.dim else STRICT
    return OTHER


def intersection_check(samples: Sequence[Weight], d: int) -> int:
    """Dimension of the intersection of the annihilator slices of all samples."""
    if not samples:
        raise ValueError("need at least one weight")
    space = annihilator_slice(samples[0], d).vectors()
    for lam in samples[1:]:
        if not space:
            return 0
        space = linalg.intersect_spaces(space, annihilator_slice(lam, d).vectors())
    return len(space)
