"""Verma modules, contravariant forms, singular vectors and simple characters.

Vectors of an induced module ``U (x)_{U(b)} N`` are written in the basis
``f^a q^b (x) n`` with ``n`` running over a basis of the finite b-module N.
A generator acts by normal-ordering ``x f^a q^b`` and letting the trailing
``h^c z^d p^s e^t`` part act on ``n`` (e first, then p, then the Cartan part).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Mapping, Sequence

from . import linalg
from .central import hc_homomorphism
from .modules import (
    TruncatedModule, Weight, from_action, quotient, submodule,
)
from .pbw import (
    GENERATORS, INDEX, AlgebraElement, _mono_times_mono, _unit, format_monomial, format_terms, sigma,
)

VectorMap = Mapping[Hashable, Mapping[Hashable, Fraction]]


@lru_cache(maxsize=None)
def _gen_times_fq(g: int, a: int, b: int):
    return _mono_times_mono(_unit(g), (a, b, 0, 0, 0, 0))


class BorelModule:
    """A finite-dimensional module over ``b = span(h, z, p, e)``.

    ``depths[n]`` places basis vector ``n`` at weight ``top - depths[n] h^v``;
    ``e`` and ``p`` are given as maps ``label -> {label: coeff}``, z acts by
    ``charge``.  ``grades`` optionally attaches a pq-degree to each label.
    """

    def __init__(
        self,
        top: Weight,
        depths: Mapping[Hashable, int],
        e: VectorMap | None = None,
        p: VectorMap | None = None,
        grades: Mapping[Hashable, int] | None = None,
    ):
        self.top = top
        self.depths = dict(depths)
        self.e = {k: dict(v) for k, v in (e or {}).items()}
        self.p = {k: dict(v) for k, v in (p or {}).items()}
        self.grades = dict(grades) if grades is not None else None

    @classmethod
    def one_dimensional(cls, lam: Weight) -> "BorelModule":
        return cls(lam, {"v": 0}, grades={"v": 0})

    def act(self, g: str, vec: dict[Hashable, Fraction], times: int) -> dict[Hashable, Fraction]:
        table = self.e if g == "e" else self.p
        for _ in range(times):
            out: dict[Hashable, Fraction] = {}
            for n, c in vec.items():
                for n2, c2 in table.get(n, {}).items():
                    out[n2] = out.get(n2, 0) + c * c2
            vec = {k: v for k, v in out.items() if v}
            if not vec:
                break
        return vec


def induced_module(N: BorelModule, depth: int, name: str = "") -> TruncatedModule:
    """``U (x)_{U(b)} N`` truncated to ``depth`` below ``N.top``."""
    top = N.top
    labels: list[list[tuple]] = [[] for _ in range(depth + 1)]
    for n, dn in N.depths.items():
        for i in range(dn, depth + 1):
            rest = i - dn
            for a in range(rest // 2 + 1):
                labels[i].append((a, rest - 2 * a, n))
    for ls in labels:
        ls.sort(key=lambda lab: (N.depths[lab[2]], str(lab[2]), lab[0]))

    def act(g: str, i: int, lab: tuple) -> dict:
        a, b, n = lab
        out: dict = {}
        for m, c in _gen_times_fq(INDEX[g], a, b):
            a2, b2, hc, zd, s, t = m
            vec = N.act("e", {n: Fraction(1)}, t) if t else {n: Fraction(1)}
            if s:
                vec = N.act("p", vec, s)
            for n2, c2 in vec.items():
                coeff = c * c2
                if zd:
                    coeff *= top.z_val ** zd
                if hc:
                    coeff *= (top.h_val - N.depths[n2]) ** hc
                if coeff:
                    key = (a2, b2, n2)
                    out[key] = out.get(key, 0) + coeff
        return out

    grades = None
    if N.grades is not None:
        grades = [[b + N.grades[n] for (a, b, n) in ls] for ls in labels]
    return from_action(top, labels, act, grades, name or "induced")


def verma(lam: Weight, depth: int) -> TruncatedModule:
    """The Verma module of highest weight ``lam`` down to ``lam - depth h^v``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    return induced_module(BorelModule.one_dimensional(lam), depth, f"Verma{lam}")


def format_vector(M: TruncatedModule, i: int, vec: Sequence[Fraction]) -> str:
    """Render a vector of a Verma-type module as ``coeff*f^a q^b v``."""
    items = []
    for lab, c in zip(M.labels[i], vec):
        if not c:
            continue
        a, b, n = lab
        body = format_monomial((a, b, 0, 0, 0, 0))
        tail = str(n)
        items.append(((body + " " + tail).strip(), Fraction(c)))
    return format_terms(items)


# ---------------------------------------------------------------- singular vectors

def singular_vectors(M: TruncatedModule, i: int) -> list[list[Fraction]]:
    """Basis of ``{v in M_i : e v = 0 and p v = 0}``."""
    if not (0 <= i <= M.depth):
        raise IndexError(f"depth {i} outside 0..{M.depth}")
    n = M.dim(i)
    if i == 0:
        return linalg.identity(n)
    rows = []
    for g in ("e", "p"):
        mat = M.matrix(g, i)
        rows.extend([[Fraction(x) for x in r] for r in mat])
    return linalg.nullspace(rows, n)


# ---------------------------------------------------------------- contravariant form

def _raising_word(a: int, b: int) -> str:
    """sigma(f^a q^b) = p^b (-e)^a as a word (sign handled separately)."""
    return "p" * b + "e" * a


def gram_matrix(M: TruncatedModule, i: int) -> list[list[Fraction]]:
    """Contravariant form at depth ``i`` of a Verma module ``M`` (basis f^a q^b v)."""
    basis = M.labels[i]
    n = len(basis)
    images = []
    for col in range(n):
        unit = [Fraction(0)] * n
        unit[col] = Fraction(1)
        images.append(unit)
    out = linalg.zeros(n, n)
    for row, (a, b, _) in enumerate(basis):
        sign = (-1) ** a
        word = _raising_word(a, b)
        for col in range(n):
            depth, vec = M.apply_word(word, i, images[col])
            assert depth == 0
            out[row][col] = sign * Fraction(vec[0])
    return out


def contravariant_form(lam: Weight, i: int, method: str = "module") -> list[list[Fraction]]:
    """Gram matrix of the contravariant form on the weight space ``lam - i h^v``.

    ``method="module"`` applies ``sigma(x)`` to ``y v`` inside the Verma
    module; ``method="pbw"`` evaluates the Harish-Chandra projection of
    ``sigma(x) y`` at ``lam``.  Both give the same matrix.
    """
    if i < 0:
        raise ValueError("depth must be non-negative")
    if method == "module":
        return gram_matrix(verma(lam, i), i)
    if method != "pbw":
        raise ValueError(f"unknown method {method!r}")
    basis = [(a, i - 2 * a) for a in range(i // 2 + 1)]
    elems = [AlgebraElement.monomial((a, b, 0, 0, 0, 0)) for a, b in basis]
    out = linalg.zeros(len(basis), len(basis))
    for r, x in enumerate(elems):
        sx = sigma(x)
        for c, y in enumerate(elems):
            out[r][c] = hc_homomorphism(sx * y).evaluate(lam)
    return out


def simple_character(lam: Weight, depth: int) -> list[int]:
    """Dimensions of the weight spaces of the simple quotient, via Gram ranks."""
    M = verma(lam, depth)
    return [linalg.rank(gram_matrix(M, i)) for i in range(depth + 1)]


def radical_spaces(M: TruncatedModule) -> list[list[list[Fraction]]]:
    """Kernels of the contravariant form at every depth of a Verma module."""
    return [linalg.nullspace(gram_matrix(M, i), M.dim(i)) for i in range(M.depth + 1)]


def radical_module(lam: Weight, depth: int) -> TruncatedModule:
    """The maximal submodule of the Verma module, truncated."""
    M = verma(lam, depth)
    return submodule(M, radical_spaces(M), name=f"K{lam}")


def simple_module(lam: Weight, depth: int) -> TruncatedModule:
    """The simple quotient of the Verma module, truncated."""
    M = verma(lam, depth)
    return quotient(M, radical_spaces(M), name=f"L{lam}")


def verma_character(depth: int) -> list[int]:
    return [i // 2 + 1 for i in range(depth + 1)]


def composition_multiplicities(lam: Weight, depth: int) -> dict[Weight, int]:
    """Multiplicities of ``L(lam - k h^v)`` in the Verma module, for ``k <= depth // 2``.

    Solved top-down from the unitriangular relation between the Verma
    character and the simple characters.
    """
    report = depth // 2
    verma_ch = verma_character(depth)
    simples = [simple_character(lam.shifted(k), depth - k) for k in range(report + 1)]
    mult: list[int] = []
    for k in range(report + 1):
        val = verma_ch[k] - sum(mult[j] * simples[j][k - j] for j in range(k))
        mult.append(val)
    return {lam.shifted(k): m for k, m in enumerate(mult)}


def verma_hom(mu: Weight, lam: Weight, depth: int) -> int:
    """dim Hom(Verma(mu), Verma(lam)): singular vectors of weight mu."""
    k = lam.depth_below(mu)
    if k is None or k < 0:
        return 0
    if k > depth:
        raise ValueError(f"weight {mu} lies below the requested depth {depth}")
    return len(singular_vectors(verma(lam, k), k))


def central_action(M: TruncatedModule, u: AlgebraElement, i: int) -> list[list[Fraction]]:
    """Matrix of a weight-0 element ``u`` on the space ``M_i``.

    Each PBW monomial is applied right to left; all intermediate spaces must
    lie inside the truncation.
    """
    n = M.dim(i)
    out = linalg.zeros(n, n)
    for m, c in u.items():
        word = "".join(g * k for g, k in zip(GENERATORS, m))
        for col in range(n):
            unit = [Fraction(0)] * n
            unit[col] = Fraction(1)
            depth, vec = M.apply_word(word, i, unit)
            for r in range(n):
                out[r][col] += c * Fraction(vec[r])
    return out
