"""PBW normal forms in the enveloping algebra of the Schrödinger algebra.

Monomials are exponent 6-tuples ``(a, b, c, d, s, t)`` standing for
``f^a q^b h^c z^d p^s e^t``; the generator order ``f < q < h < z < p < e``
puts the negative part first, then the Cartan part, then the positive part.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Union

GENERATORS = ("f", "q", "h", "z", "p", "e")
INDEX = {g: i for i, g in enumerate(GENERATORS)}
F, Q, H, Z, P, E = range(6)

# h-weight of each generator, in canonical order
WEIGHTS = (-2, -1, 0, 0, 1, 2)

Monomial = tuple[int, int, int, int, int, int]
Scalar = Union[int, Fraction]
ONE: Monomial = (0, 0, 0, 0, 0, 0)

# Lie brackets [x, y] for x < y in canonical order, as {generator index: coeff}.
_BRACKETS: dict[tuple[int, int], dict[int, int]] = {
    (F, Q): {},
    (F, H): {F: 2},       # [h,f] = -2f
    (F, Z): {},
    (F, P): {Q: 1},       # [f,p] = q
    (F, E): {H: -1},      # [e,f] = h
    (Q, H): {Q: 1},       # [h,q] = -q
    (Q, Z): {},
    (Q, P): {Z: -1},      # [p,q] = z
    (Q, E): {P: -1},      # [e,q] = p
    (H, Z): {},
    (H, P): {P: 1},       # [h,p] = p
    (H, E): {E: 2},       # [h,e] = 2e
    (Z, P): {},
    (Z, E): {},
    (P, E): {},           # [e,p] = 0
}


def lie_bracket(x: int, y: int) -> dict[int, int]:
    """Structure constants: [x, y] as a map generator index -> coefficient."""
    if x == y:
        return {}
    if x < y:
        return dict(_BRACKETS[(x, y)])
    return {g: -c for g, c in _BRACKETS[(y, x)].items()}


def mono_weight(m: Monomial) -> int:
    return sum(w * k for w, k in zip(WEIGHTS, m))


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_pq_degree(m: Monomial) -> int:
    return m[Q] + m[P]


def _unit(g: int, k: int = 1) -> Monomial:
    m = [0] * 6
    m[g] = k
    return tuple(m)  # type: ignore[return-value]


def _add_into(acc: dict, m: Monomial, c: Fraction) -> None:
    v = acc.get(m, 0) + c
    if v:
        acc[m] = v
    else:
        acc.pop(m, None)


@lru_cache(maxsize=None)
def _ad_power(x: int, g: int, n: int) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
    """Iterated brackets (ad x)^k (g) for k = 0..n, stopping early at zero."""
    out = [{g: Fraction(1)}]
    while len(out) <= n:
        nxt: dict[int, Fraction] = {}
        for y, c in out[-1].items():
            for w, d in lie_bracket(x, y).items():
                _add_into(nxt, w, c * d)  # type: ignore[arg-type]
        if not nxt:
            break
        out.append(nxt)
    return tuple(tuple(d.items()) for d in out)


@lru_cache(maxsize=200_000)
def _mono_times_gen(m: Monomial, g: int) -> tuple[tuple[Monomial, Fraction], ...]:
    """Normal form of the product ``m * g`` for a single generator ``g``."""
    last = max((i for i in range(6) if m[i]), default=-1)
    if g >= last:
        out = list(m)
        out[g] += 1
        return ((tuple(out), Fraction(1)),)  # type: ignore[return-value]
    # m = rest * x^n with x the largest generator present, and g < x.
    # x^n g = sum_k C(n,k) (ad x)^k(g) x^(n-k)
    x = last
    n = m[x]
    rest = list(m)
    rest[x] = 0
    rest_t: Monomial = tuple(rest)  # type: ignore[assignment]
    acc: dict[Monomial, Fraction] = {}
    for k, terms in enumerate(_ad_power(x, g, n)):
        binom = comb(n, k)
        for y, c in terms:
            coeff = binom * c
            # generators <= x form a subalgebra, so rest*y only involves them
            for mm, cc in _mono_times_gen(rest_t, y):
                out = list(mm)
                out[x] += n - k
                _add_into(acc, tuple(out), coeff * cc)  # type: ignore[arg-type]
    return tuple(acc.items())


@lru_cache(maxsize=200_000)
def _mono_times_mono(m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    current: dict[Monomial, Fraction] = {m1: Fraction(1)}
    for g in range(6):
        for _ in range(m2[g]):
            nxt: dict[Monomial, Fraction] = {}
            for mm, c in current.items():
                for m3, d in _mono_times_gen(mm, g):
                    _add_into(nxt, m3, c * d)
            current = nxt
    return tuple(current.items())


class AlgebraElement:
    """Immutable sparse element of U(s) in PBW normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            key = tuple(int(k) for k in m)
            if len(key) != 6 or min(key) < 0:
                raise ValueError(f"bad monomial {m!r}")
            _add_into(clean, key, Fraction(c))  # type: ignore[arg-type]
        self._terms = clean
        self._hash: int | None = None

    # construction helpers
    @classmethod
    def scalar(cls, c: Scalar) -> "AlgebraElement":
        return cls({ONE: c})

    @classmethod
    def gen(cls, name: str | int, power: int = 1) -> "AlgebraElement":
        g = INDEX[name] if isinstance(name, str) else name
        return cls({_unit(g, power): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> "AlgebraElement":
        return cls({m: c})

    @classmethod
    def word(cls, letters: Iterable[str | int]) -> "AlgebraElement":
        out = cls.scalar(1)
        for x in letters:
            out = out * cls.gen(x)
        return out

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Filtration degree; -1 for the zero element."""
        return max((mono_degree(m) for m in self._terms), default=-1)

    def weights(self) -> set[int]:
        return {mono_weight(m) for m in self._terms}

    def weight(self) -> int:
        """h-weight of a nonzero weight-homogeneous element."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("element is not weight-homogeneous")
        return ws.pop()

    def weight_component(self, w: int) -> "AlgebraElement":
        return AlgebraElement({m: c for m, c in self._terms.items() if mono_weight(m) == w})

    def top_part(self) -> "AlgebraElement":
        d = self.degree()
        return AlgebraElement({m: c for m, c in self._terms.items() if mono_degree(m) == d})

    # arithmetic
    def __add__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        other = _coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _add_into(acc, m, c)
        return AlgebraElement(acc)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "AlgebraElement":
        return _coerce(other) - self

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return AlgebraElement({m: c * other for m, c in self._terms.items()})
        return multiply(self, other)

    def __rmul__(self, other: Scalar) -> "AlgebraElement":
        return AlgebraElement({m: c * other for m, c in self._terms.items()})

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative power")
        out = AlgebraElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def _coerce(x: "AlgebraElement | Scalar") -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(x)


def multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Normal form of the product ``u v``."""
    acc: dict[Monomial, Fraction] = {}
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            c = c1 * c2
            for m, d in _mono_times_mono(m1, m2):
                _add_into(acc, m, c * d)
    return AlgebraElement(acc)


def bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    return multiply(u, v) - multiply(v, u)


def commutator_table(x: str | int, y: str | int) -> AlgebraElement:
    """[x, y] for two generators, as an element of degree <= 1."""
    i = INDEX[x] if isinstance(x, str) else x
    j = INDEX[y] if isinstance(y, str) else y
    return AlgebraElement({_unit(g): c for g, c in lie_bracket(i, j).items()})


# sigma on generators: e -> -f, f -> -e, p -> q, q -> p, h -> h, z -> z
_SIGMA_GEN = {F: (E, -1), Q: (P, 1), H: (H, 1), Z: (Z, 1), P: (Q, 1), E: (F, -1)}


def sigma(u: AlgebraElement) -> AlgebraElement:
    """The involutive anti-automorphism fixing h and z with e -> -f, p -> q."""
    acc: dict[Monomial, Fraction] = {}
    for m, c in u.items():
        # reverse the word f^a q^b h^c z^d p^s e^t and map each letter
        img = AlgebraElement.scalar(c)
        for g in reversed(range(6)):
            tg, sign = _SIGMA_GEN[g]
            if m[g]:
                img = img * AlgebraElement({_unit(tg, m[g]): sign ** m[g]})
        for mm, cc in img.items():
            _add_into(acc, mm, cc)
    return AlgebraElement(acc)


# ---------------------------------------------------------------- text format

def _format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for g, k in zip(GENERATORS, m):
        if k == 1:
            parts.append(g)
        elif k > 1:
            parts.append(f"{g}^{k}")
    return " ".join(parts)


def term_order_key(m: Monomial) -> tuple:
    return (-mono_degree(m), tuple(-k for k in m))


def format_terms(items: Iterable[tuple[str, Fraction]]) -> str:
    """Join (monomial string, coeff) pairs as ``coeff*mono + ...``."""
    out = []
    for body, c in items:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not body:
            piece = _format_scalar(a)
        elif a == 1:
            piece = body
        else:
            piece = f"{_format_scalar(a)}*{body}"
        if not out:
            out.append(piece if sign == "+" else f"-{piece}")
        else:
            out.append(f"{sign} {piece}")
    return " ".join(out) if out else "0"


def format_element(u: AlgebraElement) -> str:
    items = sorted(u.items(), key=lambda mc: term_order_key(mc[0]))
    return format_terms((format_monomial(m), c) for m, c in items)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([fqhzpe])|(\^)|([-+*()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        tokens.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_element(text: str) -> AlgebraElement:
    """Parse a sum of generator words, e.g. ``"2*e q^2 - 1/2 h"`` or ``"(e+f)*p"``.

    Juxtaposition and ``*`` both denote the (noncommutative) product, taken in
    the written order; the result is normalized.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expr() -> AlgebraElement:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = product() * sign
        while peek() in ("+", "-"):
            op = take()
            rhs = product()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def product() -> AlgebraElement:
        acc = factor()
        while True:
            tok = peek()
            if tok == "*":
                take()
                acc = acc * factor()
            elif tok is not None and (tok == "(" or tok in INDEX or tok[0].isdigit()):
                acc = acc * factor()
            else:
                return acc

    def factor() -> AlgebraElement:
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            take()
            val = expr()
            if peek() != ")":
                raise ParseError("missing ')'")
            take()
        elif tok in INDEX:
            take()
            val = AlgebraElement.gen(tok)
        elif tok[0].isdigit():
            take()
            val = AlgebraElement.scalar(Fraction(tok))
        else:
            raise ParseError(f"unexpected token {tok!r}")
        if peek() == "^":
            take()
            exp = peek()
            if exp is None or not exp.isdigit():
                raise ParseError("exponent must be a non-negative integer")
            take()
            val = val ** int(exp)
        return val

    if not tokens:
        raise ParseError("empty expression")
    result = expr()
    if pos != len(tokens):
        raise ParseError(f"unexpected token {tokens[pos]!r}")
    return result


def generator(name: str) -> AlgebraElement:
    return AlgebraElement.gen(name)


def monomials_up_to(d: int, weight: int | None = None) -> list[Monomial]:
    """All PBW monomials of filtration degree <= d (optionally of one h-weight)."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == 6:
            m: Monomial = tuple(prefix)  # type: ignore[assignment]
            if weight is None or mono_weight(m) == weight:
                out.append(m)
            return
        for k in range(left + 1):
            rec(prefix + [k], left - k)

    rec([], d)
    out.sort(key=lambda m: (mono_degree(m), m))
    return out
