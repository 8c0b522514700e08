"""Blocks of category O: classification, quivers, projectives and Ext^1.

Zero-charge blocks have no projectives, so everything there is done in the
truncated category of modules with weights at most a fixed ``lam``.  There
``U/I`` (the module induced from ``C[p, e]`` cut off above ``lam``) is
projective, and its indecomposable summand with top ``lam - k h^v`` is cut
out by an idempotent of its endomorphism ring.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from . import linalg
from .central import CentralCharacter, central_character
from .modules import (
    TruncatedModule, Weight, compose, map_is_zero, module_hom,
    submodule, tensor_sl2,
)
from .pbw import AlgebraElement, Z, bracket, generator
from .verma import (
    BorelModule, composition_multiplicities, induced_module, radical_module,
    simple_character, simple_module, verma,
)


class BlockType(enum.Enum):
    NonzeroGeneric = "NonzeroGeneric"
    NonzeroHalfInteger = "NonzeroHalfInteger"
    NonzeroInteger = "NonzeroInteger"
    ZeroNonIntegral = "ZeroNonIntegral"
    ZeroIntegral = "ZeroIntegral"


def block_type(lam: Weight) -> BlockType:
    if lam.is_zero_charge:
        return BlockType.ZeroIntegral if lam.is_integral else BlockType.ZeroNonIntegral
    if lam.is_integral:
        return BlockType.NonzeroInteger
    if lam.is_half_integral:
        return BlockType.NonzeroHalfInteger
    return BlockType.NonzeroGeneric


# ---------------------------------------------------------------- quivers

@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int

    @property
    def label(self) -> str:
        return f"{self.name}({self.source}->{self.target})"


@dataclass
class Relation:
    """``sum coeff * path = 0``; a path lists arrows in traversal order."""

    terms: list[tuple[Fraction, tuple[Arrow, ...]]]
    name: str = ""

    def render(self) -> str:
        parts = []
        for k, (c, path) in enumerate(self.terms):
            body = " ".join(a.label for a in path)
            coeff = "" if abs(c) == 1 else f"{abs(c)}*"
            sign = "-" if c < 0 else ("+" if k else "")
            parts.append(f"{sign} {coeff}{body}".strip() if k else f"{sign}{coeff}{body}")
        return " ".join(parts) + " = 0"


@dataclass
class QuiverPresentation:
    name: str
    vertices: list[int]
    arrows: list[Arrow]
    relations: list[Relation] = field(default_factory=list)
    relations_known: bool = True
    vertex_weights: dict[int, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.vertices,
            "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in self.arrows],
            "relations": None if not self.relations_known else [
                {
                    "name": r.name,
                    "text": r.render(),
                    "terms": [
                        {"coeff": str(c), "path": [a.label for a in path]} for c, path in r.terms
                    ],
                }
                for r in self.relations
            ],
            "relations_known": self.relations_known,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name}" {{']
        lines.append("  /* relations (paths in traversal order)")
        if not self.relations_known:
            lines.append("     relations unknown: only the Gabriel quiver is determined")
        elif not self.relations:
            lines.append("     none")
        for r in self.relations:
            tag = f"{r.name}: " if r.name else ""
            lines.append(f"     {tag}{r.render()}")
        lines.append("  */")
        for v in self.vertices:
            extra = f' xlabel="{self.vertex_weights[v]}"' if v in self.vertex_weights else ""
            lines.append(f'  "{v}" [label="{v}"{extra}];')
        for a in self.arrows:
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _line_quiver(name: str, n: int, zero_cycle_name: str) -> QuiverPresentation:
    """Vertices 0..n-1, arrows a: i -> i+1, b: i+1 -> i, commutativity relations.

    The 2-cycle at vertex 0 vanishes; at the last vertex the only remaining
    2-cycle vanishes too (paths through the removed vertex n are zero).
    """
    verts = list(range(n))
    a = {i: Arrow("a", i, i + 1) for i in range(n - 1)}
    b = {i: Arrow("b", i + 1, i) for i in range(n - 1)}
    arrows = [x for i in range(n - 1) for x in (a[i], b[i])]
    rels: list[Relation] = []
    for v in verts:
        right = (a[v], b[v]) if v < n - 1 else None      # v -> v+1 -> v
        left = (b[v - 1], a[v - 1]) if v > 0 else None   # v -> v-1 -> v
        if right and left:
            rels.append(Relation([(Fraction(1), right), (Fraction(-1), left)], "ab=ba"))
        elif right:
            rels.append(Relation([(Fraction(1), right)], zero_cycle_name))
        elif left:
            rels.append(Relation([(Fraction(1), left)], "cycle at last vertex"))
    return QuiverPresentation(name, verts, arrows, rels)


def gamma_quiver(n: int) -> QuiverPresentation:
    """Full subquiver of the integral zero-charge quiver on vertices -n-2..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    arrows = []
    for i in range(n):
        arrows += [Arrow("a", i, i + 1), Arrow("b", i + 1, i)]
    for i in range(n + 1):
        arrows += [Arrow("s", i, -i - 2), Arrow("t", -i - 2, i)]
    arrows += [Arrow("b'", -1, -2), Arrow("a'", -2, -1)]
    for k in range(2, n + 2):
        arrows += [Arrow("b", -k, -k - 1), Arrow("a", -k - 1, -k)]
    verts = list(range(n, -n - 3, -1))
    return QuiverPresentation(f"Gamma_{n}", verts, arrows, [], relations_known=False)


def quiver(t: BlockType, n: int) -> QuiverPresentation:
    """Finite presentation of the quiver of a block of type ``t``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if t is BlockType.NonzeroGeneric:
        return QuiverPresentation("C", [1], [])
    if t is BlockType.NonzeroInteger:
        return QuiverPresentation("C+C", [1, 2], [])
    if t is BlockType.NonzeroHalfInteger:
        a, b = Arrow("a", 1, 2), Arrow("b", 2, 1)
        return QuiverPresentation("A2 with ab=0", [1, 2], [a, b], [Relation([(Fraction(1), (a, b))], "ab=0")])
    if t is BlockType.ZeroNonIntegral:
        return _line_quiver(f"infQ_{n}", n, "ab=0")
    return gamma_quiver(n)


def findim_quiver(n: int) -> QuiverPresentation:
    """Quiver of the finite-dimensional part restricted to vertices 0..n-1."""
    return _line_quiver(f"Qinf_{n}", n, "ba=0")


# ---------------------------------------------------------------- classification

@dataclass
class BlockDescriptor:
    weight: Weight
    block_type: BlockType
    dot_partner: Weight
    central_character: CentralCharacter
    quiver: QuiverPresentation
    primitive_ideal_count: int | str

    def to_dict(self) -> dict:
        return {
            "weight": [str(self.weight.h_val), str(self.weight.z_val)],
            "block_type": self.block_type.value,
            "dot_partner": [str(self.dot_partner.h_val), str(self.dot_partner.z_val)],
            "central_character": {
                "theta": str(self.central_character.theta),
                "charge": str(self.central_character.charge),
            },
            "primitive_ideal_count": self.primitive_ideal_count,
            "quiver": self.quiver.to_dict(),
        }


def primitive_ideal_count(lam: Weight) -> int | str:
    if lam.is_zero_charge:
        return "unknown (zero charge)"
    h = max(lam.h_val, lam.dot().h_val)
    if lam.is_half_integral and h != Fraction(-3, 2):
        return 2
    return 1


def classify(lam: Weight, n: int = 3) -> BlockDescriptor:
    t = block_type(lam)
    if t is BlockType.NonzeroHalfInteger and max(lam.h_val, lam.dot().h_val) == Fraction(-3, 2):
        q = QuiverPresentation("C", [1], [])
    elif t is BlockType.ZeroIntegral:
        q = quiver(t, max(int(lam.h_val), 0) if n is None else n)
    else:
        q = quiver(t, n)
    return BlockDescriptor(lam, t, lam.dot(), central_character(lam), q, primitive_ideal_count(lam))


# ---------------------------------------------------------------- projectives

def induced_projective(lam: Weight, k: int, depth: int) -> TruncatedModule:
    """``U/I`` with I generated by ``h - mu(h)``, z and all ``U_j`` with ``j > k``.

    Here ``mu = lam - k h^v``; the module is induced from ``C[p, e]`` with
    monomials of weight above ``k`` removed, and is projective in the
    category of modules with weights at most ``lam``.
    """
    if not lam.is_zero_charge:
        raise ValueError("truncated projectives are built for zero central charge only")
    if k < 0 or depth < k:
        raise ValueError("need 0 <= k <= depth")
    depths, e, p, grades = {}, {}, {}, {}
    for t in range(k // 2 + 1):
        for s in range(k - 2 * t + 1):
            depths[(s, t)] = k - s - 2 * t
            grades[(s, t)] = s
    for (s, t) in depths:
        if (s, t + 1) in depths:
            e[(s, t)] = {(s, t + 1): Fraction(1)}
        if (s + 1, t) in depths:
            p[(s, t)] = {(s + 1, t): Fraction(1)}
    N = BorelModule(lam, depths, e, p, grades)
    return induced_module(N, depth, name=f"U/I({lam},{k})")


def _word_for(label) -> str:
    a, b, (s, t) = label
    return "f" * a + "q" * b + "p" * s + "e" * t


def _endomorphism_matrix(M: TruncatedModule, k: int, w: Sequence[Fraction]) -> list[list[Fraction]]:
    """Matrix on ``M_k`` of the endomorphism sending the generator to ``w``."""
    cols = []
    for lab in M.labels[k]:
        depth, vec = M.apply_word(_word_for(lab), k, w)
        assert depth == k
        cols.append([Fraction(x) for x in vec])
    return linalg.transpose(cols)


def _poly_at(coeffs: Sequence[Fraction], R: list[list[Fraction]]) -> list[list[Fraction]]:
    """Horner evaluation; ``coeffs`` from highest degree down."""
    n = len(R)
    out = linalg.zeros(n, n)
    for c in coeffs:
        out = linalg.matmul(out, R, n, n)
        for i in range(n):
            out[i][i] += c
    return out


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _summand_count(lam: Weight, k: int) -> int:
    """Number of distinct indecomposable summands of ``U/I``: the nu with L(nu)_mu != 0."""
    count = 0
    for j in range(k + 1):
        if simple_character(lam.shifted(j), k - j)[k - j]:
            count += 1
    return count


def projective_idempotent(M: TruncatedModule, lam: Weight, k: int, seed: int = 0, tries: int = 40) -> list[Fraction]:
    """Degree-0 idempotent of ``End(U/I)`` for the summand covering ``L(lam - k h^v)``.

    Endomorphisms are identified with vectors of ``M_k``.  A random degree-0
    element is split along the irreducible factors of its characteristic
    polynomial; the component whose image of the generator survives in
    ``L(lam - k h^v)`` is returned.
    """
    labels = M.labels[k]
    n = len(labels)
    gen_index = labels.index((0, 0, (0, 0)))
    unit = [Fraction(0)] * n
    unit[gen_index] = Fraction(1)
    degree0 = [i for i, (a, b, (s, t)) in enumerate(labels) if b == 0 and s == 0]
    want = _summand_count(lam, k)
    rng = random.Random(seed)
    x = sympy.Symbol("x")
    for _ in range(tries):
        w = [Fraction(0)] * n
        for i in degree0:
            w[i] = Fraction(rng.randint(-9, 9))
        R = _endomorphism_matrix(M, k, w)
        chi = sympy.Matrix(R).charpoly(x).as_expr()
        _, factors = sympy.factor_list(chi, x)
        if len(factors) != want:
            continue
        chi_poly = sympy.Poly(chi, x, domain="QQ")
        for g, mult in factors:
            gm = sympy.Poly(g, x, domain="QQ") ** mult
            rest = sympy.Poly(sympy.quo(chi_poly, gm), x, domain="QQ")
            s_, t_, h_ = sympy.gcdex(gm, rest)
            proj_poly = t_ * rest
            coeffs = [_to_fraction(c) for c in sympy.Poly(proj_poly, x, domain="QQ").all_coeffs()]
            Pi = _poly_at(coeffs, R)
            eps = linalg.matvec(Pi, unit)
            if eps[gen_index]:
                return eps
    raise RuntimeError("could not split the projective; increase tries")


def truncated_projective(lam: Weight, k: int, depth: int, seed: int = 0) -> TruncatedModule:
    """The indecomposable projective cover of ``L(lam - k h^v)`` among modules below ``lam``.

    Graded by pq-degree, with the generator in degree 0.
    """
    M = induced_projective(lam, k, depth)
    if _summand_count(lam, k) == 1:
        M.name = f"P({lam},{k})"
        return M
    eps = projective_idempotent(M, lam, k, seed)
    spaces = []
    for i in range(depth + 1):
        vecs = []
        for lab in M.labels[i]:
            a, b, (s, t) = lab
            start = k
            dd, vec = M.apply_word(_word_for(lab), start, eps)
            assert dd == i
            vecs.append([Fraction(v) for v in vec])
        spaces.append(vecs)
    return submodule(M, spaces, name=f"P({lam},{k})")


def verma_flag(M: TruncatedModule, report: int | None = None) -> list[int]:
    """Multiplicities of ``Verma(top - j h^v)`` in a Verma flag of ``M`` (character solve)."""
    ch = M.character()
    last = len(ch) - 1 if report is None else report
    out: list[int] = []
    for j in range(last + 1):
        val = ch[j] - sum(out[i] * ((j - i) // 2 + 1) for i in range(j))
        out.append(val)
    return out


def bgg_check(lam: Weight, k: int, depth: int) -> bool:
    """Verma-flag multiplicities of the projective equal Verma composition multiplicities."""
    if not lam.is_zero_charge:
        raise ValueError("BGG reciprocity is checked for zero central charge")
    if 2 * k > depth:
        raise ValueError("depth must be at least 2k")
    P = truncated_projective(lam, k, depth)
    flag = verma_flag(P, depth // 2)
    target = lam.shifted(k)
    for j in range(depth // 2 + 1):
        if j <= k:
            mult = composition_multiplicities(lam.shifted(j), 2 * (k - j)).get(target, 0)
        else:
            mult = 0
        if flag[j] != mult:
            return False
    return True


def graded_layer_highest_weights(M: TruncatedModule, grade: int) -> list[Weight]:
    """Weights of ``e``-singular vectors in one pq-degree layer (a sl2-submodule)."""
    out = []
    for i in range(M.depth + 1):
        idx = [c for c, g in enumerate(M.grades[i]) if g == grade]
        if not idx:
            continue
        mat = M.matrix("e", i)
        rows = [[Fraction(mat[r, c]) for c in idx] for r in range(mat.shape[0])]
        kernel = len(idx) - linalg.rank(rows) if rows else len(idx)
        out += [M.weight_at(i)] * kernel
    return out


def graded_layer_character(M: TruncatedModule, grade: int) -> list[int]:
    return [sum(1 for g in M.grades[i] if g == grade) for i in range(M.depth + 1)]


# ---------------------------------------------------------------- Ext^1

def ext1(lam: Weight, i: int, j: int, depth: int) -> int:
    """dim Ext^1(L(lam - i h^v), L(lam - j h^v)); indices may be negative.

    For the lower weight nu below mu this is dim Hom(K(mu), L(nu)) with K(mu)
    the radical of the Verma module, which holds because the Verma module is
    projective among modules with weights at most mu.  The other order follows
    from duality.  Self-extensions are taken to vanish.
    """
    if i == j:
        return 0
    if i > j:
        i, j = j, i
    m = j - i
    if m > depth - 2:
        raise ValueError(f"depth {depth} too small for weights {m} apart")
    return _ext_below(lam.shifted(i), lam.shifted(j), depth)


@lru_cache(maxsize=None)
def _ext_below(mu: Weight, nu: Weight, depth: int) -> int:
    m = mu.depth_below(nu)
    return module_hom(_radical(mu, depth), _simple(nu, depth - m)).dim


@lru_cache(maxsize=None)
def _radical(mu: Weight, depth: int) -> TruncatedModule:
    return radical_module(mu, depth)


@lru_cache(maxsize=None)
def _simple(nu: Weight, depth: int) -> TruncatedModule:
    return simple_module(nu, depth)


def ext_table(lam: Weight, indices: Sequence[int], depth: int) -> dict[str, int]:
    out = {}
    for i in indices:
        for j in indices:
            if i <= j:
                out[f"{i},{j}"] = ext1(lam, i, j, depth)
            else:
                out[f"{i},{j}"] = out[f"{j},{i}"]
    return out


def expected_ext_nonintegral(i: int, j: int) -> int:
    return 1 if abs(i - j) == 1 else 0


def expected_ext_integral(x: int, y: int) -> int:
    """Ext^1 between L(x h^v) and L(y h^v) in the integral zero-charge block."""
    if x == y:
        return 0
    if x < y:
        x, y = y, x
    if x != 0 and y == x - 1:
        return 1
    if x >= 0 and y == -x - 2:
        return 1
    return 0


# ---------------------------------------------------------------- half-integral block

@dataclass
class HalfIntegerCheck:
    hom_to_verma: int
    hom_to_partner: int
    hom_from_verma: int
    cycle_at_verma_zero: bool
    cycle_at_projective_zero: bool
    ext_between: int
    ext_self: int

    def ok(self) -> bool:
        return (
            self.hom_to_verma == 1
            and self.hom_to_partner == 1
            and self.hom_from_verma == 1
            and self.cycle_at_verma_zero
            and not self.cycle_at_projective_zero
            and self.ext_between == 1
            and self.ext_self == 0
        )


def half_integer_block_check(charge: Fraction = Fraction(1), depth: int = 10) -> HalfIntegerCheck:
    """Hom/Ext data of the block of ``lambda_1 = (-1/2, charge)``.

    The projective cover of ``L(r . lambda_1)`` is ``V_2 (x) Verma(lambda_0)``
    with ``lambda_0 = (-3/2, charge)``; ``a: P -> Verma(lambda_1)`` and
    ``b: Verma(lambda_1) -> P`` compose to zero in one order only.
    """
    lam0 = Weight(Fraction(-3, 2), charge)
    lam1 = Weight(Fraction(-1, 2), charge)
    P = tensor_sl2(verma(lam0, depth), 2)
    D1 = verma(lam1, depth)
    D2 = verma(lam1.dot(), depth - 2)
    to_verma = module_hom(P, D1)
    to_partner = module_hom(P, D2)
    from_verma = module_hom(D1, P)
    a = to_verma.maps[0]
    b = from_verma.maps[0]
    ab = compose(b, from_verma.offset, a)   # Verma -> P -> Verma
    ba = compose(a, to_verma.offset, b)     # P -> Verma -> P
    return HalfIntegerCheck(
        to_verma.dim, to_partner.dim, from_verma.dim,
        map_is_zero(ab), map_is_zero(ba),
        ext1(lam1, 0, 2, depth), ext1(lam1, 0, 0, depth),
    )


# ---------------------------------------------------------------- finite-dimensional part

def findim_projective(i: int, depth: int) -> dict[int, dict]:
    """Graded pieces of the projective cover of the (i+1)-dimensional simple module.

    Piece j is the space of degree-j polynomials in p, q (adjoint action,
    z = 0) tensored with the simple module; it is decomposed by counting
    ``e``-singular vectors per weight.
    """
    if i < 0 or depth < 0:
        raise ValueError("need i >= 0 and depth >= 0")
    e_gen = generator("e")
    out = {}
    for j in range(depth + 1):
        basis = [(b, k) for b in range(j + 1) for k in range(i + 1)]
        index = {x: n for n, x in enumerate(basis)}
        weight = {x: (j - 2 * x[0]) + (i - 2 * x[1]) for x in basis}
        cols = []
        for (b, k) in basis:
            col = [Fraction(0)] * len(basis)
            mono = AlgebraElement.monomial((0, b, 0, 0, j - b, 0))
            for m, c in bracket(e_gen, mono).items():
                if m[Z]:
                    continue
                col[index[(m[1], k)]] += c
            if k > 0:
                col[index[(b, k - 1)]] += k * (i - k + 1)
            cols.append(col)
        E = linalg.transpose(cols)
        decomposition: dict[int, int] = {}
        for w in sorted(set(weight.values()), reverse=True):
            idx = [n for n, x in enumerate(basis) if weight[x] == w]
            rows = [[E[r][c] for c in idx] for r in range(len(basis))]
            mult = len(idx) - linalg.rank(rows)
            if mult:
                decomposition[w] = mult
        out[j] = {"dim": len(basis), "decomposition": decomposition}
    return out


def clebsch_gordan(i: int, j: int) -> dict[int, int]:
    return {i + j - 2 * r: 1 for r in range(min(i, j) + 1)}


def tensor_findim(M: TruncatedModule, n: int) -> TruncatedModule:
    """Tensor product with the n-dimensional simple sl2-module (p, q act on M only)."""
    return tensor_sl2(M, n)


def graded_hom_counts(lam: Weight, k: int, depth: int) -> dict[str, int]:
    """Graded hom dimensions between neighbouring projectives below ``lam``.

    Keys: ``"up"`` for ``P(k+1)<-1> -> P(k)``, ``"down"`` for
    ``P(k-1)<-1> -> P(k)``, ``"loop"`` for ``P(k)<-2> -> P(k)``, ``"flat"``
    for degree-0 maps ``P(k+1) -> P(k)``.
    """
    Pk = truncated_projective(lam, k, depth)
    Pup = truncated_projective(lam, k + 1, depth)
    out = {
        "up": module_hom(Pup, Pk, shift=1).dim,
        "loop": module_hom(Pk, Pk, shift=2).dim,
        "flat": module_hom(Pup, Pk, shift=0).dim,
    }
    if k > 0:
        Pdown = truncated_projective(lam, k - 1, depth)
        out["down"] = module_hom(Pdown, Pk, shift=1).dim
    return out
