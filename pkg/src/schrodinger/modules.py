"""Finite-depth weight modules given by explicit action matrices.

A :class:`TruncatedModule` stores the weight spaces ``M_i`` of weight
``top - i h^v`` for ``i = 0..depth`` and one matrix per generator and
source depth.  Raising operators (``e``, ``p``) are always present; a
lowering operator out of a space whose target lies below ``depth`` is
absent, so every stored matrix is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Hashable, Sequence

import numpy as np

from . import linalg
from .pbw import GENERATORS, lie_bracket

# change of depth under each generator (depth grows downwards)
SHIFT = {"f": 2, "q": 1, "h": 0, "z": 0, "p": -1, "e": -2}
LOWERING = ("f", "q")
RAISING = ("e", "p")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class Weight:
    """Highest weight data ``(lambda(h), lambda(z))``, both exact rationals."""

    h_val: Fraction
    z_val: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "h_val", _frac(self.h_val))
        object.__setattr__(self, "z_val", _frac(self.z_val))

    @property
    def is_integral(self) -> bool:
        return self.h_val.denominator == 1

    @property
    def is_half_integral(self) -> bool:
        return self.h_val.denominator == 2

    @property
    def is_zero_charge(self) -> bool:
        return self.z_val == 0

    def shifted(self, k: int) -> "Weight":
        """The weight ``self - k h^v``."""
        return Weight(self.h_val - k, self.z_val)

    def dot(self) -> "Weight":
        """Dot action of the nontrivial Weyl group element: h -> -h - 3."""
        return Weight(-self.h_val - 3, self.z_val)

    def depth_below(self, other: "Weight") -> int | None:
        """k with ``other == self - k h^v`` (any sign), or None."""
        if other.z_val != self.z_val:
            return None
        diff = self.h_val - other.h_val
        if diff.denominator != 1:
            return None
        return int(diff)

    def __str__(self) -> str:
        return f"({self.h_val}, {self.z_val})"


def obj_zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def obj_array(rows: Sequence[Sequence]) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            arr[i, j] = _frac(x)
    return arr


def _nonzero(a: np.ndarray) -> bool:
    return any(x != 0 for x in a.flat)


def matvec(mat: np.ndarray, vec: Sequence[Fraction]) -> list[Fraction]:
    """``mat @ vec`` skipping zero entries (the matrices here are sparse)."""
    rows = mat.shape[0]
    out = [Fraction(0)] * rows
    for c, x in enumerate(vec):
        if x:
            col = mat[:, c]
            for r in range(rows):
                y = col[r]
                if y:
                    out[r] += x * y
    return out


class TruncatedModule:
    """Weight spaces ``0..depth`` below ``top`` with six action maps.

    ``actions[g][i]`` is the matrix of generator ``g`` from space ``i`` to
    space ``i + SHIFT[g]``; columns index the source basis.
    """

    def __init__(
        self,
        top: Weight,
        labels: Sequence[Sequence[Hashable]],
        actions: dict[str, dict[int, np.ndarray]],
        grades: Sequence[Sequence[int]] | None = None,
        name: str = "",
    ):
        self.top = top
        self.labels = [list(ls) for ls in labels]
        self.actions = actions
        self.grades = [list(g) for g in grades] if grades is not None else None
        self.name = name
        for g in GENERATORS:
            self.actions.setdefault(g, {})

    @property
    def depth(self) -> int:
        return len(self.labels) - 1

    def dim(self, i: int) -> int:
        if 0 <= i <= self.depth:
            return len(self.labels[i])
        return 0

    def character(self) -> list[int]:
        return [len(ls) for ls in self.labels]

    def weight_at(self, i: int) -> Weight:
        return self.top.shifted(i)

    def matrix(self, g: str, i: int) -> np.ndarray | None:
        """Action of ``g`` out of space ``i``; None if it leaves the truncation."""
        j = i + SHIFT[g]
        if not (0 <= i <= self.depth):
            return None
        if j < 0:
            return obj_zeros(0, self.dim(i))
        if j > self.depth:
            return None
        return self.actions[g][i]

    def apply(self, g: str, i: int, vec: Sequence[Fraction]) -> list[Fraction]:
        mat = self.matrix(g, i)
        if mat is None:
            raise IndexError(f"{g} acting on depth {i} leaves the truncation")
        return matvec(mat, vec)

    def apply_word(self, word: str, i: int, vec: Sequence[Fraction]) -> tuple[int, list[Fraction]]:
        """Apply the letters of ``word`` right-to-left (as an algebra product)."""
        cur = list(vec)
        for k, g in enumerate(reversed(word)):
            cur = self.apply(g, i, cur)
            i += SHIFT[g]
            if i < 0:
                # above the top weight everything vanishes
                final = i + sum(SHIFT[x] for x in word[: len(word) - k - 1])
                n = self.dim(final) if 0 <= final <= self.depth else 0
                return final, [Fraction(0)] * n
        return i, cur

    def relation_defects(self) -> list[tuple[str, str, int]]:
        """(x, y, depth) triples where ``[X, Y] != bracket(x, y)`` inside the truncation."""
        bad = []
        for x, y in product(GENERATORS, repeat=2):
            if x >= y:
                continue
            br = lie_bracket(GENERATORS.index(x), GENERATORS.index(y))
            for i in range(self.depth + 1):
                xs, ys = SHIFT[x], SHIFT[y]
                my = self.matrix(y, i)
                mx = self.matrix(x, i)
                if my is None or mx is None:
                    continue
                mxy = self.matrix(x, i + ys) if 0 <= i + ys else None
                myx = self.matrix(y, i + xs) if 0 <= i + xs else None
                target = i + xs + ys
                if target > self.depth:
                    continue
                if (i + ys >= 0 and mxy is None) or (i + xs >= 0 and myx is None):
                    continue
                rows = self.dim(target) if target >= 0 else 0
                cols = self.dim(i)
                # a composite whose first step leaves the module is zero
                lhs = obj_zeros(rows, cols)
                if i + ys >= 0 and target >= 0:
                    lhs = lhs + mxy.dot(my)
                if i + xs >= 0 and target >= 0:
                    lhs = lhs - myx.dot(mx)
                rhs = obj_zeros(rows, cols)
                for gidx, c in br.items():
                    mg = self.matrix(GENERATORS[gidx], i)
                    if mg is None:
                        rhs = None
                        break
                    if target >= 0:
                        rhs = rhs + c * mg
                if rhs is None:
                    continue
                if target >= 0 and _nonzero(lhs - rhs):
                    bad.append((x, y, i))
        return bad

    def check_relations(self) -> bool:
        return not self.relation_defects()

    def vector_label(self, i: int, vec: Sequence[Fraction]) -> list[tuple[Hashable, Fraction]]:
        return [(lab, c) for lab, c in zip(self.labels[i], vec) if c]

    def __repr__(self) -> str:
        return f"TruncatedModule({self.name or 'M'}, top={self.top}, character={self.character()})"


# ------------------------------------------------------------- constructions

def from_action(
    top: Weight,
    labels: Sequence[Sequence[Hashable]],
    act: Callable[[str, int, Hashable], dict[Hashable, Fraction]],
    grades: Sequence[Sequence[int]] | None = None,
    name: str = "",
) -> TruncatedModule:
    """Build a module from a function ``act(g, depth, label) -> {label: coeff}``."""
    index = [{lab: k for k, lab in enumerate(ls)} for ls in labels]
    depth = len(labels) - 1
    actions: dict[str, dict[int, np.ndarray]] = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for i in range(depth + 1):
            j = i + SHIFT[g]
            if j < 0 or j > depth:
                continue
            mat = obj_zeros(len(labels[j]), len(labels[i]))
            for col, lab in enumerate(labels[i]):
                for tlab, c in act(g, i, lab).items():
                    if c:
                        mat[index[j][tlab], col] += c
            actions[g][i] = mat
    return TruncatedModule(top, labels, actions, grades, name)


def _echelon(vectors: Sequence[Sequence[Fraction]]) -> tuple[list[dict[int, Fraction]], list[int]]:
    return linalg.rref_sparse(linalg.to_sparse(vectors))


def submodule(M: TruncatedModule, spaces: Sequence[Sequence[Sequence[Fraction]]], name: str = "") -> TruncatedModule:
    """Restriction of ``M`` to the subspaces ``spaces[i]`` (assumed stable)."""
    bases = [linalg.row_basis(sp) if sp else [] for sp in spaces]
    ech = [_echelon(b) if b else ([], []) for b in bases]

    def coords(i: int, v: Sequence[Fraction]) -> list[Fraction]:
        rows, piv = ech[i]
        # bases[i] is in reduced echelon form, so coordinates are pivot entries
        out = [Fraction(v[p]) for p in piv]
        check = [Fraction(0)] * len(v)
        for c, r in zip(out, rows):
            for j, x in r.items():
                check[j] += c * x
        if any(a != b for a, b in zip(check, v)):
            raise ValueError(f"subspace at depth {i} is not stable")
        return out

    actions: dict[str, dict[int, np.ndarray]] = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for i in range(M.depth + 1):
            mat = M.matrix(g, i)
            j = i + SHIFT[g]
            if mat is None or j < 0:
                continue
            out = obj_zeros(len(bases[j]), len(bases[i]))
            for col, b in enumerate(bases[i]):
                img = matvec(mat, b)
                for row, c in enumerate(coords(j, img)):
                    out[row, col] = c
            actions[g][i] = out
    labels = [[tuple(b) for b in basis] for basis in bases]
    grades = None
    if M.grades is not None:
        grades = []
        for i, basis in enumerate(bases):
            gs = []
            for b in basis:
                seen = {M.grades[i][k] for k, x in enumerate(b) if x}
                if len(seen) != 1:
                    grades = None
                    break
                gs.append(seen.pop())
            if grades is None:
                break
            grades.append(gs)
    return TruncatedModule(M.top, labels, actions, grades, name or f"sub({M.name})")


def quotient(M: TruncatedModule, spaces: Sequence[Sequence[Sequence[Fraction]]], name: str = "") -> TruncatedModule:
    """Quotient of ``M`` by the (stable) subspaces ``spaces[i]``.

    The quotient basis at each depth is the set of standard basis vectors in
    non-pivot positions of the echelonized subspace.
    """
    ech = [_echelon(sp) if sp else ([], []) for sp in spaces]
    keep = []
    for i in range(M.depth + 1):
        piv = set(ech[i][1])
        keep.append([k for k in range(M.dim(i)) if k not in piv])

    def reduce(i: int, v: list[Fraction]) -> list[Fraction]:
        rows, piv = ech[i]
        v = list(v)
        for r, p in zip(rows, piv):
            c = v[p]
            if c:
                for j, x in r.items():
                    v[j] -= c * x
        return [v[k] for k in keep[i]]

    actions: dict[str, dict[int, np.ndarray]] = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for i in range(M.depth + 1):
            mat = M.matrix(g, i)
            j = i + SHIFT[g]
            if mat is None or j < 0:
                continue
            out = obj_zeros(len(keep[j]), len(keep[i]))
            for col, k in enumerate(keep[i]):
                img = [Fraction(x) for x in mat[:, k]]
                for row, c in enumerate(reduce(j, img)):
                    out[row, col] = c
            actions[g][i] = out
    labels = [[M.labels[i][k] for k in keep[i]] for i in range(M.depth + 1)]
    grades = [[M.grades[i][k] for k in keep[i]] for i in range(M.depth + 1)] if M.grades else None
    return TruncatedModule(M.top, labels, actions, grades, name or f"quot({M.name})")


def dual_module(M: TruncatedModule) -> TruncatedModule:
    """Graded dual twisted by the anti-automorphism sigma.

    (x.g)(v) = g(sigma(x) v) with sigma(e) = -f, sigma(f) = -e, sigma(p) = q,
    sigma(q) = p; h and z act by the same diagonal matrices.
    """
    twist = {"e": ("f", -1), "f": ("e", -1), "p": ("q", 1), "q": ("p", 1)}
    actions: dict[str, dict[int, np.ndarray]] = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for i in range(M.depth + 1):
            j = i + SHIFT[g]
            if j < 0 or j > M.depth:
                continue
            if g in twist:
                src, sign = twist[g]
                # sigma(g) maps space j to space i
                mat = M.matrix(src, j)
                if mat is None:
                    continue
                actions[g][i] = (sign * mat).T.copy()
            else:
                actions[g][i] = M.actions[g][i].T.copy()
    labels = [[("dual", lab) for lab in ls] for ls in M.labels]
    grades = [[-x for x in gs] for gs in M.grades] if M.grades else None
    return TruncatedModule(M.top, labels, actions, grades, f"dual({M.name})")


def undual_labels(M: TruncatedModule) -> list[list[Hashable]]:
    return [[lab[1] if isinstance(lab, tuple) and lab and lab[0] == "dual" else lab for lab in ls] for ls in M.labels]


def sl2_simple_matrices(n: int) -> tuple[list[int], dict[str, dict[int, Fraction]]]:
    """The n-dimensional simple sl2-module in the basis f^k v (k = 0..n-1).

    Returns the h-weights and, for e and f, the scalar carrying basis vector
    k to k-1 (for e) or k+1 (for f).
    """
    top = n - 1
    weights = [top - 2 * k for k in range(n)]
    e = {k: Fraction(k * (top - k + 1)) for k in range(1, n)}
    f = {k: Fraction(1) for k in range(n - 1)}
    return weights, {"e": e, "f": f}


def tensor_sl2(M: TruncatedModule, n: int) -> TruncatedModule:
    """``V_n (x) M`` with V_n the n-dimensional simple sl2-module.

    V_n is an s-module through the projection onto sl2, so p, q act only on
    the second factor, and z acts by the charge of ``M``.  Spaces up to the
    depth of ``M`` are complete.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _, sl2 = sl2_simple_matrices(n)
    top = Weight(M.top.h_val + (n - 1), M.top.z_val)
    depth = M.depth
    labels: list[list[tuple[int, Hashable]]] = []
    where: list[list[tuple[int, int, int]]] = []  # (k, depth in M, index in M)
    for i in range(depth + 1):
        ls, ws = [], []
        for k in range(n):
            j = i - 2 * k
            if 0 <= j <= M.depth:
                for idx, lab in enumerate(M.labels[j]):
                    ls.append((k, lab))
                    ws.append((k, j, idx))
        labels.append(ls)
        where.append(ws)
    index = [{(k, j, idx): pos for pos, (k, j, idx) in enumerate(ws)} for ws in where]

    actions: dict[str, dict[int, np.ndarray]] = {g: {} for g in GENERATORS}
    for g in GENERATORS:
        for i in range(depth + 1):
            t = i + SHIFT[g]
            if t < 0 or t > depth:
                continue
            mat = obj_zeros(len(labels[t]), len(labels[i]))
            for col, (k, j, idx) in enumerate(where[i]):
                # action on the M factor
                mm = M.matrix(g, j)
                jt = j + SHIFT[g]
                if mm is not None and 0 <= jt:
                    for r in range(mm.shape[0]):
                        c = mm[r, idx]
                        if c:
                            mat[index[t][(k, jt, r)], col] += c
                # action on the V factor (sl2 part only)
                if g == "h":
                    mat[col, col] += (n - 1) - 2 * k
                elif g == "e" and k in sl2["e"]:
                    mat[index[t][(k - 1, j, idx)], col] += sl2["e"][k]
                elif g == "f" and k in sl2["f"]:
                    key = (k + 1, j, idx)
                    if key in index[t]:
                        mat[index[t][key], col] += sl2["f"][k]
            actions[g][i] = mat
    grades = None
    if M.grades is not None:
        grades = [[M.grades[j][idx] for (k, j, idx) in ws] for ws in where]
    return TruncatedModule(top, labels, actions, grades, f"V{n}({M.name})")


# ------------------------------------------------------------- homomorphisms

@dataclass
class HomSpace:
    """Intertwiners ``M -> N`` found inside a depth window of ``M``.

    ``maps`` holds one dict per basis element: depth of ``M`` -> matrix.
    """

    dim: int
    maps: list[dict[int, np.ndarray]] = field(default_factory=list)
    window: int = 0
    offset: int = 0

    def __int__(self) -> int:
        return self.dim


def generator_depths(M: TruncatedModule, upto: int | None = None) -> list[int]:
    """Depths where ``M_i`` is not spanned by ``f M_{i-2} + q M_{i-1}``."""
    out = []
    last = M.depth if upto is None else min(upto, M.depth)
    for i in range(last + 1):
        if not M.dim(i):
            continue
        imgs = []
        for g in LOWERING:
            src = i - SHIFT[g]
            if src < 0:
                continue
            mat = M.matrix(g, src)
            if mat is not None and mat.size:
                imgs.extend(list(map(list, mat.T)))
        if linalg.rank([[Fraction(x) for x in v] for v in imgs]) < M.dim(i) if imgs else True:
            out.append(i)
    return out


def module_hom(
    M: TruncatedModule,
    N: TruncatedModule,
    shift: int | None = None,
    window: int | None = None,
) -> HomSpace:
    """Degree-0 module maps ``M -> N`` computed inside a safe depth window.

    With ``shift`` set, both modules must carry grades and only maps sending
    grade ``d`` of ``M`` to grade ``d + shift`` of ``N`` are allowed.

    Equations are imposed wherever the generator matrices exist in both
    modules; the dimension is that of the solution space restricted to the
    generating spaces of ``M`` inside the window (default ``M.depth - 2``).
    """
    offset = N.top.depth_below(M.top)  # depth in N of M's top weight
    if offset is None:
        return HomSpace(0, [], 0, 0)
    W = M.depth - 2 if window is None else min(window, M.depth)
    if W < 0:
        W = M.depth
    if shift is not None and (M.grades is None or N.grades is None):
        raise ValueError("graded homs need graded modules")

    # unknown blocks: for i in 0..W with N depth i+offset in 0..N.depth
    var_index: dict[tuple[int, int, int], int] = {}
    blocks: dict[int, tuple[int, int]] = {}
    for i in range(W + 1):
        j = i + offset
        if j < 0 or j > N.depth or not M.dim(i) or not N.dim(j):
            continue
        blocks[i] = (N.dim(j), M.dim(i))
        for r in range(N.dim(j)):
            for c in range(M.dim(i)):
                if shift is not None and N.grades[j][r] != M.grades[i][c] + shift:
                    continue
                var_index[(i, r, c)] = len(var_index)

    def known_zero(i: int) -> bool:
        # N has nothing at this weight (above its top) or M has nothing
        j = i + offset
        return j < 0 or not M.dim(i) or not N.dim(j)

    def has_block(i: int) -> bool:
        return i in blocks

    rows: list[dict[int, Fraction]] = []
    for g in ("e", "f", "p", "q"):
        d = SHIFT[g]
        for i in range(W + 1):
            t = i + d
            if t < 0 and i + offset + d < 0:
                continue
            if t > W:
                continue
            mM = M.matrix(g, i)
            j = i + offset
            if mM is None or not M.dim(i):
                continue
            if j < 0 or j > N.depth:
                # T_i is zero here; only T_t X_M = 0 remains, if N at t exists
                if not (0 <= t <= W) or not has_block(t):
                    continue
                mN = None
            else:
                mN = N.matrix(g, j)
                if mN is None:
                    continue
            if not has_block(i) and not (0 <= t and has_block(t)):
                continue
            if t >= 0 and not has_block(t) and not known_zero(t):
                continue
            rdim = N.dim(j + d) if 0 <= j + d <= N.depth else 0
            # equation: T_t X_M(i) - X_N(j) T_i = 0, entries (r, c)
            for r in range(rdim):
                for c in range(M.dim(i)):
                    row: dict[int, Fraction] = {}
                    if t >= 0 and has_block(t):
                        for k in range(M.dim(t)):
                            x = mM[k, c]
                            v = var_index.get((t, r, k))
                            if x and v is not None:
                                row[v] = row.get(v, 0) + x
                    if mN is not None and has_block(i):
                        for k in range(N.dim(j)):
                            x = mN[r, k]
                            v = var_index.get((i, k, c))
                            if x and v is not None:
                                row[v] = row.get(v, 0) - x
                    row = {a: b for a, b in row.items() if b}
                    if row:
                        rows.append(row)

    nvars = len(var_index)
    sols = linalg.nullspace_sparse(rows, nvars) if nvars else []
    gens = [i for i in generator_depths(M, W) if i in blocks]
    gen_vars = [v for (i, r, c), v in var_index.items() if i in gens]
    proj = [[s[v] for v in gen_vars] for s in sols]
    reduced, piv = linalg.rref_sparse(linalg.to_sparse(proj)) if proj else ([], [])
    # choose solutions whose projections are independent
    chosen: list[list[Fraction]] = []
    seen: list[list[Fraction]] = []
    for s, p in zip(sols, proj):
        if linalg.rank(seen + [p]) > len(seen):
            seen.append(p)
            chosen.append(s)
    maps = []
    for s in chosen:
        mp: dict[int, np.ndarray] = {}
        for i, (nr, nc) in blocks.items():
            mat = obj_zeros(nr, nc)
            for r in range(nr):
                for c in range(nc):
                    v = var_index.get((i, r, c))
                    if v is not None:
                        mat[r, c] = s[v]
            mp[i] = mat
        maps.append(mp)
    return HomSpace(len(reduced), maps, W, offset)


def compose(first: dict[int, np.ndarray], first_offset: int, second: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
    """``second . first`` for maps stored per source depth.

    ``first`` maps depth i of its source to depth ``i + first_offset`` of the
    middle module, where ``second`` is indexed.
    """
    out = {}
    for i, m1 in first.items():
        m2 = second.get(i + first_offset)
        if m2 is not None:
            out[i] = m2.dot(m1)
    return out


def map_is_zero(mp: dict[int, np.ndarray]) -> bool:
    return not any(_nonzero(m) for m in mp.values())
