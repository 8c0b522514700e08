"""Exact rational linear algebra on small dense/sparse matrices.

Matrices are plain lists of rows of :class:`fractions.Fraction`.  Elimination
runs on sparse row dictionaries, which keeps the kernel computations for the
adjoint maps and the intertwiner systems cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
SparseRow = dict[int, Fraction]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    if not m:
        return 0, (cols or 0)
    return len(m), len(m[0])


def matmul(a: Matrix, b: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``a @ b``.  ``cols`` is needed when ``b`` has no rows."""
    n = len(a)
    k = len(b) if b else (inner or 0)
    c = len(b[0]) if b else (cols or 0)
    out = zeros(n, c)
    for i in range(n):
        row = a[i]
        orow = out[i]
        for t in range(k):
            x = row[t]
            if x:
                brow = b[t]
                for j in range(c):
                    y = brow[j]
                    if y:
                        orow[j] += x * y
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def transpose(m: Matrix, rows: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(rows or 0)]
    return [list(col) for col in zip(*m)]


def is_zero(m: Matrix) -> bool:
    return all(not x for row in m for x in row)


def to_sparse(rows: Iterable[Sequence[Fraction]]) -> list[SparseRow]:
    return [{j: Fraction(x) for j, x in enumerate(r) if x} for r in rows]


def rref_sparse(rows: Iterable[SparseRow]) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form of sparse rows.

    Returns the nonzero reduced rows (each with leading coefficient 1) and
    the list of pivot columns, sorted by pivot.
    """
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        row = {j: x for j, x in raw.items() if x}
        # clear every pivot column (pivot rows are already fully reduced)
        for col in [j for j in row if j in pivots]:
            factor = row.get(col)
            if not factor:
                continue
            prow = pivots[col]
            for j, x in prow.items():
                v = row.get(j, 0) - factor * x
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {j: x * inv for j, x in row.items()}
        # back-substitute into earlier pivot rows
        for prow in pivots.values():
            factor = prow.get(lead)
            if factor:
                for j, x in row.items():
                    v = prow.get(j, 0) - factor * x
                    if v:
                        prow[j] = v
                    else:
                        prow.pop(j, None)
        pivots[lead] = row
    order = sorted(pivots)
    return [pivots[p] for p in order], order


def rank(m: Matrix) -> int:
    return len(rref_sparse(to_sparse(m))[0])


def nullspace_sparse(rows: Iterable[SparseRow], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : row . x = 0 for every row}`` as dense vectors."""
    reduced, pivots = rref_sparse(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            c = row.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def nullspace(m: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    return nullspace_sparse(to_sparse(m), cols)


def row_basis(vectors: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced echelon basis of the span of ``vectors`` (dense output)."""
    vecs = list(vectors)
    if not vecs:
        return []
    n = len(vecs[0])
    reduced, _ = rref_sparse(to_sparse(vecs))
    return [[r.get(j, Fraction(0)) for j in range(n)] for r in reduced]


def column_space(m: Matrix) -> list[list[Fraction]]:
    """Echelon basis of the column space, returned as a list of vectors."""
    return row_basis(transpose(m))


def solve_in_span(basis: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates ``c`` with ``sum c_i basis_i == target``; raises if impossible."""
    k = len(basis)
    n = len(target)
    # unknowns c_0..c_{k-1}, augmented column k
    rows = []
    for j in range(n):
        row = {i: Fraction(basis[i][j]) for i in range(k) if basis[i][j]}
        if target[j]:
            row[k] = -Fraction(target[j])
        if row:
            rows.append(row)
    reduced, pivots = rref_sparse(rows)
    if k in pivots:
        raise ValueError("vector is not in the span")
    coords = [Fraction(0)] * k
    for row, p in zip(reduced, pivots):
        coords[p] = -row.get(k, Fraction(0))
    return coords


def intersect_spaces(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Echelon basis of span(a) ∩ span(b) (all vectors of equal length)."""
    if not a or not b:
        return []
    n = len(a[0])
    # x.a - y.b = 0
    k = len(a)
    cols = k + len(b)
    rows = []
    for j in range(n):
        row = {}
        for i, v in enumerate(a):
            if v[j]:
                row[i] = Fraction(v[j])
        for i, v in enumerate(b):
            if v[j]:
                row[k + i] = -Fraction(v[j])
        if row:
            rows.append(row)
    sols = nullspace_sparse(rows, cols)
    vecs = []
    for s in sols:
        vec = [Fraction(0)] * n
        for i in range(k):
            if s[i]:
                for j in range(n):
                    vec[j] += s[i] * a[i][j]
        vecs.append(vec)
    return row_basis(vecs)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    rows = [{**{j: x for j, x in enumerate(r) if x}, **{n + i: Fraction(1)}} for i, r in enumerate(m)]
    reduced, pivots = rref_sparse(rows)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise ZeroDivisionError("matrix is singular")
    return [[reduced[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]
