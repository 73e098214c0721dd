"""Dense exact linear algebra over a GF, on raw element indices.

Sizes here are tiny (matrices bounded by binomial(8, 4) columns), so
plain Gaussian elimination is used throughout.
"""

from __future__ import annotations

from .gf import GF

__all__ = ["row_reduce", "rank", "kernel_basis"]


def row_reduce(field: GF, rows: list[list[int]]) -> tuple[list[list[int]], int]:
    """Reduced row echelon form (left convention) and rank."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = field.inv(rows[rk][col])
        rows[rk] = [field.mul(inv, v) for v in rows[rk]]
        for r in range(len(rows)):
            if r != rk and rows[r][col]:
                f = rows[r][col]
                rows[r] = [field.sub(a, field.mul(f, b))
                           for a, b in zip(rows[r], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rows, rk


def rank(field: GF, rows: list[list[int]]) -> int:
    return row_reduce(field, rows)[1]


def kernel_basis(field: GF, rows: list[list[int]]) -> list[tuple[int, ...]]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, rk = row_reduce(field, rows)
    pivots = []
    c = 0
    for r in range(rk):
        while c < ncols and not reduced[r][c]:
            c += 1
        pivots.append(c)
        c += 1
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(reduced[r][f])
        basis.append(tuple(vec))
    return basis
