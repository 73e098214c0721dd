"""Exact MacWilliams transform, used as a global checksum on sweeps.

The dual weight enumerator is computed as

    q^(-k) * sum_i A_i (x + (q-1) y)^(n-i) (x - y)^i

by convolving binomial coefficient lists in exact integer arithmetic.
A complete distribution is consistent only if every dual coefficient is a
nonnegative integer.
"""

from __future__ import annotations

from math import comb

__all__ = ["dual_distribution", "check_macwilliams"]


def _term_poly(n: int, i: int, q: int) -> list[int]:
    """Coefficients of y^j in (x + (q-1)y)^(n-i) (x - y)^i, x-degree n-j."""
    a = [comb(n - i, j) * (q - 1) ** j for j in range(n - i + 1)]
    b = [(-1) ** s * comb(i, s) for s in range(i + 1)]
    out = [0] * (n + 1)
    for j, aj in enumerate(a):
        if aj:
            for s, bs in enumerate(b):
                out[j + s] += aj * bs
    return out


def dual_distribution(counts: dict[int, int], n: int, q: int, k: int) -> dict[int, int]:
    """Weight distribution of the dual code, exact; raises on inconsistency."""
    acc = [0] * (n + 1)
    for i, a_i in counts.items():
        if a_i:
            for j, c in enumerate(_term_poly(n, i, q)):
                acc[j] += a_i * c
    size = q**k
    dual = {}
    for j, total in enumerate(acc):
        if total % size != 0:
            raise ValueError(f"MacWilliams transform not integral at weight {j}")
        b_j = total // size
        if b_j < 0:
            raise ValueError(f"MacWilliams transform negative at weight {j}")
        if b_j:
            dual[j] = b_j
    return dual


def check_macwilliams(counts: dict[int, int], n: int, q: int, k: int) -> bool:
    """True iff the dual distribution is integral and nonnegative."""
    try:
        dual = dual_distribution(counts, n, q, k)
    except ValueError:
        return False
    return dual.get(0) == 1 and sum(dual.values()) == q ** (n - k)
