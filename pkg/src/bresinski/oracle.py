"""Linear-algebra count of minimal generators, independent of fiber graphs.

In degree d the ideal I_H is spanned by the differences of factorizations of
d.  The part generated from lower degrees is sum_i x_i * (I_H)_{d - n_i}.  The
number of minimal generators needed in degree d is the difference of the two
ranks, computed here exactly over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .semigroup import NumericalSemigroup
from .toric import factorizations, scan_bound


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by Gaussian elimination on Fractions."""
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col] / p[col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], p)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _difference_rows(facts: Sequence[tuple[int, ...]], index: dict[tuple[int, ...], int]) -> list[list[int]]:
    rows = []
    for a in facts[1:]:
        row = [0] * len(index)
        row[index[facts[0]]] += 1
        row[index[a]] -= 1
        rows.append(row)
    return rows


def mu_in_degree(H: NumericalSemigroup, d: int) -> int:
    fiber = factorizations(H, d).factorizations
    if len(fiber) < 2:
        return 0
    index = {a: k for k, a in enumerate(fiber)}
    full = exact_rank(_difference_rows(fiber, index))
    lower: list[list[int]] = []
    for i, n in enumerate(H.generators):
        if d - n < 0:
            continue
        shifted = [a[:i] + (a[i] + 1,) + a[i + 1:] for a in factorizations(H, d - n).factorizations]
        lower.extend(_difference_rows(shifted, index))
    return full - exact_rank(lower)


def oracle_betti(H: NumericalSemigroup, upper: int | None = None) -> dict[int, int]:
    """Map degree -> number of minimal generators, for degrees up to ``upper``."""
    if upper is None:
        upper = scan_bound(H)
    out = {}
    for d in range(1, upper + 1):
        k = mu_in_degree(H, d)
        if k:
            out[d] = k
    return out


def oracle_mu(H: NumericalSemigroup) -> int:
    return sum(oracle_betti(H).values())
