"""Weighted totals, weighted differences and EMC-vs-D statistics.

The weighted total ``T(a) = sum i * a_i`` equals the cell count of the
composition's Young diagram, and for a tuple the weighted difference is the
vector of totals modulo the all-ones vector, written with its last
coordinate forced to zero and dropped.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from .compositions import (
    Composition,
    check_common_shape,
    corners,
    count_compositions,
    diagram_of,
    enumerate_compositions,
    enumerate_diagrams,
)
from .emc import emc, unimodal_symdiff
from .tables import DistributionTable, DValue

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Exhaustive enumeration would visit more tuples than allowed."""


def weighted_total(c: Composition) -> int:
    return sum(i * a for i, a in enumerate(c))


def canonical_dvalue(totals: Sequence[int]) -> DValue:
    last = totals[-1]
    return tuple(t - last for t in totals[:-1])


def weighted_difference(tuple_: Sequence[Composition]) -> DValue:
    """Weighted totals of the tuple, shifted so the last is zero, last dropped.

    For a pair this is the 1-tuple ``(T(a) - T(b),)``.
    """
    check_common_shape(tuple_)
    return canonical_dvalue([weighted_total(c) for c in tuple_])


def pp_box(x: int, y: int, z: int) -> int:
    """Number of plane partitions fitting in an ``x * y * z`` box (MacMahon)."""
    if min(x, y, z) < 0:
        raise ValueError("box dimensions must be nonnegative")
    num = 1
    den = 1
    for i in range(1, x + 1):
        for j in range(1, y + 1):
            for k in range(1, z + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    q, r = divmod(num, den)
    assert r == 0
    return q


def pp_2(x: int, y: int) -> int:
    """Plane partitions in an ``x * y * 2`` box, via the closed product form."""
    if min(x, y) < 0:
        raise ValueError("box dimensions must be nonnegative")
    num = prod(range(x + 1, x + y + 1)) * prod(range(x + 2, x + y + 2))
    q, r = divmod(num, factorial(y) * factorial(y + 1))
    assert r == 0
    return q


def proportion_emc_eq_absd(s: int, n: int) -> Fraction:
    """Exact share of ordered pairs in ``C(s, n)^2`` with ``EMC = |D|``.

    ``2(s+n) / (n(s+1)) - (n-1)! / ((s+1)(s+2)...(s+n-1))``
    """
    if s < 1 or n < 1:
        raise ValueError(f"need s, n >= 1, got s={s}, n={n}")
    rising = prod(range(s + 1, s + n))
    return Fraction(2 * (s + n), n * (s + 1)) - Fraction(factorial(n - 1), rising)


def proportion_via_plane_partitions(s: int, n: int) -> Fraction:
    """Same share computed as ``(2 PP(s, n-1, 2) - |C|) / |C|^2``."""
    total = comb(s + n - 1, n - 1)
    return Fraction(2 * pp_2(s, n - 1) - total, total * total)


def tail_threshold(s: int, n: int) -> int:
    """From this D onward every pair satisfies EMC = D."""
    return (s - 1) * (n - 2)


def count_emc2_d0(s: int, n: int) -> int:
    """Ordered equal-size pairs at symmetric difference 2: ``sum cor(g)(cor(g)-1)`` over ``Y(s, n-1)``."""
    return sum(k * (k - 1) for k in map(corners, enumerate_diagrams(s, n - 1)))


def _check_budget(s, n, d, budget):
    size = count_compositions(s, n) ** d
    if size > budget:
        raise BudgetExceeded(
            f"C({s},{n})^{d} has {size} tuples, over the budget of {budget}"
        )


def emc_vs_d_table(s: int, n: int, d: int = 2, budget: int = DEFAULT_BUDGET) -> DistributionTable:
    """Exhaustive (D, EMC) counts over ``C(s, n)^d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    _check_budget(s, n, d, budget)
    comps = list(enumerate_compositions(s, n))
    diagrams = [diagram_of(c) for c in comps]
    totals = [weighted_total(c) for c in comps]
    counts: dict = {}
    for idx in product(range(len(comps)), repeat=d):
        key = (
            canonical_dvalue([totals[i] for i in idx]),
            unimodal_symdiff([diagrams[i] for i in idx]),
        )
        counts[key] = counts.get(key, 0) + 1
    return DistributionTable(s, n, d, counts, with_emc=True)


def pair_records(s: int, n: int):
    """Yield ``(a, b, D, EMC)`` for every ordered pair in ``C(s, n)^2``."""
    comps = list(enumerate_compositions(s, n))
    totals = [weighted_total(c) for c in comps]
    for i, a in enumerate(comps):
        for j, b in enumerate(comps):
            yield a, b, totals[i] - totals[j], emc((a, b))
