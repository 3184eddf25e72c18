"""Weighted-difference distributions as sl_d weight diagrams.

The number of d-tuples in ``C(s, n)^d`` with weighted-difference value
``[w_1, ..., w_{d-1}, 0]`` is the coefficient of ``x_1^w_1 ... x_{d-1}^w_{d-1}``
in the product of ``d`` Gaussian binomials ``[s+n-1 choose s]``, the i-th in
``x_i`` and the last in ``(x_1 ... x_{d-1})^-1``.  Exponent vectors are
coordinates in the simple-root basis of the sl_d root lattice.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import product
from typing import Union

from .compositions import count_compositions, enumerate_compositions
from .laurent import LaurentPolynomial
from .qseries import qbin_bracket
from .statistics import DEFAULT_BUDGET, BudgetExceeded, weighted_total
from .tables import DistributionTable


def char_V(s: int, n: int, d: int) -> LaurentPolynomial:
    """Character of the d-fold tensor power of ``Sym^s(C^n)`` in ``d-1`` variables."""
    if s < 0 or n < 1 or d < 2:
        raise ValueError(f"need s >= 0, n >= 1, d >= 2; got s={s}, n={n}, d={d}")
    qb = qbin_bracket(s + n - 1, s)
    arity = d - 1
    result = LaurentPolynomial.constant(1, arity)
    for i in range(arity):
        factor = qb.map_exponents(
            lambda e, i=i: tuple(e[0] if k == i else 0 for k in range(arity)), arity
        )
        result = result * factor
    # x_d = (x_1 ... x_{d-1})^-1: its exponent is subtracted from every coordinate
    last = qb.map_exponents(lambda e: (-e[0],) * arity, arity)
    return result * last


def character_table(ch: LaurentPolynomial, s: int, n: int) -> DistributionTable:
    return DistributionTable(s, n, ch.arity + 1, dict(ch.items()), with_emc=False)


def d_distribution_bruteforce(s: int, n: int, d: int, budget: int = DEFAULT_BUDGET) -> DistributionTable:
    """Count D-values over every d-tuple of ``C(s, n)^d``."""
    size = count_compositions(s, n) ** d
    if size > budget:
        raise BudgetExceeded(f"C({s},{n})^{d} has {size} tuples, over the budget of {budget}")
    totals = [weighted_total(c) for c in enumerate_compositions(s, n)]
    counts = Counter(
        tuple(t - tup[-1] for t in tup[:-1]) for tup in product(totals, repeat=d)
    )
    return DistributionTable(s, n, d, dict(counts), with_emc=False)


def is_dominant_sl3(w: tuple[int, int]) -> bool:
    """``w1 s1 + w2 s2`` is dominant iff ``2 w1 - w2 >= 0`` and ``2 w2 - w1 >= 0``."""
    w1, w2 = w
    return 2 * w1 - w2 >= 0 and 2 * w2 - w1 >= 0


WEYL_DENOMINATOR_SL3 = (
    (LaurentPolynomial.constant(1, 2) - LaurentPolynomial.monomial((-1, 0)))
    * (LaurentPolynomial.constant(1, 2) - LaurentPolynomial.monomial((0, -1)))
    * (LaurentPolynomial.constant(1, 2) - LaurentPolynomial.monomial((-1, -1)))
)


def decompose_sl3(ch: LaurentPolynomial) -> dict[tuple[int, int], int]:
    """Signed multiplicities of irreducibles, keyed by highest weight in root coordinates.

    Multiplying a character by the Weyl denominator leaves, at each dominant
    weight, exactly the multiplicity of the irreducible with that highest weight.
    """
    if ch.arity != 2:
        raise ValueError(f"sl3 decomposition needs a 2-variable character, got arity {ch.arity}")
    product_ = ch * WEYL_DENOMINATOR_SL3
    return {w: c for w, c in sorted(product_.items()) if is_dominant_sl3(w)}


def root_embedding(d: int) -> list[tuple[float, ...]]:
    """Cartesian images of the simple roots, unit length, via Gram-Schmidt.

    For ``d = 3`` the first root points east and the second at 120 degrees.
    """
    roots = []
    for i in range(d - 1):
        v = [0.0] * d
        v[i], v[i + 1] = 1 / math.sqrt(2), -1 / math.sqrt(2)
        roots.append(v)
    basis: list[list[float]] = []
    for v in roots:
        u = list(v)
        for b in basis:
            dot = sum(x * y for x, y in zip(v, b))
            u = [x - dot * y for x, y in zip(u, b)]
        norm = math.sqrt(sum(x * x for x in u))
        basis.append([x / norm for x in u])
    return [
        tuple(sum(x * y for x, y in zip(r, b)) for b in basis) for r in roots
    ]


def weight_diagram_export(source: Union[LaurentPolynomial, DistributionTable], cartesian: bool = True) -> list[dict]:
    """Rows ``{"w": weight, "count": c}`` with ``"xy"`` plot coordinates when ``d <= 4``."""
    if isinstance(source, DistributionTable):
        table = source.marginal()
        items = table.counts.items()
        d = table.d
    else:
        items = source.items()
        d = source.arity + 1
    embed = root_embedding(d) if cartesian and 2 <= d <= 4 else None
    rows = []
    for w, c in sorted(items):
        row = {"w": tuple(w), "count": c}
        if embed is not None:
            row["xy"] = tuple(
                round(sum(wi * r[k] for wi, r in zip(w, embed)), 12) + 0.0
                for k in range(d - 1)
            )
        rows.append(row)
    return rows
