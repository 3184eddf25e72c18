"""Earth mover's coefficient of a tuple of histograms.

Four routes, all exact on integers:

* :func:`emc_rsk` sums the cost of each column of the word matrix;
* :func:`unimodal_symdiff` counts cells of the stacked Young diagrams;
* :func:`emc_transport_oracle` solves the transport problem by exhaustive search;
* :func:`emc_prefix_oracle` uses the cumulative-sum formula (two histograms only).

:func:`emc` is the production entry point and uses the diagram route.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .compositions import (
    Composition,
    CompositionError,
    YoungDiagram,
    check_common_shape,
    diagram_of,
    word_of,
)

# guard for the exhaustive transport search
TRANSPORT_MAX_CELLS = 64
TRANSPORT_MAX_S = 9


class InstanceTooLarge(RuntimeError):
    """The exhaustive transport oracle refuses instances outside its guard."""


def cost(x: Sequence[int]) -> int:
    """Taxicab distance from ``x`` to the main diagonal.

    Sort ``x`` and pair coordinates outside-in:
    ``sum(x[d-1-i] - x[i] for i < d // 2)``.
    """
    xs = sorted(x)
    d = len(xs)
    return sum(xs[d - 1 - i] - xs[i] for i in range(d // 2))


def cost_median_oracle(x: Sequence[int]) -> int:
    """``min_t sum |x_i - t|`` over integer ``t``, by scanning every candidate."""
    if not x:
        return 0
    return min(sum(abs(xi - t) for xi in x) for t in range(min(x), max(x) + 1))


def word_matrix(tuple_: Sequence[Composition]) -> list[tuple[int, ...]]:
    """Rows are the words of the compositions; columns are support points of the optimal plan."""
    check_common_shape(tuple_)
    return [word_of(c) for c in tuple_]


def column_costs(tuple_: Sequence[Composition]) -> list[tuple[tuple[int, ...], int]]:
    """``(column, cost)`` for each of the ``s`` columns of the word matrix."""
    rows = word_matrix(tuple_)
    return [(col, cost(col)) for col in zip(*rows)]


def emc_rsk(tuple_: Sequence[Composition]) -> int:
    if len(tuple_) < 2:
        raise CompositionError("need at least two compositions")
    return sum(c for _, c in column_costs(tuple_))


def containment_grid(diagrams: Sequence[YoungDiagram]) -> list[list[int]]:
    """For each cell of the bounding box, how many diagrams contain it."""
    boxes = {d.box for d in diagrams}
    if len(boxes) != 1:
        raise CompositionError(f"diagrams have different bounding boxes: {sorted(boxes)}")
    max_rows, max_cols = boxes.pop()
    padded = [d.padded_rows() for d in diagrams]
    grid = []
    for i in range(max_rows):
        lengths = [rows[i] for rows in padded]
        grid.append([sum(1 for r in lengths if r > j) for j in range(max_cols)])
    return grid


def weight_grid(diagrams: Sequence[YoungDiagram]) -> list[list[int]]:
    d = len(diagrams)
    return [[min(k, d - k) for k in row] for row in containment_grid(diagrams)]


def unimodal_symdiff(diagrams: Sequence[YoungDiagram]) -> int:
    """Sum over cells of ``min(k, d-k)``, ``k`` = number of diagrams holding the cell."""
    return sum(map(sum, weight_grid(diagrams)))


def emc(tuple_: Sequence[Composition]) -> int:
    """Earth mover's coefficient of two or more compositions in a common ``C(s, n)``."""
    if len(tuple_) < 2:
        raise CompositionError("need at least two compositions")
    check_common_shape(tuple_)
    return unimodal_symdiff([diagram_of(c) for c in tuple_])


def emc_prefix_oracle(a: Composition, b: Composition) -> int:
    """``sum_j |sum_{i<=j} (a_i - b_i)|`` for a pair of histograms."""
    check_common_shape((a, b))
    total = 0
    running = 0
    for x, y in zip(a, b):
        running += x - y
        total += abs(running)
    return total


def emc_transport_oracle(tuple_: Sequence[Composition]) -> int:
    """Exact optimum of the integer transport problem by exhaustive search.

    Every position ``x`` whose coordinates all land in nonempty bins gets a
    mass ``J(x)``; masses are assigned cell by cell with the remaining
    marginals as state, and the minimum over all completions that exhaust
    every marginal is returned.  Memoising on the state makes this a dynamic
    program over all feasible plans rather than an enumeration of each one.

    Raises :class:`InstanceTooLarge` unless ``n**d <= 64`` and ``s <= 9``.
    """
    if len(tuple_) < 2:
        raise CompositionError("need at least two compositions")
    s, n = check_common_shape(tuple_)
    d = len(tuple_)
    if n**d > TRANSPORT_MAX_CELLS or s > TRANSPORT_MAX_S:
        raise InstanceTooLarge(
            f"transport oracle limited to n^d <= {TRANSPORT_MAX_CELLS} and "
            f"s <= {TRANSPORT_MAX_S}; got n^d = {n**d}, s = {s}"
        )
    supports = [[j for j, a in enumerate(c) if a > 0] for c in tuple_]
    cells = list(product(*supports))
    cell_costs = [cost(x) for x in cells]
    start = tuple(tuple(c.entries) for c in tuple_)

    @lru_cache(maxsize=None)
    def best(k, remaining):
        if all(a == 0 for row in remaining for a in row):
            return 0
        if k == len(cells):
            return None
        x = cells[k]
        cap = min(remaining[i][x[i]] for i in range(d))
        result = None
        for mass in range(cap, -1, -1):
            if mass:
                rem = [list(row) for row in remaining]
                for i in range(d):
                    rem[i][x[i]] -= mass
                rem = tuple(tuple(row) for row in rem)
            else:
                rem = remaining
            sub = best(k + 1, rem)
            if sub is not None:
                value = sub + mass * cell_costs[k]
                if result is None or value < result:
                    result = value
        return result

    value = best(0, start)
    best.cache_clear()
    assert value is not None, "no feasible plan; marginals should always admit one"
    return value


METHODS = {
    "symdiff": emc,
    "rsk": emc_rsk,
    "transport": emc_transport_oracle,
    "prefix": lambda t: _prefix_pair(t),
}


def _prefix_pair(tuple_):
    if len(tuple_) != 2:
        raise CompositionError("prefix oracle only handles two compositions")
    return emc_prefix_oracle(*tuple_)


def emc_by(tuple_: Sequence[Composition], method: str = "symdiff") -> int:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(tuple_)
