"""Independent reference computations used only by the tests."""

from collections import Counter
from itertools import product

from hypothesis import strategies as st

from emc_young.compositions import Composition, enumerate_compositions
from emc_young.emc import emc_prefix_oracle
from emc_young.laurent import LaurentPolynomial
from emc_young.qseries import TruncatedSeries
from emc_young.statistics import weighted_total


def plane_partitions(x, y, z):
    """Brute-force count of x-by-y arrays over 0..z, weakly decreasing along rows and columns."""
    if x == 0 or y == 0:
        return 1
    count = 0
    for flat in product(range(z + 1), repeat=x * y):
        ok = True
        for i in range(x):
            for j in range(y):
                v = flat[i * y + j]
                if j + 1 < y and flat[i * y + j + 1] > v:
                    ok = False
                    break
                if i + 1 < x and flat[(i + 1) * y + j] > v:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def removable_cells(diagram):
    cells = diagram.cells()
    return sum(1 for (i, j) in cells if (i + 1, j) not in cells and (i, j + 1) not in cells)


# --- generating function references ----------------------------------------

Q, X, Yv = (LaurentPolynomial.variable(i, 3) for i in range(3))


def brute_genfun_coeff(n, m, s):
    width = max(n, m)
    acc = Counter()
    for a in enumerate_compositions(s, n):
        for b in enumerate_compositions(s, m):
            pa = Composition(a.entries + (0,) * (width - n))
            pb = Composition(b.entries + (0,) * (width - m))
            acc[(emc_prefix_oracle(pa, pb), weighted_total(a), weighted_total(b))] += 1
    return LaurentPolynomial(acc, 3)


def _geometric(mono, tmax):
    return TruncatedSeries(tuple(mono**k for k in range(tmax + 1)))


def h2_closed_form(tmax):
    one = LaurentPolynomial.constant(1, 3)
    zero = LaurentPolynomial({}, 3)
    numerator = TruncatedSeries(tuple(
        one if k == 0 else (-(Q * Q * X * Yv) if k == 2 else zero) for k in range(tmax + 1)
    ))
    out = numerator
    for mono in (one, X * Yv, Q * X, Q * Yv):
        out = out.mul(_geometric(mono, tmax))
    return out


# t^2 coefficient of H[3, 3], transcribed term by term
H3_T2 = {
    (0, 0, 0): 1, (0, 1, 1): 1, (0, 2, 2): 2, (0, 3, 3): 1, (0, 4, 4): 1,
    (1, 1, 0): 1, (1, 0, 1): 1, (1, 2, 1): 2, (1, 1, 2): 2, (1, 3, 2): 2,
    (1, 2, 3): 2, (1, 4, 3): 1, (1, 3, 4): 1,
    (2, 2, 0): 2, (2, 3, 1): 1, (2, 0, 2): 2, (2, 2, 2): 2, (2, 4, 2): 2,
    (2, 1, 3): 1, (2, 2, 4): 2,
    (3, 3, 0): 1, (3, 4, 1): 1, (3, 0, 3): 1, (3, 1, 4): 1,
    (4, 4, 0): 1, (4, 0, 4): 1,
}


# --- sl3 Weyl character formula, root coordinates ---------------------------

def _s1(w):
    return (w[1] - w[0], w[1])


def _s2(w):
    return (w[0], w[0] - w[1])


def weyl_group_sl3():
    """The six elements of W(A2) as (sign, function) pairs."""
    ident = lambda w: w
    elems = [(1, ident)]
    frontier = [(1, ident)]
    seen = {ident((3, 7))}
    while frontier:
        nxt = []
        for sign, f in frontier:
            for s in (_s1, _s2):
                g = (lambda f, s: lambda w: s(f(w)))(f, s)
                key = g((3, 7))
                if key not in seen:
                    seen.add(key)
                    elems.append((-sign, g))
                    nxt.append((-sign, g))
        frontier = nxt
    assert len(elems) == 6
    return elems


RHO = (1, 1)
POSITIVE_ROOTS = [(1, 0), (0, 1), (1, 1)]


def _divide_one_minus(f, v):
    """Exact ``f / (1 - e^v)``; ``g(w) = sum_k f(w - k v)`` over the finite support."""
    span = sum(hi - lo for lo, hi in (f.degree_range(0), f.degree_range(1))) + 2
    candidates = {
        tuple(u[i] + j * v[i] for i in range(2)) for u, _ in f.items() for j in range(span + 1)
    }
    g = {}
    for w in candidates:
        total = 0
        for k in range(2 * span + 1):
            total += f.coefficient(tuple(w[i] - k * v[i] for i in range(2)))
        if total:
            g[w] = total
    g = LaurentPolynomial(g, 2)
    assert g * (1 - LaurentPolynomial.monomial(v)) == f, "division not exact"
    return g


def weyl_character_sl3(highest):
    """Irreducible sl3 character with the given highest weight (root coordinates)."""
    lam_rho = (highest[0] + RHO[0], highest[1] + RHO[1])
    num = LaurentPolynomial(
        [(tuple(a - r for a, r in zip(f(lam_rho), RHO)), sign) for sign, f in weyl_group_sl3()], 2
    )
    # num = chi * prod(1 - e^{-alpha}); peel one factor at a time
    for alpha in POSITIVE_ROOTS:
        num = _divide_one_minus(num, (-alpha[0], -alpha[1]))
    return num


# --- hypothesis strategies ---------------------------------------------------

@st.composite
def compositions_of(draw, s, n):
    cuts = sorted(draw(st.lists(st.integers(0, s), min_size=n - 1, max_size=n - 1)))
    bounds = [0] + cuts + [s]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


@st.composite
def composition_tuples(draw, max_s=8, max_n=8, min_d=2, max_d=5):
    s = draw(st.integers(0, max_s))
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(min_d, max_d))
    return tuple(draw(compositions_of(s, n)) for _ in range(d))
