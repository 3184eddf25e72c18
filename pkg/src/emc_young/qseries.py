"""q-binomial coefficients and the two-histogram generating function.

``H[n, m]`` is the series in ``t`` whose ``t^s`` coefficient is the
polynomial ``sum q^EMC(a, b) x^T(a) y^T(b)`` over ``C(s, n) x C(s, m)``
(shorter compositions padded with zeros).  It satisfies

    H[n, m] = (H[n-1, m] + H[n, m-1] - H[n-1, m-1]) / (1 - q^|n-m| x^(n-1) y^(m-1) t)

with ``H[1, 1] = 1/(1 - t)`` and ``H[0, m] = H[n, 0] = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPolynomial
from .tables import DistributionTable

GENFUN_VARS = ("q", "x", "y")


def _q(power: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial((power,))


def _check_range(a: int, b: int):
    if a < 0 or not 0 <= b <= a:
        raise ValueError(f"q-binomial needs 0 <= b <= a, got a={a}, b={b}")


@lru_cache(maxsize=None)
def qbin_bracket(a: int, b: int) -> LaurentPolynomial:
    """Gaussian binomial ``[a choose b]_q`` as a polynomial in one variable.

    Built from ``[a, b] = [a-1, b-1] + q^b [a-1, b]``.  The coefficient of
    ``q^w`` counts Young diagrams of size ``w`` inside a ``b x (a-b)`` box.
    """
    _check_range(a, b)
    if b == 0 or b == a:
        return LaurentPolynomial.constant(1, 1)
    return qbin_bracket(a - 1, b - 1) + _q(b) * qbin_bracket(a - 1, b)


def _divide_exact(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Exact univariate division; raises if ``den`` does not divide ``num``."""
    lo_d, hi_d = den.degree_range(0)
    lead = den.coefficient((hi_d,))
    rem = num
    quotient = LaurentPolynomial({}, 1)
    while rem:
        lo_r, hi_r = rem.degree_range(0)
        if hi_r - hi_d < lo_r - lo_d:
            raise ArithmeticError("division is not exact")
        c, r = divmod(rem.coefficient((hi_r,)), lead)
        if r:
            raise ArithmeticError("division is not exact over the integers")
        step = LaurentPolynomial.monomial((hi_r - hi_d,), c)
        quotient = quotient + step
        rem = rem - step * den
    return quotient


def q_number_centered(a: int) -> LaurentPolynomial:
    """``(a)_q = q^-(a-1) + q^-(a-3) + ... + q^(a-1)``, the sl2 character of C^a."""
    return LaurentPolynomial({(k,): 1 for k in range(-(a - 1), a, 2)}, 1)


def _centered_factorial(a: int) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(1, 1)
    for k in range(1, a + 1):
        out = out * q_number_centered(k)
    return out


@lru_cache(maxsize=None)
def qbin_paren(a: int, b: int) -> LaurentPolynomial:
    """Centered q-binomial ``(a)_q! / ((b)_q! (a-b)_q!)``, symmetric under q -> 1/q."""
    _check_range(a, b)
    den = _centered_factorial(b) * _centered_factorial(a - b)
    return _divide_exact(_centered_factorial(a), den)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in ``t`` kept through ``t^tmax``; coefficients are polynomials in (q, x, y)."""

    coeffs: tuple[LaurentPolynomial, ...]

    @property
    def tmax(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, tmax: int, arity: int = 3) -> "TruncatedSeries":
        return cls(tuple(LaurentPolynomial({}, arity) for _ in range(tmax + 1)))

    def __add__(self, other):
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __getitem__(self, k: int) -> LaurentPolynomial:
        return self.coeffs[k]

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = []
        for k in range(self.tmax + 1):
            acc = LaurentPolynomial({}, 3)
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(tuple(out))

    def divide_one_minus(self, mono: LaurentPolynomial) -> "TruncatedSeries":
        """Divide by ``1 - mono * t`` via the truncated geometric series."""
        out = []
        prev = None
        for k, c in enumerate(self.coeffs):
            cur = c if prev is None else c + mono * prev
            out.append(cur)
            prev = cur
        return TruncatedSeries(tuple(out))


def genfun_H(n: int, m: int, tmax: int) -> TruncatedSeries:
    """Truncated generating function ``H[n, m]`` in variables ``(q, x, y)``."""
    if n < 0 or m < 0 or tmax < 0:
        raise ValueError("n, m, tmax must be nonnegative")
    memo: dict[tuple[int, int], TruncatedSeries] = {}
    one = LaurentPolynomial.constant(1, 3)

    def H(i, j):
        if (i, j) in memo:
            return memo[(i, j)]
        if i == 0 or j == 0:
            val = TruncatedSeries.zero(tmax)
        elif i == 1 and j == 1:
            val = TruncatedSeries(tuple(one for _ in range(tmax + 1)))
        else:
            num = H(i - 1, j) + H(i, j - 1) - H(i - 1, j - 1)
            mono = LaurentPolynomial.monomial((abs(i - j), i - 1, j - 1))
            val = num.divide_one_minus(mono)
        memo[(i, j)] = val
        return val

    return H(n, m)


def distribution_from_genfun(s: int, n: int) -> DistributionTable:
    """(D, EMC) counts over ``C(s, n)^2`` read off the ``t^s`` coefficient of ``H[n, n]``."""
    if s < 0 or n < 1:
        raise ValueError(f"need s >= 0 and n >= 1, got s={s}, n={n}")
    poly = genfun_H(n, n, s)[s]
    counts: dict = {}
    for (e, a, b), c in poly.items():
        key = ((a - b,), e)
        counts[key] = counts.get(key, 0) + c
    return DistributionTable(s, n, 2, counts, with_emc=True)
