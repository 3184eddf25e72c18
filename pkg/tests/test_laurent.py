import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from emc_young.laurent import LaurentPolynomial

exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
polys = st.dictionaries(exps, st.integers(-50, 50), max_size=6).map(lambda d: LaurentPolynomial(d, 2))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPolynomial({}, 2)
    assert a * 1 == a


@given(polys)
def test_no_zero_coefficients_stored(a):
    assert all(c != 0 for _, c in a.items())
    assert all(c != 0 for _, c in (a - a + a).items())


@given(polys)
def test_reflect_is_involution(a):
    assert a.reflect().reflect() == a


def test_pow_and_inverse():
    x = LaurentPolynomial.variable(0, 2)
    y = LaurentPolynomial.variable(1, 2)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert x ** -2 == LaurentPolynomial.monomial((-2, 0))
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_text_form_is_sorted():
    p = LaurentPolynomial({(1, 0): 2, (0, 0): 1, (0, 2): -3, (-1, 0): 1}, 2)
    assert p.to_text(["x", "y"]) == "x^-1 + 1 + 2*x - 3*y^2"
    assert LaurentPolynomial({}, 2).to_text(["x", "y"]) == "0"


def test_json_round_trip():
    p = LaurentPolynomial({(1, 2, 3): 10**30, (0, 0, 0): -1}, 3)
    blob = json.loads(json.dumps(p.to_json(["q", "x", "y"])))
    assert blob["vars"] == ["q", "x", "y"]
    assert all(isinstance(t["coef"], str) for t in blob["terms"])
    assert LaurentPolynomial.from_json(blob) == p


def test_arity_mismatch():
    with pytest.raises(ValueError):
        LaurentPolynomial.variable(0, 2) + LaurentPolynomial.variable(0, 3)
    with pytest.raises(ValueError):
        LaurentPolynomial({(1,): 1, (1, 2): 1})
