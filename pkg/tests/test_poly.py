import random

import pytest

from wittlab.errors import NotDivisible, ParameterMismatch
from wittlab.poly import MultiPoly, poly_exact_div
from wittlab.rings import ZZ, Zmod

rng = random.Random(271828)

VARS = ("x", "y")


def rand_poly(nterms=4, deg=3, coeff=9):
    terms = {}
    for _ in range(nterms):
        expo = tuple(rng.randint(0, deg) for _ in VARS)
        terms[expo] = rng.randint(-coeff, coeff)
    return MultiPoly(VARS, terms)


def test_ring_axioms_random():
    for trial in range(80):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.zero(VARS)
        assert a * MultiPoly.const(1, VARS) == a


def test_int_coercion_and_pow():
    x, y = MultiPoly.gens(VARS)
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert x ** 0 == MultiPoly.const(1, VARS)
    with pytest.raises(ValueError):
        x ** -1


def test_text_format():
    x, y = MultiPoly.gens(VARS)
    assert (x ** 2 * y - 2 * y + 1).text() == "1 - 2*y + x^2*y"
    assert MultiPoly.zero(VARS).text() == "0"
    assert (-x).text() == "-x"
    assert MultiPoly.const(-7, VARS).text() == "-7"
    # graded order: low total degree first, earlier variables dominate ties
    assert (x + y ** 3).text() == "x + y^3"
    assert (x * y + y ** 2).text() == "x*y + y^2"


def test_evaluate():
    x, y = MultiPoly.gens(VARS)
    f = x ** 2 + 3 * y
    assert f.evaluate(ZZ, {"x": 2, "y": -1}) == 1
    r = Zmod(5)
    assert f.evaluate(r, {"x": 3, "y": 4}) == (9 + 12) % 5
    with pytest.raises(KeyError):
        f.evaluate(ZZ, {"x": 1})


def test_map_variables():
    x, y = MultiPoly.gens(VARS)
    f = x ** 2 * y
    g = f.map_variables({"x": "a", "y": "b"}, ("a", "b"))
    assert g.text() == "a^2*b"


def test_variable_mismatch():
    x, _ = MultiPoly.gens(VARS)
    z = MultiPoly.var("z", ("z",))
    with pytest.raises(ParameterMismatch):
        x + z


def test_exact_division():
    x, y = MultiPoly.gens(VARS)
    f = 6 * x ** 2 + 4 * x * y
    assert poly_exact_div(f, 2) == 3 * x ** 2 + 2 * x * y
    with pytest.raises(NotDivisible):
        poly_exact_div(f, 4)
    assert poly_exact_div(MultiPoly.zero(VARS), 17).is_zero()


def test_degree_and_terms():
    x, y = MultiPoly.gens(VARS)
    f = x * y ** 2 + x
    assert f.total_degree() == 3
    assert MultiPoly.zero(VARS).total_degree() == 0
    assert [mono for mono, _ in f.sorted_terms()] == [(1, 0), (1, 2)]
