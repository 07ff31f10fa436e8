import random
from fractions import Fraction

import pytest

from kellerlab.errors import ParseError
from kellerlab.expr_io import (
    format_map_file,
    format_system_file,
    map_file_from_poly_map,
    parse_map_file,
    parse_polynomial,
    parse_system_file,
    print_polynomial,
)
from kellerlab.polyring import Polynomial, PolyMap

from _support import naive_mul, random_polynomial

V = ("x", "y")


def test_parse_simple():
    p = parse_polynomial("x + y^3", V)
    assert p == Polynomial.variable(V, "x") + Polynomial.variable(V, "y") ** 3


def test_parse_cube_expansion():
    # oracle: naive distribution of (x1 + 2 x2)^3
    lin = {(1, 0): 1, (0, 1): 2}
    expected = naive_mul(naive_mul(lin, lin), lin)
    p = parse_polynomial("(x1 + 2*x2)^3", ("x1", "x2"))
    assert p.terms == {m: Fraction(c) for m, c in expected.items()}


def test_parse_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable") as err:
        parse_polynomial("x + z", V)
    assert err.value.line == 1
    assert err.value.column == 5


def test_parse_rationals_and_unary_minus():
    p = parse_polynomial("-1/2*x + 3/4", V)
    assert p.coefficient((1, 0)) == Fraction(-1, 2)
    assert p.coefficient((0, 0)) == Fraction(3, 4)


def test_print_examples():
    x = Polynomial.variable(V, "x")
    y = Polynomial.variable(V, "y")
    assert print_polynomial(x + y**3) == "x + y^3"
    assert print_polynomial(Polynomial.zero(V)) == "0"
    assert print_polynomial(Fraction(-1, 2) * x) == "-1/2*x"
    assert print_polynomial(x**2 + x * y + y**2 + x) == "x + x^2 + x*y + y^2"


NEGATIVE_CORPUS = [
    "(x + y",
    "x + y)",
    "x ^ y",
    "x^-2",
    "x^(2)",
    "x^1/2",
    "2x",
    "x y",
    "x + * y",
    "x ? y",
    "1/0",
    "x +",
    "",
    "x + z",
    "x * * y",
    "3 / 4",
]


@pytest.mark.parametrize("bad", NEGATIVE_CORPUS)
def test_negative_corpus_has_positions(bad):
    with pytest.raises(ParseError) as err:
        parse_polynomial(bad, V)
    assert err.value.line >= 1
    assert err.value.column >= 1


def test_roundtrip_1000_random():
    rng = random.Random(606)
    for _ in range(1000):
        p = random_polynomial(rng, ("x1", "x2", "x3"), max_degree=5, max_terms=6)
        assert parse_polynomial(print_polynomial(p), ("x1", "x2", "x3")) == p


def test_rational_coefficients_roundtrip():
    rng = random.Random(707)
    for _ in range(200):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            m = (rng.randint(0, 3), rng.randint(0, 3))
            terms[m] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        p = Polynomial(V, terms)
        assert parse_polynomial(print_polynomial(p), V) == p


MAP_TEXT = """\
# a triangular example
name: tri
vars: x y
F1 = x + y^3   # trailing comment
F2 = y
"""


def test_parse_map_file():
    mf = parse_map_file(MAP_TEXT)
    assert mf.variables == ("x", "y")
    assert mf.metadata == {"name": "tri"}
    assert mf.n == 2
    F = mf.to_poly_map()
    assert F.components[0] == parse_polynomial("x + y^3", V)


def test_map_file_roundtrip():
    mf = parse_map_file(MAP_TEXT)
    again = parse_map_file(format_map_file(mf))
    assert again.variables == mf.variables
    assert again.components == mf.components
    assert again.metadata == mf.metadata


def test_map_file_from_poly_map_roundtrip():
    F = PolyMap(
        [parse_polynomial("x + y^3", V), parse_polynomial("y", V)]
    )
    mf = map_file_from_poly_map(F, {"name": "t"})
    assert parse_map_file(format_map_file(mf)).to_poly_map() == F


@pytest.mark.parametrize(
    "text",
    [
        "F1 = x\n",  # missing vars header
        "vars: x y\n",  # no components
        "vars: x x\nF1 = x\n",  # duplicate variable
        "vars: x y\nF2 = x\n",  # wrong label
        "vars: x y\nF1 = x +\n",  # bad expression
        "vars: x y\nF1 = z\n",  # unknown variable
        "vars: x y\nF1 : x\n",  # not an assignment
    ],
)
def test_map_file_errors(text):
    with pytest.raises(ParseError):
        parse_map_file(text)


def test_map_file_error_position_points_into_line():
    with pytest.raises(ParseError) as err:
        parse_map_file("vars: x y\nF1 = x + z\n")
    assert err.value.line == 2
    assert err.value.column >= 6


SYS_TEXT = """\
name: demo
vars: x y
x + y^3 - y
x - y
"""


def test_system_file_roundtrip():
    sf = parse_system_file(SYS_TEXT)
    assert sf.variables == ("x", "y")
    assert len(sf.equations) == 2
    polys = sf.to_polynomials()
    assert polys[0] == parse_polynomial("x + y^3 - y", V)
    again = parse_system_file(format_system_file(sf))
    assert again.equations == sf.equations


def test_system_file_requires_equations():
    with pytest.raises(ParseError):
        parse_system_file("vars: x y\n")
