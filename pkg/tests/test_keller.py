import random
from fractions import Fraction

import pytest

from kellerlab.errors import SingularMatrixError
from kellerlab.expr_io import parse_polynomial as P
from kellerlab.keller import (
    CubicLinearForm,
    CubicLinearRejection,
    as_cubic_linear,
    formal_inverse,
    is_keller,
    jacobian_det,
)
from kellerlab.polyring import Polynomial, PolyMap

from _support import random_poly_map, random_triangular_form

V = ("x", "y")


def test_jacobian_examples():
    assert jacobian_det(PolyMap([P("x + y^3", V), P("y", V)])) == Polynomial.one(V)
    assert jacobian_det(PolyMap([P("x^2", V), P("y", V)])) == P("2*x", V)
    assert jacobian_det(PolyMap([P("x + y^3", V), P("y + x^3", V)])) == P(
        "1 - 9*x^2*y^2", V
    )


def test_jacobian_requires_square():
    with pytest.raises(ValueError):
        jacobian_det(PolyMap([P("x + y", V)]))


def test_is_keller_examples():
    assert is_keller(PolyMap([P("x + y^3", V), P("y", V)]))
    assert not is_keller(PolyMap([P("x^2", V), P("y", V)]))
    # strictly lower-triangular integer cubic-linear form, n = 3
    form = CubicLinearForm(((0, 0, 0), (2, 0, 0), (1, -1, 0)))
    assert is_keller(form.to_map())


def test_formal_inverse_triangular():
    F = PolyMap([P("x + y^3", V), P("y", V)])
    inv = formal_inverse(F, 3)
    assert inv.exact
    assert inv.map == PolyMap([P("x - y^3", V), P("y", V)])


def test_formal_inverse_non_keller_not_exact():
    F = PolyMap([P("x + y^3", V), P("y + x^3", V)])
    inv = formal_inverse(F, 8)
    assert not inv.exact
    # and the truncation genuinely fails to invert: F o G != identity
    assert F.compose(inv.map) != PolyMap.identity(V)


def test_formal_inverse_identity():
    inv = formal_inverse(PolyMap.identity(V), 1)
    assert inv.exact and inv.map == PolyMap.identity(V)


def test_formal_inverse_preconditions():
    with pytest.raises(ValueError, match="origin"):
        formal_inverse(PolyMap([P("x + 1", V), P("y", V)]), 2)
    with pytest.raises(SingularMatrixError):
        formal_inverse(PolyMap([P("x", V), P("x*y", V)]), 2)


def test_inverse_roundtrip_when_exact():
    rng = random.Random(313)
    for n in (2, 3):
        variables = tuple(f"x{i}" for i in range(1, n + 1))
        for _ in range(5):
            F = random_triangular_form(rng, n).to_map(variables)
            inv = formal_inverse(F, 3 ** (n - 1))
            assert inv.exact
            ident = PolyMap.identity(variables)
            assert F.compose(inv.map) == ident
            assert inv.map.compose(F) == ident
            assert inv.map.max_degree() <= 3 ** (n - 1)


def test_permutation_triangular_is_keller_and_invertible():
    # strictly triangular only after reordering the variables (x2, x3, x1)
    form = CubicLinearForm(((0, 0, 1), (0, 0, 0), (0, 2, 0)))
    F = form.to_map()
    assert is_keller(F)
    inv = formal_inverse(F)  # default cap 3^(n-1) = 9
    assert inv.exact
    assert inv.map.max_degree() <= 9


def test_chain_rule():
    rng = random.Random(414)
    for _ in range(12):
        F = random_poly_map(rng, V, max_degree=3, max_terms=2)
        G = random_poly_map(rng, V, max_degree=3, max_terms=2)
        JGF = jacobian_det(G.compose(F))
        JG_at_F = jacobian_det(G).substitute(dict(zip(V, F.components)), V)
        assert JGF == JG_at_F * jacobian_det(F)


def test_keller_closure_under_composition():
    F = CubicLinearForm(((0, 0), (1, 0))).to_map(V)
    G = PolyMap([P("x + y^3", V), P("y", V)])
    assert is_keller(F) and is_keller(G)
    assert is_keller(F.compose(G))
    assert is_keller(G.compose(F))


def test_as_cubic_linear_examples():
    got = as_cubic_linear(PolyMap([P("x + (x + 2*y)^3", V), P("y", V)]))
    assert isinstance(got, CubicLinearForm)
    assert got.matrix == ((Fraction(1), Fraction(2)), (Fraction(0), Fraction(0)))

    ident = as_cubic_linear(PolyMap.identity(V))
    assert isinstance(ident, CubicLinearForm)
    assert all(x == 0 for row in ident.matrix for x in row)

    rej = as_cubic_linear(PolyMap([P("x + y^2", V), P("y", V)]))
    assert isinstance(rej, CubicLinearRejection)
    assert rej.component == 1


def test_as_cubic_linear_rational_and_integrality():
    form = as_cubic_linear(PolyMap([P("x + 1/8*y^3", V), P("y", V)]))
    assert isinstance(form, CubicLinearForm)
    assert form.matrix[0] == (Fraction(0), Fraction(1, 2))
    assert not form.is_integral()
    assert CubicLinearForm(((0, 1), (0, 0))).is_integral()


def test_cubic_linear_roundtrip_random_matrices():
    rng = random.Random(515)
    for n in (2, 3, 4):
        variables = tuple(f"x{i}" for i in range(1, n + 1))
        for _ in range(8):
            rows = tuple(
                tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n)
            )
            form = CubicLinearForm(rows)
            got = as_cubic_linear(form.to_map(variables))
            assert isinstance(got, CubicLinearForm)
            assert got.matrix == form.matrix
