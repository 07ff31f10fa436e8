"""Keller-map predicates, formal inversion, and the cubic-linear form
F_i(X) = X_i + <a_i, X>^3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import fraction_matrix_inverse, poly_matrix_det
from .errors import SingularMatrixError
from .polyring import Polynomial, PolyMap, lex_key


def jacobian_matrix(F: PolyMap):
    """Rows of partial derivatives dF_i/dX_j."""
    if not F.is_square():
        raise ValueError("map must have as many components as variables")
    return [
        [c.partial_derivative(v) for v in F.variables] for c in F.components
    ]


def jacobian_det(F: PolyMap) -> Polynomial:
    """det DF, expanded exactly."""
    return poly_matrix_det(jacobian_matrix(F))


def is_keller(F: PolyMap) -> bool:
    """True iff det DF is the constant 1."""
    return jacobian_det(F) == Polynomial.one(F.variables)


@dataclass(frozen=True)
class FormalInverse:
    """Truncated inverse power series of a map fixing the origin.

    When `exact` is true the truncation, read as a polynomial map, satisfies
    F o G = identity exactly (not merely up to the cap).
    """

    map: PolyMap
    degree_bound: int
    exact: bool


def formal_inverse(F: PolyMap, degree_cap: int | None = None) -> FormalInverse:
    """Inverse series of F truncated at total degree `degree_cap`.

    Fixed-point iteration G <- L^-1(Y - H(G)) where F = L + H splits into
    linear and higher parts.  Requires F(0) = 0 and DF(0) invertible.  The
    default cap is d^(n-1) for d = deg F, the classical bound on the degree
    of a polynomial inverse; a non-exact result at the cap means "not
    invertible within bound", never "not invertible".
    """
    if not F.is_square():
        raise ValueError("map must have as many components as variables")
    if not F.fixes_origin():
        raise ValueError("map must fix the origin")
    variables = F.variables
    n = F.n
    if degree_cap is None:
        degree_cap = max(1, F.max_degree()) ** (n - 1)
    if degree_cap < 1:
        raise ValueError("degree cap must be at least 1")

    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    L = [[F.components[i].coefficient(unit[j]) for j in range(n)] for i in range(n)]
    try:
        Linv = fraction_matrix_inverse(L)
    except SingularMatrixError:
        raise SingularMatrixError("DF(0) is singular; no formal inverse") from None

    xs = [Polynomial.variable(variables, v) for v in variables]
    linear = [sum((L[i][j] * xs[j] for j in range(n)), Polynomial.zero(variables))
              for i in range(n)]
    higher = PolyMap([F.components[i] - linear[i] for i in range(n)])

    def apply_linv(vec):
        return [
            sum((Linv[i][j] * vec[j] for j in range(n)), Polynomial.zero(variables))
            for i in range(n)
        ]

    G = PolyMap(apply_linv(xs))
    for _ in range(degree_cap):
        HG = higher.compose_truncated(G, degree_cap)
        nxt = PolyMap(
            [p.truncated(degree_cap) for p in apply_linv(
                [xs[j] - HG.components[j] for j in range(n)]
            )]
        )
        if nxt == G:
            break
        G = nxt

    exact = F.compose(G) == PolyMap.identity(variables)
    return FormalInverse(map=G, degree_bound=degree_cap, exact=exact)


# ---- cubic-linear (Druzkowski) forms ----


@dataclass(frozen=True)
class CubicLinearForm:
    """Matrix A whose rows a_i realize F_i(X) = X_i + <a_i, X>^3."""

    matrix: tuple  # tuple of row tuples of Fractions

    def __post_init__(self):
        n = len(self.matrix)
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "matrix", rows)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.matrix for x in row)

    def to_map(self, variables=None) -> PolyMap:
        if variables is None:
            variables = tuple(f"x{i}" for i in range(1, self.n + 1))
        variables = tuple(variables)
        if len(variables) != self.n:
            raise ValueError("variable count does not match matrix size")
        xs = [Polynomial.variable(variables, v) for v in variables]
        comps = []
        for i, row in enumerate(self.matrix):
            form = sum((a * x for a, x in zip(row, xs)), Polynomial.zero(variables))
            comps.append(xs[i] + form**3)
        return PolyMap(comps)


@dataclass(frozen=True)
class CubicLinearRejection:
    """Why a map is not of cubic-linear shape; `component` is 1-based."""

    component: int
    reason: str


def _rational_cube_root(c: Fraction):
    num = _icbrt(c.numerator)
    den = _icbrt(c.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _icbrt(n: int):
    """Exact integer cube root, or None."""
    if n < 0:
        r = _icbrt(-n)
        return None if r is None else -r
    if n == 0:
        return 0
    r = round(n ** (1 / 3))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**3 == n:
            return cand
    return None


def as_cubic_linear(F: PolyMap):
    """Recognize F_i = X_i + <a_i, X>^3 and return the matrix A.

    Returns a CubicLinearForm, or a CubicLinearRejection naming the first
    offending component.  Works over Q; integrality of A is a separate
    query on the result.
    """
    if not F.is_square():
        return CubicLinearRejection(0, "map is not square")
    variables = F.variables
    n = F.n
    rows = []
    for i, comp in enumerate(F.components, start=1):
        rest = comp - Polynomial.variable(variables, variables[i - 1])
        if rest.is_zero():
            rows.append(tuple(Fraction(0) for _ in range(n)))
            continue
        parts = rest.homogeneous_components()
        if len(parts) != 1 or parts[0][0] != 3:
            return CubicLinearRejection(
                i, "component minus X_i is not homogeneous of degree 3"
            )
        lm, lc = rest.leading_term(key=lex_key)
        k = next((j for j, e in enumerate(lm) if e), None)
        if lm.count(0) != n - 1 or lm[k] != 3:
            return CubicLinearRejection(i, "leading term is not the cube of a variable")
        ck = _rational_cube_root(lc)
        if ck is None:
            return CubicLinearRejection(i, "leading coefficient is not a perfect cube")
        coeffs = [Fraction(0)] * n
        coeffs[k] = ck
        for j in range(n):
            if j == k:
                continue
            exps = tuple(2 if t == k else (1 if t == j else 0) for t in range(n))
            coeffs[j] = rest.coefficient(exps) / (3 * ck * ck)
        form = sum(
            (c * Polynomial.variable(variables, v) for c, v in zip(coeffs, variables)),
            Polynomial.zero(variables),
        )
        if form**3 != rest:
            return CubicLinearRejection(i, "remainder is not the cube of a linear form")
        rows.append(tuple(coeffs))
    return CubicLinearForm(tuple(rows))
