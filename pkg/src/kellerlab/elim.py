"""Groebner bases over Q: elimination ideals, minimal polynomials of map
coordinates, fiber counting, and formal-degree resultants/discriminants.

Buchberger with the normal selection strategy and both classical criteria;
a hard budget (basis size, total degree) turns runaway computations into
clean BudgetExceededError instead of hangs.  Desk scale only: elimination
tasks with roughly n <= 4 variables and total degree <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import poly_matrix_det
from .errors import (
    BudgetExceededError,
    InternalCheckError,
    NotDominantError,
    NotZeroDimensionalError,
    VariableMismatchError,
)
from .polyring import (
    Polynomial,
    PolyMap,
    coefficients_in,
    exact_div,
    make_primitive,
    rename_variables,
    squarefree_part,
    with_variables,
)

# ---- term orders ----


@dataclass(frozen=True)
class TermOrder:
    """Monomial order given by a kind and a variable priority permutation.

    kind 'lex' or 'grlex' uses the priority list directly; kind 'block'
    compares the first `split` priority variables grlex, then the rest
    grlex (an elimination order for the first block).
    """

    kind: str
    priority: tuple
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block" and not (0 <= self.split <= len(self.priority)):
            raise ValueError("block split index out of range")

    @classmethod
    def lex(cls, variables):
        return cls("lex", tuple(variables))

    @classmethod
    def grlex(cls, variables):
        return cls("grlex", tuple(variables))

    @classmethod
    def block(cls, eliminate, keep):
        eliminate, keep = tuple(eliminate), tuple(keep)
        return cls("block", eliminate + keep, len(eliminate))

    def key_function(self, variables):
        """Map exponent tuples over `variables` to sortable keys."""
        variables = tuple(variables)
        if set(self.priority) != set(variables) or len(self.priority) != len(variables):
            raise VariableMismatchError(
                "order priority is not a permutation of the ring variables"
            )
        idx = tuple(variables.index(name) for name in self.priority)
        if self.kind == "lex":
            return lambda e: tuple(e[i] for i in idx)
        if self.kind == "grlex":
            return lambda e: (sum(e), tuple(e[i] for i in idx))
        head, tail = idx[: self.split], idx[self.split :]

        def block_key(e):
            h = tuple(e[i] for i in head)
            t = tuple(e[i] for i in tail)
            return (sum(h), h, sum(t), t)

        return block_key


@dataclass(frozen=True)
class Ideal:
    """Generator list over one shared variable list.

    The zero ideal is represented by a single zero generator.
    """

    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("ideal needs at least one generator")
        vars0 = self.generators[0].variables
        for g in self.generators[1:]:
            if g.variables != vars0:
                raise VariableMismatchError("generators over different variables")

    @property
    def variables(self):
        return self.generators[0].variables

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)


@dataclass(frozen=True)
class GroebnerBudget:
    max_basis: int = 300
    max_degree: int = 80


DEFAULT_BUDGET = GroebnerBudget()


# ---- reduction and Buchberger ----


def _monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def reduce_poly(p: Polynomial, basis, key) -> Polynomial:
    """Full normal form of p modulo a list of nonzero polynomials."""
    variables = p.variables
    lead = [(max(g.terms, key=key), g) for g in basis]
    work = dict(p.terms)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, g in lead:
            if _monomial_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                factor = c / g.terms[lm]
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(shift, gm))
                    if t == m:
                        continue
                    s = work.get(t, Fraction(0)) - factor * gc
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
    return Polynomial._raw(variables, remainder)


def _spoly(f, g, key):
    lf = max(f.terms, key=key)
    lg = max(g.terms, key=key)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = tuple(a - b for a, b in zip(lcm, lf))
    mg = tuple(a - b for a, b in zip(lcm, lg))
    sf = Polynomial._raw(f.variables, {mf: Fraction(1) / f.terms[lf]}) * f
    sg = Polynomial._raw(g.variables, {mg: Fraction(1) / g.terms[lg]}) * g
    return sf - sg


def _monic(p, key):
    lm = max(p.terms, key=key)
    lc = p.terms[lm]
    if lc == 1:
        return p
    return p.map_coefficients(lambda c: c / lc)


def groebner(I: Ideal, order: TermOrder, budget: GroebnerBudget = DEFAULT_BUDGET) -> Ideal:
    """Reduced Groebner basis of I with respect to `order`."""
    variables = I.variables
    key = order.key_function(variables)
    basis = []
    for g in sorted(
        (g for g in I.generators if not g.is_zero()),
        key=lambda g: sorted(g.terms, key=key, reverse=True),
    ):
        g = _monic(g, key)
        if g not in basis:
            basis.append(g)
    if not basis:
        return Ideal((Polynomial.zero(variables),))

    lms = [max(g.terms, key=key) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(lms[i], lms[j]))

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        lcm = lcm_of(i, j)
        # product criterion: coprime leading monomials
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _monomial_divides(lms[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pairs and pjk not in pairs:
                skip = True
                break
        if skip:
            continue
        r = reduce_poly(_spoly(basis[i], basis[j], key), basis, key)
        if r.is_zero():
            continue
        if r.total_degree() > budget.max_degree:
            raise BudgetExceededError(
                f"basis element degree {r.total_degree()} exceeds budget "
                f"{budget.max_degree}; input beyond desk scale"
            )
        r = _monic(r, key)
        basis.append(r)
        lms.append(max(r.terms, key=key))
        if len(basis) > budget.max_basis:
            raise BudgetExceededError(
                f"basis size exceeds budget {budget.max_basis}; input beyond desk scale"
            )
        t = len(basis) - 1
        pairs.update((s, t) for s in range(t))

    # minimalize (drop generators whose lead is divisible by another lead),
    # then autoreduce every survivor against the others
    minimal = []
    for g in sorted(basis, key=lambda g: key(max(g.terms, key=key))):
        lm = max(g.terms, key=key)
        if any(_monomial_divides(max(h.terms, key=key), lm) for h in minimal):
            continue
        minimal.append(g)
    for idx in range(len(minimal)):
        others = minimal[:idx] + minimal[idx + 1 :]
        if others:
            minimal[idx] = _monic(reduce_poly(minimal[idx], others, key), key)
    minimal.sort(key=lambda g: key(max(g.terms, key=key)))
    return Ideal(tuple(minimal))


def eliminate(I: Ideal, keep, budget: GroebnerBudget = DEFAULT_BUDGET) -> Ideal:
    """Generators of I intersected with Q[keep], via a block order."""
    keep = list(keep)
    variables = I.variables
    unknown = [v for v in keep if v not in variables]
    if unknown:
        raise VariableMismatchError(f"unknown variable(s) {unknown}")
    gone = [v for v in variables if v not in keep]
    kept = tuple(v for v in variables if v in keep)
    order = TermOrder.block(gone, kept)
    G = groebner(I, order, budget)
    if G.is_zero():
        return Ideal((Polynomial.zero(kept),))
    gens = [
        with_variables(g, kept)
        for g in G.generators
        if not (g.support_variables() & set(gone))
    ]
    if not gens:
        return Ideal((Polynomial.zero(kept),))
    return Ideal(tuple(gens))


# ---- minimal polynomials and fiber degree ----


def _fresh_names(base, count, taken):
    prefix = base
    while any(f"{prefix}{k}" in taken for k in range(1, count + 1)):
        prefix += base
    return [f"{prefix}{k}" for k in range(1, count + 1)]


def graph_ideal(F: PolyMap):
    """<F_1(X) - Y_1, ..., F_n(X) - Y_n> over Q[X, Y], with the Y names used."""
    xs = F.variables
    ys = _fresh_names("Y", F.n, set(xs))
    ring = tuple(xs) + tuple(ys)
    gens = []
    for f, y in zip(F.components, ys):
        gens.append(with_variables(f, ring) - Polynomial.variable(ring, y))
    return Ideal(tuple(gens)), ys


def minimal_poly_of_coordinate(
    F: PolyMap, i: int, budget: GroebnerBudget = DEFAULT_BUDGET
) -> Polynomial:
    """h_i(Y, T): the algebraic relation satisfied by the i-th coordinate.

    `i` is 1-based, matching the h_i notation.  Returns the squarefree
    integer-primitive generator of the elimination ideal
    <F_1(X)-Y_1, ..., F_n(X)-Y_n> cap Q[Y, X_i], with X_i renamed to T, over
    the ring (Y1, ..., Yn, T).  It satisfies h_i(F(X), X_i) = 0 exactly.
    """
    if not 1 <= i <= F.n:
        raise ValueError(f"coordinate index {i} out of range 1..{F.n}")
    if not F.is_square():
        raise ValueError("map must have as many components as variables")
    I, ys = graph_ideal(F)
    xi = F.variables[i - 1]
    keep = ys + [xi]
    E = eliminate(I, keep, budget)
    if E.is_zero():
        raise NotDominantError(
            f"coordinate {xi!r} satisfies no algebraic relation over the image; "
            "map is not dominant"
        )
    gens = [g for g in E.generators if not g.is_zero()]
    if any(g.degree_in(xi) == 0 for g in gens):
        # a relation purely among the Y's: the image lies in a hypersurface
        raise NotDominantError(
            "image satisfies a relation not involving the coordinate; "
            "map is not dominant"
        )
    if len(gens) != 1:
        raise InternalCheckError(
            "elimination ideal of a dominant map coordinate is not principal"
        )
    h = gens[0]
    canonical = {y: f"Y{k}" for k, y in enumerate(ys, start=1)}
    canonical[xi] = "T"
    h = rename_variables(h, canonical)
    h = with_variables(h, tuple(f"Y{k}" for k in range(1, F.n + 1)) + ("T",))
    return make_primitive(squarefree_part(h))


def generic_fiber_degree(
    F: PolyMap, sample, budget: GroebnerBudget = DEFAULT_BUDGET
) -> int:
    """Dimension of Q[X]/<F_i(X) - sample_i>: fiber size with multiplicity.

    The sample must avoid degenerate values (caller's duty); a fiber ideal
    of positive dimension raises NotZeroDimensionalError.
    """
    if not F.is_square():
        raise ValueError("map must have as many components as variables")
    sample = [Fraction(s) for s in sample]
    if len(sample) != F.n:
        raise ValueError("sample length does not match component count")
    gens = tuple(f - s for f, s in zip(F.components, sample))
    order = TermOrder.grlex(F.variables)
    G = groebner(Ideal(gens), order, budget)
    if G.is_zero():
        raise NotZeroDimensionalError("fiber ideal is zero")
    key = order.key_function(F.variables)
    lms = [max(g.terms, key=key) for g in G.generators if not g.is_zero()]
    if any(sum(m) == 0 for m in lms):
        return 0  # 1 in the ideal: empty fiber
    nvars = len(F.variables)
    bounds = []
    for v in range(nvars):
        pure = [m[v] for m in lms if sum(m) == m[v] and m[v] > 0]
        if not pure:
            raise NotZeroDimensionalError(
                "fiber ideal is not zero-dimensional (sample hit a degenerate value)"
            )
        bounds.append(min(pure))

    # the standard monomials form a downset, so unit steps from the origin
    # reach all of them without leaving it
    count = 0
    stack = [(0,) * nvars]
    seen = {(0,) * nvars}
    while stack:
        m = stack.pop()
        if any(_monomial_divides(lm, m) for lm in lms):
            continue
        count += 1
        for v in range(nvars):
            if m[v] + 1 <= bounds[v]:
                t = m[:v] + (m[v] + 1,) + m[v + 1 :]
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
    return count


# ---- resultants and discriminants ----


def resultant(
    p: Polynomial,
    q: Polynomial,
    t: str,
    formal_deg_p: int | None = None,
    formal_deg_q: int | None = None,
) -> Polynomial:
    """Determinant of the Sylvester matrix of (p, q) in t at formal degrees.

    Formal degrees default to the actual t-degrees; they may exceed them,
    in which case the top coefficients are zero polynomials.  Computing at a
    declared formal degree keeps the output a single polynomial identity
    when the coefficients are themselves polynomials that may drop degree
    on specialization.
    """
    if p.variables != q.variables:
        raise VariableMismatchError("resultant operands over different variables")
    variables = p.variables
    if t not in variables:
        raise ValueError(f"unknown variable {t!r}")
    dp = -1 if p.is_zero() else p.degree_in(t)
    dq = -1 if q.is_zero() else q.degree_in(t)
    m = max(dp, 0) if formal_deg_p is None else formal_deg_p
    n = max(dq, 0) if formal_deg_q is None else formal_deg_q
    if m < max(dp, 0) or n < max(dq, 0):
        raise ValueError("formal degree below actual degree")
    if m <= 0 and n <= 0:
        raise ValueError("at least one formal degree must be positive")
    zero = Polynomial.zero(variables)
    cp = coefficients_in(p, t)
    cq = coefficients_in(q, t)
    # row vectors of coefficients, highest power first, padded to formal degree
    rp = [(cp[k] if k < len(cp) else zero) for k in range(m, -1, -1)]
    rq = [(cq[k] if k < len(cq) else zero) for k in range(n, -1, -1)]
    size = m + n
    rows = []
    for shift in range(n):
        rows.append([zero] * shift + rp + [zero] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([zero] * shift + rq + [zero] * (size - shift - n - 1))
    return poly_matrix_det(rows)


def discriminant(p: Polynomial, t: str, formal_degree: int) -> Polynomial:
    """Discriminant of p in t at a declared formal degree.

    For d >= 2 this is (-1)^(d(d-1)/2) Res_t(p, dp/dt) at formal degrees
    (d, d-1), divided exactly by the coefficient of t^d; for d = 1 it is
    the constant 1.
    """
    d = formal_degree
    if d < 1:
        raise ValueError("formal degree must be at least 1")
    if d == 1:
        return Polynomial.one(p.variables)
    coeffs = coefficients_in(p, t)
    if d >= len(coeffs) or coeffs[d].is_zero():
        raise InternalCheckError(
            "leading coefficient at the formal degree is zero; discriminant division "
            "is not defined"
        )
    lead = coeffs[d]
    res = resultant(p, p.partial_derivative(t), t, d, d - 1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return exact_div(sign * res, lead)
