"""Bifurcation machinery for polynomial maps: the hypersurface polynomial
H built from the leading coefficients of the coordinate relations h_i, the
cone form at infinity, the line-genericity polynomial sigma(U, V) = D * R,
and the arithmetic feasibility checker for branched covers of the line.

All outputs have rational coefficients by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .elim import (
    DEFAULT_BUDGET,
    GroebnerBudget,
    discriminant,
    generic_fiber_degree,
    minimal_poly_of_coordinate,
    resultant,
)
from .errors import NotZeroDimensionalError
from .polyring import (
    Polynomial,
    PolyMap,
    coefficients_in,
    drop_variables,
    make_primitive,
    squarefree_part,
    substitute,
    with_variables,
)


@dataclass(frozen=True)
class Line:
    """The line {u + t v} through u with direction v != 0."""

    u: tuple
    v: tuple

    def __post_init__(self):
        u = tuple(Fraction(x) for x in self.u)
        v = tuple(Fraction(x) for x in self.v)
        if len(u) != len(v):
            raise ValueError("point and direction have different lengths")
        if not any(v):
            raise ValueError("direction must be nonzero")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return len(self.u)


@dataclass(frozen=True)
class BifurcationData:
    """Per-map bundle: relations h_i over (Y, T), their leading coefficients
    a_i over Y, the reduced hypersurface polynomial H (constant 1 when the
    bifurcation set is empty), its leading form (None when H is constant),
    and the generic fiber degree when computed."""

    h: tuple
    a: tuple
    H: Polynomial
    cone_form: Polynomial | None
    fiber_degree: int | None

    @property
    def empty_bifurcation_set(self) -> bool:
        return self.H.is_constant()


@dataclass(frozen=True)
class ComponentData:
    """One irreducible component h_W of H with its restriction-map
    polynomials g_VW (both user-supplied; computing g_VW needs component
    decompositions that are out of scope)."""

    h_W: Polynomial
    g_list: tuple


def bifurcation_data(
    F: PolyMap,
    compute_fiber_degree: bool = True,
    budget: GroebnerBudget = DEFAULT_BUDGET,
    rng_seed: int = 1729,
) -> BifurcationData:
    """Compute h_i, a_i, H, and the cone form for a dominant rational map.

    H is the squarefree part of the product of the a_i, integer-primitive
    with a positive sign; the constant 1 marks an empty bifurcation set.
    The fiber degree is sampled at random rational points, resampling when
    the fiber ideal is degenerate or the sample lies on {H = 0}.

    The a_i construction captures the non-proper (asymptotic) value set;
    for locally diffeomorphic maps that is the whole bifurcation set, which
    is the intended use.  Maps with critical points also have critical
    values outside {H = 0}.
    """
    hs = tuple(minimal_poly_of_coordinate(F, i, budget) for i in range(1, F.n + 1))
    y_ring = tuple(f"Y{k}" for k in range(1, F.n + 1))
    aas = []
    for h in hs:
        coeffs = coefficients_in(h, "T")
        lead = coeffs[-1]
        aas.append(with_variables(lead, y_ring))
    product = Polynomial.one(y_ring)
    for a in aas:
        product = product * a
    if product.is_constant():
        H = Polynomial.one(y_ring)
        cone = None
    else:
        H = make_primitive(squarefree_part(product))
        cone = H.leading_form()

    degree = None
    if compute_fiber_degree:
        degree = _sample_fiber_degree(F, H, budget, rng_seed)
    return BifurcationData(
        h=hs, a=tuple(aas), H=H, cone_form=cone, fiber_degree=degree
    )


def _sample_fiber_degree(F, H, budget, rng_seed, attempts=40):
    rng = random.Random(rng_seed)
    for trial in range(attempts):
        span = 7 + 2 * trial
        sample = [Fraction(rng.randint(-span, span)) for _ in range(F.n)]
        if H.evaluate(sample) == 0:
            continue
        try:
            d = generic_fiber_degree(F, sample, budget)
        except NotZeroDimensionalError:
            continue
        if d > 0:
            return d
    raise NotZeroDimensionalError(
        "could not find a sample with a zero-dimensional fiber"
    )


def _uv_ring(n):
    us = tuple(f"U{k}" for k in range(1, n + 1))
    vs = tuple(f"V{k}" for k in range(1, n + 1))
    return us, vs


def _on_line(p: Polynomial, us, vs):
    """p(U + t V) over the ring (U..., V..., t)."""
    ring = us + vs + ("t",)
    t = Polynomial.variable(ring, "t")
    bindings = {}
    for name, uname, vname in zip(p.variables, us, vs):
        bindings[name] = (
            Polynomial.variable(ring, uname) + t * Polynomial.variable(ring, vname)
        )
    return substitute(p, bindings, ring), ring


def poly_D(H: Polynomial) -> Polynomial:
    """coneform(V) * Disc_t(H(U + tV)) at formal degree deg H, over (U, V).

    The cone factor makes D vanish whenever the direction lies on the cone
    at infinity (where the t-degree drops), which the bare formal-degree
    discriminant would miss; for deg H = 1 the discriminant is 1 and D is
    the cone factor alone.
    """
    if H.is_constant():
        raise ValueError("H must be nonconstant")
    n = len(H.variables)
    us, vs = _uv_ring(n)
    d = H.total_degree()
    restricted, ring = _on_line(H, us, vs)
    disc = discriminant(restricted, "t", d)
    cone = H.leading_form()
    cone_v = substitute(
        cone, {name: Polynomial.variable(ring, v) for name, v in zip(H.variables, vs)},
        ring,
    )
    return drop_variables(cone_v * disc, ("t",))


def poly_R(components) -> Polynomial:
    """Product over components of Res_t(h_W(U+tV), g_VW(U+tV)) at formal
    degrees (deg h_W, deg g_VW); the empty product is the constant 1."""
    components = tuple(components)
    if not components:
        return Polynomial.one(())
    n = len(components[0].h_W.variables)
    us, vs = _uv_ring(n)
    total = Polynomial.one(us + vs)
    for comp in components:
        h = comp.h_W
        dh = h.total_degree()
        h_line, ring = _on_line(h, us, vs)
        for g in comp.g_list:
            if g.variables != h.variables:
                raise ValueError("component polynomials over different variables")
            dg = g.total_degree()
            if dh <= 0 and dg <= 0:
                raise ValueError("resultant of two degree-0 polynomials")
            g_line, _ = _on_line(g, us, vs)
            res = resultant(h_line, g_line, "t", dh, dg)
            total = total * drop_variables(res, ("t",))
    return total


def sigma(
    F: PolyMap,
    components=None,
    data: BifurcationData | None = None,
    budget: GroebnerBudget = DEFAULT_BUDGET,
) -> Polynomial:
    """The genericity certificate polynomial D(U, V) R(U, V).

    Vanishes exactly on the lines that fail transversality, have direction
    on the cone at infinity, or meet the supplied bad components.  When the
    bifurcation set is empty the constant 1 is returned: every line is
    generic.  Component data is optional input; with none supplied R = 1.
    """
    if data is None:
        data = bifurcation_data(F, compute_fiber_degree=False, budget=budget)
    n = F.n
    us, vs = _uv_ring(n)
    ring = us + vs
    if components:
        for comp in components:
            if not _divides_H(comp.h_W, data.H):
                raise ValueError("component polynomial does not divide H")
    if data.empty_bifurcation_set:
        return Polynomial.one(ring)
    D = poly_D(data.H)
    if components:
        R = poly_R(components)
        return with_variables(D, ring) * with_variables(R, ring)
    return D


def _divides_H(h_W, H):
    from .polyring import divides

    return divides(with_variables(h_W, H.variables), H)


@dataclass(frozen=True)
class C2Status:
    """Outcome of one side of the genericity check; `ok` is None when the
    precondition (base point off the hypersurface, direction off the cone)
    fails, so the check does not apply."""

    ok: bool | None
    detail: str


def assert_c2(
    F: PolyMap,
    u,
    v,
    components=None,
    data: BifurcationData | None = None,
    budget: GroebnerBudget = DEFAULT_BUDGET,
):
    """Check sigma(u, V) != 0 and sigma(U, v) != 0 as polynomials.

    Returns a pair of C2Status: the first for the fixed base point u (needs
    H(u) != 0), the second for the fixed direction v (needs coneform(v) != 0,
    vacuous when the bifurcation set is empty).
    """
    if data is None:
        data = bifurcation_data(F, compute_fiber_degree=False, budget=budget)
    n = F.n
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    if len(u) != n or len(v) != n:
        raise ValueError("point/direction length does not match the map")
    s = sigma(F, components=components, data=data, budget=budget)
    us, vs = _uv_ring(n)
    ring = us + vs

    if not data.empty_bifurcation_set and data.H.evaluate(u) == 0:
        first = C2Status(None, "precondition violated: u lies on {H = 0}")
    else:
        bind = {name: Fraction(x) for name, x in zip(us, u)}
        bind.update({name: Polynomial.variable(ring, name) for name in vs})
        part = substitute(s, bind, ring)
        first = C2Status(
            not part.is_zero(),
            "sigma(u, V) is not identically zero"
            if not part.is_zero()
            else "sigma(u, V) vanishes identically",
        )

    cone_ok = True
    if data.cone_form is not None and data.cone_form.evaluate(v) == 0:
        cone_ok = False
    if not cone_ok:
        second = C2Status(None, "precondition violated: v lies on the cone at infinity")
    else:
        bind = {name: Polynomial.variable(ring, name) for name in us}
        bind.update({name: Fraction(x) for name, x in zip(vs, v)})
        part = substitute(s, bind, ring)
        second = C2Status(
            not part.is_zero(),
            "sigma(U, v) is not identically zero"
            if not part.is_zero()
            else "sigma(U, v) vanishes identically",
        )
    return first, second


# ---- arithmetic feasibility of the branch data ----


def hurwitz_genus(d: int, local_degrees) -> Fraction:
    """Genus solving 2 - 2g = 2d - sum(deg_a - 1) over the points at infinity.

    This is the Riemann-Hurwitz count for a degree-d cover of the line
    ramified only over infinity, so g = (2 - 2d + sum(deg_a - 1)) / 2.  The
    result may be negative or non-integral; the caller interprets that as
    infeasibility of the proposed branch data.
    """
    if d < 1:
        raise ValueError("covering degree must be at least 1")
    local_degrees = [int(x) for x in local_degrees]
    for e in local_degrees:
        if not 1 <= e <= d:
            raise ValueError(f"local degree {e} outside [1, {d}]")
    ramification = sum(e - 1 for e in local_degrees)
    return Fraction(2 - 2 * d + ramification, 2)


def assertion3_feasible(d: int, local_degrees, g) -> tuple:
    """(feasible, reason) for branch data of a degree-d cover of the line.

    Rejects a non-integral genus, then the two impossible shapes for the
    curves at hand (a single branch at infinity forces d = 1 and g = 0, two
    branches force g = 0), then a negative genus.
    """
    local_degrees = [int(x) for x in local_degrees]
    g = Fraction(g)
    if g.denominator != 1:
        return False, "non-integral genus"
    n_branches = len(local_degrees)
    if n_branches == 1 and (d != 1 or g != 0):
        return False, "n_F=1 forces d=1, g=0"
    if n_branches == 2 and g != 0:
        return False, "n_F=2 forces g=0"
    if g < 0:
        return False, "negative genus"
    return True, "consistent branch data"
