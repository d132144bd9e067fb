import itertools
import math

import pytest
import sympy
from hypothesis import given, settings

from liftlog.errors import ZeroIdealError
from liftlog.monomial import MonomialIdeal, RingContext
from liftlog.newton import newton_polyhedron

from strategies import ideals

XY = RingContext(("x", "y"))


def brute_facets(gens, n):
    """Facets by trying every hyperplane through n-1 independent directions.

    Directions are differences of generators and recession rays e_i; the
    normal is a sympy nullspace vector, kept if it supports every generator.
    """
    gens = [tuple(g) for g in gens]
    p0s = gens
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set()
    for p0 in p0s:
        dirs = [tuple(a - b for a, b in zip(g, p0)) for g in gens if g != p0] + rays
        for combo in itertools.combinations(dirs, n - 1):
            M = sympy.Matrix(combo) if combo else sympy.zeros(0, n)
            ns = M.nullspace() if combo else [sympy.Matrix([1])]
            if len(ns) != 1:
                continue
            v = ns[0]
            den = math.lcm(*[sympy.fraction(x)[1] for x in v])
            w = [int(x * den) for x in v]
            if all(x <= 0 for x in w):
                w = [-x for x in w]
            if any(x < 0 for x in w):
                continue
            g = math.gcd(*w)
            w = tuple(x // g for x in w)
            d = sum(a * b for a, b in zip(w, p0))
            if d > 0 and all(sum(a * b for a, b in zip(w, q)) >= d for q in gens):
                found.add((w, d))
    return found


def test_examples():
    assert newton_polyhedron(MonomialIdeal(XY, ((1, 0), (0, 2)))).facets == (((2, 1), 2),)
    assert newton_polyhedron(MonomialIdeal.maximal(XY)).facets == (((1, 1), 1),)
    for n in range(1, 6):
        got = newton_polyhedron(MonomialIdeal(XY, ((n, 0), (0, 1)))).facets
        assert got == (((1, n), n),)


def test_staircase_facets():
    I = MonomialIdeal(XY, ((10, 0), (8, 1), (1, 4), (0, 5)))
    assert set(newton_polyhedron(I).facets) == {((4, 9), 40), ((1, 1), 5)}


def test_degenerate_inputs():
    with pytest.raises(ZeroIdealError):
        newton_polyhedron(MonomialIdeal.zero(XY))
    assert newton_polyhedron(MonomialIdeal.unit(XY)).facets == ()


def test_coordinate_facets_of_non_primary():
    P = newton_polyhedron(MonomialIdeal(XY, ((1, 1),)))
    assert set(P.facets) == {((1, 0), 1), ((0, 1), 1)}


def test_dimension_cap():
    ctx = RingContext(tuple("abcdef"))
    with pytest.raises(ValueError):
        newton_polyhedron(MonomialIdeal.maximal(ctx))
    assert len(newton_polyhedron(MonomialIdeal.maximal(ctx), max_dim=6).facets) == 1


@settings(max_examples=60, deadline=None)
@given(ideals(max_exp=6, max_gens=5, proper=True))
def test_facets_match_brute_force(I):
    assert set(newton_polyhedron(I).facets) == brute_facets(I.gens, I.ctx.n)


@settings(max_examples=40, deadline=None)
@given(ideals(n=2, max_exp=8, max_gens=6, proper=True))
def test_sweep_and_double_description_agree(I):
    assert newton_polyhedron(I, method="sweep").facets == newton_polyhedron(I, method="dd").facets


@settings(max_examples=60, deadline=None)
@given(ideals(max_exp=6, max_gens=5, proper=True))
def test_facet_invariants(I):
    P = newton_polyhedron(I)
    for w, d in P.facets:
        assert math.gcd(*w) == 1 and any(w) and min(w) >= 0 and d > 0
        assert any(sum(a * b for a, b in zip(w, g)) == d for g in I.gens)
    assert all(P.contains(g) for g in I.gens)
