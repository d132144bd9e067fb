import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftlog.errors import DimensionMismatch, ZeroIdealError
from liftlog.monomial import (
    MonomialIdeal,
    RingContext,
    contained,
    divides,
    equals,
    intersect,
    is_m_primary,
    member,
    minimal_elements,
    minimal_primes,
    minimalize,
    power,
    product,
    quotient,
    radical,
)

from strategies import ideal_pairs, ideal_triples, ideals

XY = RingContext(("x", "y"))
T = RingContext(("t",))


def I_(*gens, ctx=XY):
    return MonomialIdeal(ctx, tuple(gens))


STAIRCASE = I_((10, 0), (8, 1), (1, 4), (0, 5))


def brute_member(I, a):
    """Membership read off the raw generator list, without canonical form."""
    return any(all(g <= v for g, v in zip(gen, a)) for gen in I.gens)


def test_minimalize_drops_multiples():
    assert minimalize([(2, 0), (1, 0)], XY).gens == ((1, 0),)
    assert minimalize([], XY).is_zero()
    got = minimalize([(10, 0), (8, 1), (9, 1), (1, 4), (0, 5)], XY)
    assert got.gens == ((10, 0), (8, 1), (1, 4), (0, 5))


def test_minimalize_rejects_wrong_length():
    with pytest.raises(DimensionMismatch):
        minimalize([(1, 2, 3)], XY)


def test_member_examples():
    assert member(STAIRCASE, (9, 3))
    assert not member(STAIRCASE, (7, 3))
    assert member(MonomialIdeal.unit(XY), (0, 0))
    assert (9, 3) in STAIRCASE


def test_powers_and_products():
    m = MonomialIdeal.maximal(XY)
    assert power(m, 2) == I_((2, 0), (1, 1), (0, 2))
    assert power(STAIRCASE, 1) == STAIRCASE
    assert power(STAIRCASE, 0).is_unit()
    tI = I_((4,), (5,), ctx=T)
    # in the polynomial ring Q[t] all of t^8, t^9, t^10 collapse to (t^8)
    assert tI * tI == I_((8,), ctx=T)


def test_quotient_examples():
    assert quotient(I_((2, 0), (1, 1)), I_((1, 0))) == I_((1, 0), (0, 1))
    assert quotient(STAIRCASE, STAIRCASE).is_unit()
    assert quotient(I_((4, 0), (3, 1), (2, 2)), I_((2, 0), (1, 1))) == I_((2, 0), (1, 1))


def test_quotient_by_zero_raises():
    with pytest.raises(ZeroIdealError):
        quotient(STAIRCASE, MonomialIdeal.zero(XY))


def test_intersect_examples():
    assert intersect(I_((1, 0)), I_((0, 1))) == I_((1, 1))
    assert intersect(STAIRCASE, MonomialIdeal.unit(XY)) == STAIRCASE
    # (x², y²) ⊆ (x, y), and xy is not in (x², y²)
    assert intersect(I_((1, 0), (0, 1)), I_((2, 0), (0, 2))) == I_((2, 0), (0, 2))


def test_radical_examples():
    assert radical(I_((2, 0), (1, 3))) == I_((1, 0))
    assert radical(MonomialIdeal.maximal(XY)) == MonomialIdeal.maximal(XY)
    assert radical(STAIRCASE) == MonomialIdeal.maximal(XY)
    with pytest.raises(ZeroIdealError):
        radical(MonomialIdeal.zero(XY))


def test_m_primary_and_equality():
    assert is_m_primary(STAIRCASE)
    assert not is_m_primary(I_((1, 0)))
    assert equals(I_((1, 0), (0, 1)), I_((0, 1), (1, 0)))


def test_zero_and_unit_behaviour():
    Z, U = MonomialIdeal.zero(XY), MonomialIdeal.unit(XY)
    assert str(Z) == "(0)"
    assert (Z * STAIRCASE).is_zero()
    assert (Z + STAIRCASE) == STAIRCASE
    assert quotient(Z, STAIRCASE).is_zero()
    assert quotient(STAIRCASE, U) == STAIRCASE
    assert U.is_unit() and not Z.is_unit()


def test_minimal_primes():
    assert minimal_primes(I_((1, 1))) == [frozenset({0}), frozenset({1})]
    assert minimal_primes(STAIRCASE) == [frozenset({0, 1})]


def test_text_round_trip():
    from liftlog.parsing import parse_ring_and_ideal
    ctx, J = parse_ring_and_ideal(STAIRCASE.to_text())
    assert J == STAIRCASE and ctx == XY


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9)), min_size=65, max_size=300),
       st.integers(2, 3))
def test_vectorized_minimalization_matches_scan(vecs, n):
    vecs = [v[:n] for v in vecs]
    slow = sorted({v for v in vecs if not any(divides(w, v) and w != v for w in vecs)})
    assert sorted(minimal_elements(vecs)) == slow
    assert sorted(minimal_elements(np.asarray(vecs))) == slow


def test_generic_minimalization_four_variables(rng):
    vecs = [tuple(rng.randint(0, 5) for _ in range(4)) for _ in range(200)]
    slow = sorted({v for v in vecs if not any(divides(w, v) and w != v for w in vecs)})
    assert sorted(minimal_elements(vecs)) == slow


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_canonical_form_is_idempotent(I):
    assert MonomialIdeal(I.ctx, I.gens) == I
    assert list(I.gens) == sorted(I.gens, reverse=True)
    assert not any(divides(a, b) for a in I.gens for b in I.gens if a != b)


@settings(max_examples=60, deadline=None)
@given(ideal_pairs(max_exp=4, max_gens=3))
def test_product_membership(pair):
    I, J = pair
    P = product(I, J)
    for a in I.gens:
        for b in J.gens:
            assert member(P, tuple(x + y for x, y in zip(a, b)))


@settings(max_examples=50, deadline=None)
@given(ideal_pairs(max_exp=6, max_gens=3))
def test_quotient_adjunction_against_brute_force(pair):
    I, J = pair
    Q = quotient(I, J)
    assert contained(product(Q, J), I)
    # brute force: x^c ∈ [I:J] iff x^(c+g) ∈ I for every generator g of J
    top = tuple(max(v) for v in zip(*(I.gens or ((0,) * I.ctx.n,))))
    for c in itertools.product(*(range(t + 2) for t in top)):
        want = all(brute_member(I, tuple(x + y for x, y in zip(c, g))) for g in J.gens)
        assert member(Q, c) == want


@settings(max_examples=40, deadline=None)
@given(ideal_triples())
def test_quotient_universal_property(triple):
    I, J, K = triple
    assert contained(K, quotient(I, J)) == contained(product(K, J), I)


@settings(max_examples=40, deadline=None)
@given(ideals(max_exp=3, max_gens=3), st.integers(0, 3), st.integers(0, 3))
def test_power_additivity(I, a, b):
    assert power(I, a + b) == product(power(I, a), power(I, b))


@settings(max_examples=40, deadline=None)
@given(ideal_pairs(max_exp=5, max_gens=3))
def test_intersection_against_brute_force(pair):
    I, J = pair
    K = intersect(I, J)
    for c in itertools.product(*(range(7) for _ in range(I.ctx.n))):
        assert member(K, c) == (brute_member(I, c) and brute_member(J, c))
