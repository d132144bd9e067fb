import pytest
from hypothesis import given, settings

from liftlog.closures import (
    default_oracle_k,
    integral_closure,
    integral_member_oracle,
    integral_members_oracle,
    rr_closure,
)
from liftlog.errors import NoStabilization, ZeroIdealError
from liftlog.monomial import MonomialIdeal, RingContext, contained, power, radical
from liftlog.newton import newton_polyhedron

from conftest import box
from strategies import ideals

XY = RingContext(("x", "y"))
I = MonomialIdeal(XY, ((10, 0), (8, 1), (1, 4), (0, 5)))
RR = MonomialIdeal(XY, ((10, 0), (0, 5), (1, 4), (7, 2), (6, 3), (8, 1)))
BAR = MonomialIdeal(XY, ((10, 0), (8, 1), (6, 2), (4, 3), (1, 4), (0, 5)))


def test_ratliff_rush_of_staircase():
    r = rr_closure(I)
    assert r.closure == RR
    assert r.power_check_passed and r.checked_window == 2 and r.stabilized_at >= 1


def test_ratliff_rush_trivial_cases():
    m = MonomialIdeal.maximal(XY)
    assert rr_closure(m).closure == m
    J = MonomialIdeal(XY, ((2, 0), (1, 1)))
    assert rr_closure(J).closure == J


def test_ratliff_rush_errors():
    with pytest.raises(ZeroIdealError):
        rr_closure(MonomialIdeal.zero(XY))
    with pytest.raises(ValueError):
        rr_closure(I, n_max=1, window=2)
    with pytest.raises(NoStabilization) as exc:
        rr_closure(I, n_max=2)
    assert exc.value.n_max == 2


def test_report_json():
    data = rr_closure(I).to_json()
    assert data["closure_text"] == str(RR) and data["power_check_passed"] is True


def test_integral_closure_examples():
    assert integral_closure(I) == BAR
    m = MonomialIdeal.maximal(XY)
    assert integral_closure(m) == m
    assert integral_closure(MonomialIdeal(XY, ((2, 0), (0, 2)))) == MonomialIdeal(XY, ((2, 0), (1, 1), (0, 2)))
    with pytest.raises(ZeroIdealError):
        integral_closure(MonomialIdeal.zero(XY))


def test_oracle_examples():
    assert integral_member_oracle(MonomialIdeal(XY, ((2, 0), (0, 2))), (1, 1), 2)
    assert not integral_member_oracle(MonomialIdeal.maximal(XY), (0, 0), 5)
    assert integral_member_oracle(I, (6, 2), 8)
    assert not integral_member_oracle(I, (5, 2), 8)


def test_oracle_agrees_on_staircase_box():
    pts = list(box(I.max_exponents()))
    oracle = integral_members_oracle(I, pts, default_oracle_k(I))
    assert all(oracle[p] == (p in BAR) for p in pts)


@settings(max_examples=40, deadline=None)
@given(ideals(max_exp=6, max_gens=3, proper=True))
def test_integral_closure_matches_power_oracle(J):
    bar = integral_closure(J)
    pts = list(box(J.max_exponents()))
    oracle = integral_members_oracle(J, pts, default_oracle_k(J))
    assert all(oracle[p] == (p in bar) for p in pts)


@settings(max_examples=40, deadline=None)
@given(ideals(max_exp=5, max_gens=4, proper=True))
def test_closure_chain_and_idempotence(J):
    r = rr_closure(J, n_max=40)
    bar = integral_closure(J)
    assert contained(J, r.closure) and contained(r.closure, bar) and contained(bar, radical(J))
    assert integral_closure(bar) == bar
    if r.power_check_passed:
        assert rr_closure(r.closure, n_max=40).closure == r.closure
        assert all(power(J, k) == power(r.closure, k) for k in range(r.stabilized_at, r.stabilized_at + 3))


@settings(max_examples=30, deadline=None)
@given(ideals(max_exp=6, max_gens=4, proper=True))
def test_closure_generators_satisfy_facets(J):
    P = newton_polyhedron(J)
    bar = integral_closure(J)
    assert all(P.contains(g) for g in bar.gens)
    assert newton_polyhedron(bar).facets == P.facets
