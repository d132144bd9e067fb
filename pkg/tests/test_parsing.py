from fractions import Fraction

import pytest

from liftlog.errors import IdealSyntaxError, NegativeExponent, ParseError, UnknownVariable
from liftlog.monomial import MonomialIdeal, RingContext
from liftlog.parsing import parse_derivation, parse_ideal, parse_map, parse_monomial, parse_ring_and_ideal


def test_staircase_ideal():
    ctx, I = parse_ring_and_ideal("ring x,y; x^10, x^8*y, x*y^4, y^5")
    assert ctx.variable_names == ("x", "y")
    assert I.gens == ((10, 0), (8, 1), (1, 4), (0, 5))


def test_one_variable_and_whitespace():
    ctx, I = parse_ring_and_ideal("ring x; x")
    assert I.gens == ((1,),)
    _, J = parse_ring_and_ideal("  ring  x , y ;x ^ 2 *y,  y*x^2 ")
    assert J.gens == ((2, 1),)


def test_zero_and_unit():
    _, Z = parse_ring_and_ideal("ring x,y; 0")
    assert Z.is_zero()
    _, U = parse_ring_and_ideal("ring x,y; 1, x")
    assert U.is_unit()


def test_negative_exponent_rejected_with_position():
    with pytest.raises(NegativeExponent) as exc:
        parse_ring_and_ideal("ring x,y; x^-1")
    assert exc.value.line == 1 and exc.value.column == 13


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_ring_and_ideal("ring x,y; z")


@pytest.mark.parametrize("text", ["x, y", "ring x,y x", "ring x,y; x^", "ring x,y; x,,y", "ring x,x; x",
                                  "ring x,y; x^0", "ring x,y; x$y"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_ring_and_ideal(text)


def test_errors_report_line_and_column():
    with pytest.raises(IdealSyntaxError) as exc:
        parse_ring_and_ideal("ring x,y;\nx, $")
    assert (exc.value.line, exc.value.column) == (2, 4)


def test_bare_ideal_and_monomial():
    ctx = RingContext(("a", "b"))
    assert parse_ideal("a^2*b, b^3", ctx) == MonomialIdeal(ctx, ((2, 1), (0, 3)))
    assert parse_monomial("b*a*b", ctx) == (1, 2)


def test_map():
    src, tgt, rows = parse_map("y1 = x1; y2 = x1^2*x2")
    assert src.variable_names == ("y1", "y2")
    assert tgt.variable_names == ("x1", "x2")
    assert rows == ((1, 0), (2, 1))
    src, tgt, rows = parse_map("ring s, x; x = x; y = x^2*s")
    assert tgt.variable_names == ("s", "x") and rows == ((0, 1), (1, 2))


def test_derivations():
    ctx = RingContext(("x", "y"))
    assert parse_derivation("y^3*dx", ctx) == ((-1, 3), (1, 0))
    assert parse_derivation("x*dx - y*dy", ctx) == ((0, 0), (1, -1))
    assert parse_derivation("3/2*x*∂x", ctx) == ((0, 0), (Fraction(3, 2), 0))
    with pytest.raises(IdealSyntaxError):
        parse_derivation("x*dx + dy", ctx)


def test_formatted_derivations_parse_back():
    import random

    from liftlog.derivations import GradedDerivation

    rng = random.Random(4)
    ctx = RingContext(("x", "y", "z"))
    for _ in range(200):
        b = [rng.randint(0, 3) for _ in range(3)]
        c = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)]
        if rng.random() < 0.4:
            i = rng.randrange(3)
            b[i] = -1
            c = [v if j == i else 0 for j, v in enumerate(c)]
        if not any(c):
            continue
        d = GradedDerivation(tuple(b), tuple(c))
        assert GradedDerivation(*parse_derivation(d.format(ctx), ctx)) == d
