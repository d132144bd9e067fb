import itertools
import random

import pytest

from liftlog.monomial import MonomialIdeal, RingContext

NAMES = ("x", "y", "z")


def ring(n):
    return RingContext(NAMES[:n])


def random_ideal(rng, n, max_exp=5, max_gens=4, m_primary=False, proper=True):
    ctx = ring(n)
    while True:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        if m_primary:
            gens += [tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(n)) for i in range(n)]
        I = MonomialIdeal(ctx, tuple(gens))
        if not proper or not I.is_unit():
            return I


def random_staircase(rng, max_exp=8):
    """Random m-primary ideal in two variables with exponents <= max_exp."""
    ctx = ring(2)
    a = rng.randint(1, max_exp)
    b = rng.randint(1, max_exp)
    inner = [(rng.randint(0, max_exp), rng.randint(0, max_exp)) for _ in range(rng.randint(0, 4))]
    inner = [p for p in inner if p != (0, 0)]
    return MonomialIdeal(ctx, tuple([(a, 0), (0, b)] + inner))


def random_squarefree(rng, n):
    ctx = ring(n)
    while True:
        gens = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        I = MonomialIdeal(ctx, tuple(gens))
        if not I.is_unit():
            return I


def box(upper):
    return itertools.product(*(range(m + 1) for m in upper))


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def xy():
    return ring(2)
