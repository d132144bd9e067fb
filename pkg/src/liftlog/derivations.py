"""Multigraded modules of derivations of Q[x_1, ..., x_n].

A homogeneous derivation of multidegree b is  sum_i c_i x^(b+e_i) ∂_i.  It
sends x^a to (c·a) x^(a+b), so a module closed under multiplication by
monomials is described completely by its graded pieces, one subspace of Q^n
per degree b ∈ {-1, 0, 1, ...}^n. All modules here are built that way: pieces
are computed over a degree box, generators are the pieces not reached from
lower degrees, and the box is grown until the pieces on its outer shell are
already generated.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import linalg
from .errors import DegreeCapExceeded, NotMPrimary, NotTwoVariables, ZeroIdealError
from .monomial import MonomialIdeal, RingContext, is_m_primary, member

DEFAULT_MAX_DEGREE = 64


def max_degree() -> int:
    return int(os.environ.get("LIFTLOG_MAX_DEGREE", DEFAULT_MAX_DEGREE))


class _Zero:
    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


def admissible_slots(b) -> list:
    """Indices i with b + e_i >= 0."""
    neg = [i for i, v in enumerate(b) if v < 0]
    if not neg:
        return list(range(len(b)))
    if len(neg) == 1 and b[neg[0]] == -1:
        return neg
    return []


def _fmt_frac(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _parse_frac(s) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class GradedDerivation:
    degree: tuple
    coeffs: tuple

    def __post_init__(self):
        b = tuple(int(v) for v in self.degree)
        c = tuple(Fraction(v) for v in self.coeffs)
        if len(b) != len(c):
            raise ValueError("degree and coefficient vectors differ in length")
        if any(v < -1 for v in b):
            raise ValueError(f"degree entries must be >= -1: {b}")
        if not any(c):
            raise ValueError("a graded derivation needs a nonzero coefficient")
        slots = admissible_slots(b)
        if any(v and i not in slots for i, v in enumerate(c)):
            raise ValueError(f"coefficients {c} not supported in degree {b}")
        object.__setattr__(self, "degree", b)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def monomial(cls, u, i):
        """x^u ∂_i."""
        n = len(u)
        return cls(tuple(v - int(j == i) for j, v in enumerate(u)), tuple(int(j == i) for j in range(n)))

    @property
    def n(self):
        return len(self.degree)

    def slot(self):
        """Index i if this is a multiple of x^u ∂_i, else None."""
        nz = [i for i, v in enumerate(self.coeffs) if v]
        return nz[0] if len(nz) == 1 else None

    def terms(self):
        """(i, c_i, exponent of x^(b+e_i)) for every nonzero coefficient."""
        return [(i, c, tuple(v + int(j == i) for j, v in enumerate(self.degree)))
                for i, c in enumerate(self.coeffs) if c]

    def format(self, ctx: RingContext) -> str:
        out = []
        for k, (i, c, e) in enumerate(self.terms()):
            factors = [] if abs(c) == 1 else [str(abs(c))]
            mono = ctx.monomial_str(e)
            if mono != "1":
                factors.append(mono)
            piece = "*".join(factors) + f"∂{ctx.variable_names[i]}"
            if k == 0:
                out.append(("-" if c < 0 else "") + piece)
            else:
                out.append(f" {'-' if c < 0 else '+'} {piece}")
        return "".join(out)

    def to_json(self):
        return {"degree": list(self.degree), "coeffs": [_fmt_frac(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["degree"]), tuple(_parse_frac(c) for c in obj["coeffs"]))


def apply(d: GradedDerivation, a):
    """d(x^a) as (coefficient, exponent), or ZERO."""
    c = sum(ci * ai for ci, ai in zip(d.coeffs, a))
    if c == 0:
        return ZERO
    return c, tuple(x + y for x, y in zip(a, d.degree))


def preserves(d: GradedDerivation, I: MonomialIdeal) -> bool:
    """d(I) ⊆ I; checking the minimal generators suffices by Leibniz."""
    for a in I.gens:
        r = apply(d, a)
        if r is not ZERO and not member(I, r[1]):
            return False
    return True


def bracket(d1: GradedDerivation, d2: GradedDerivation):
    """Commutator [d1, d2], homogeneous of degree b1 + b2, or ZERO."""
    c = tuple((sum(x * y for x, y in zip(d1.coeffs, d2.degree))) * c2
              - (sum(x * y for x, y in zip(d2.coeffs, d1.degree))) * c1
              for c1, c2 in zip(d1.coeffs, d2.coeffs))
    if not any(c):
        return ZERO
    return GradedDerivation(tuple(x + y for x, y in zip(d1.degree, d2.degree)), c)


def degree_box(n, hi, lo=-1):
    return itertools.product(range(lo, hi + 1), repeat=n)


def shell(n, hi, lo=-1):
    """Degrees in [lo, hi+1]^n with some coordinate equal to hi+1."""
    for b in itertools.product(range(lo, hi + 2), repeat=n):
        if max(b) == hi + 1:
            yield b


def _unit_rows(n, excluded):
    return [tuple(int(j == i) for j in range(n)) for i in excluded]


def restricted_nullspace(b, rows, n):
    """Admissible c in degree b with r·c = 0 for every r in rows."""
    slots = admissible_slots(b)
    if not slots:
        return ()
    extra = _unit_rows(n, [i for i in range(n) if i not in slots])
    return linalg.nullspace(list(rows) + extra, n)


def full_piece(b, n):
    return restricted_nullspace(b, [], n)


@dataclass(frozen=True)
class DerivationModule:
    ctx: RingContext
    generators: tuple
    box: tuple = (-1, 0)

    @property
    def n(self):
        return self.ctx.n

    def piece(self, b):
        """rref basis of the degree-b piece generated by the generators."""
        rows = [g.coeffs for g in self.generators if all(x <= y for x, y in zip(g.degree, b))]
        return linalg.rref(rows)

    def contains(self, d: GradedDerivation) -> bool:
        return linalg.in_span(d.coeffs, self.piece(d.degree))

    def top_degree(self) -> int:
        return max([max(g.degree) for g in self.generators], default=0)

    def is_zero(self):
        return not self.generators

    def is_monomial(self):
        return all(g.slot() is not None for g in self.generators)

    def slot_ideals(self):
        """Per variable, the ideal of coefficients of ∂_i (monomial modules only)."""
        if not self.is_monomial():
            raise ValueError("module is not generated by single-slot derivations")
        per = [[] for _ in range(self.n)]
        for g in self.generators:
            (i, _, e), = g.terms()
            per[i].append(e)
        return [MonomialIdeal(self.ctx, tuple(es)) for es in per]

    def canonical(self):
        return build_module(self.ctx, self.piece, self.top_degree())

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.is_monomial():
            parts = []
            for name, J in zip(self.ctx.variable_names, self.slot_ideals()):
                if J.is_zero():
                    continue
                body = ",".join(self.ctx.monomial_str(g) for g in J.gens)
                parts.append(f"({body})∂{name}")
            return " + ".join(parts)
        return "⟨" + ", ".join(g.format(self.ctx) for g in self.generators) + "⟩"

    def to_json(self):
        return [g.to_json() for g in self.generators]

    @classmethod
    def from_json(cls, ctx, obj):
        return cls(ctx, tuple(GradedDerivation.from_json(o) for o in obj))


def _sort_key(g: GradedDerivation):
    return (g.degree, tuple(-c for c in g.coeffs))


def extract_generators(n, pieces: dict, hi):
    """Generators of the module with the given pieces on [-1, hi]^n."""
    gens = []
    for b in sorted(pieces, key=lambda b: (sum(b), b)):
        V = pieces[b]
        if not V:
            continue
        lower = linalg.span(*(pieces[tuple(v - int(j == i) for j, v in enumerate(b))]
                              for i in range(n) if b[i] > -1))
        for c in linalg.quotient_basis(V, lower):
            gens.append(GradedDerivation(b, c))
    return tuple(sorted(gens, key=_sort_key))


def build_module(ctx: RingContext, piece_fn: Callable, hi: int, check: Callable | None = None):
    """Module with graded pieces ``piece_fn(b)``, generated inside [-1, hi]^n.

    ``hi`` grows until every shell piece is already generated; ``check``
    (if given) must accept each generator.
    """
    n = ctx.n
    hi = max(hi, 0)
    cap = max_degree()
    memo = {}

    def cached(b):
        if b not in memo:
            memo[b] = piece_fn(b)
        return memo[b]

    while True:
        if hi > cap:
            raise DegreeCapExceeded(f"degree box exceeded LIFTLOG_MAX_DEGREE={cap}")
        pieces = {b: cached(b) for b in degree_box(n, hi)}
        gens = extract_generators(n, pieces, hi)
        M = DerivationModule(ctx, gens, (-1, hi))
        if all(cached(b) == M.piece(b) for b in shell(n, hi)):
            break
        hi += 1
    if check is not None:
        bad = [g for g in gens if not check(g)]
        if bad:
            raise AssertionError(f"generator fails the module's defining property: {bad[0]}")
    return M


def tangent_piece(I: MonomialIdeal, b):
    """V_b: admissible c with c·a = 0 whenever x^(a+b) ∉ I."""
    n = I.ctx.n
    rows = []
    for a in I.gens:
        s = tuple(x + y for x, y in zip(a, b))
        if min(s) < 0 or not member(I, s):
            rows.append(a)
    return restricted_nullspace(b, rows, n)


def tangent_module(I: MonomialIdeal, box_margin: int = 1) -> DerivationModule:
    """T(I) = {∂ : ∂(I) ⊆ I}."""
    if I.is_zero():
        raise ZeroIdealError("tangent module of the zero ideal")
    D = max(I.max_exponents())
    return build_module(I.ctx, lambda b: tangent_piece(I, b), D + box_margin,
                        check=lambda g: preserves(g, I))


def staircase_exponents(I: MonomialIdeal):
    """(p, q) with T(I) = R x∂x + R y∂y + R y^p ∂x + R x^q ∂y.

    Generators x^{a_i} y^{b_i} are taken with a_i decreasing; p is the largest
    jump in b and q the largest jump in a.
    """
    if I.ctx.n != 2:
        raise NotTwoVariables("staircase formula needs exactly two variables")
    if not is_m_primary(I):
        raise NotMPrimary(f"{I} is not m-primary")
    g = I.gens  # descending lex, so a strictly decreasing
    if len(g) == 1:
        raise NotMPrimary(f"{I} is not m-primary")
    p = max(g[i + 1][1] - g[i][1] for i in range(len(g) - 1))
    q = max(g[i][0] - g[i + 1][0] for i in range(len(g) - 1))
    return p, q


def staircase_T_2var(I: MonomialIdeal) -> DerivationModule:
    p, q = staircase_exponents(I)
    gens = (
        GradedDerivation((0, 0), (1, 0)),
        GradedDerivation((0, 0), (0, 1)),
        GradedDerivation((-1, p), (1, 0)),
        GradedDerivation((q, -1), (0, 1)),
    )
    return DerivationModule(I.ctx, tuple(sorted(gens, key=_sort_key)), (-1, max(p, q)))


def module_contains(M: DerivationModule, d: GradedDerivation) -> bool:
    return M.contains(d)


def module_subset(M: DerivationModule, N: DerivationModule) -> bool:
    """M ⊆ N."""
    return all(N.contains(g) for g in M.generators)


def module_equal(M: DerivationModule, N: DerivationModule) -> bool:
    return M.ctx == N.ctx and module_subset(M, N) and module_subset(N, M)


def module_intersect(M: DerivationModule, N: DerivationModule) -> DerivationModule:
    n = M.n
    hi = max(M.top_degree(), N.top_degree())
    return build_module(M.ctx, lambda b: linalg.intersect(M.piece(b), N.piece(b), n), hi)


def intersect_all(modules):
    modules = list(modules)
    out = modules[0]
    for M in modules[1:]:
        out = module_intersect(out, M)
    return out
