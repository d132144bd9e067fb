"""Weight valuations, logarithmic derivation modules and the liftable module.

For a weight w, T(log^w I) collects the derivations ∂ with ν_w(∂f) >= ν_w(f)
for every f in I. For a homogeneous ∂ of degree b this is the condition
w·b >= 0, unless ∂ kills all of I. The liftable module of the normalized
blow-up of I intersects these over the Rees valuations of I, which for a
monomial ideal are the facet normals of its Newton polyhedron.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .closures import integral_closure, rr_closure
from .derivations import (
    DerivationModule,
    build_module,
    full_piece,
    module_equal,
    module_subset,
    restricted_nullspace,
    tangent_module,
)
from .errors import UnitIdealError, ZeroIdealError
from .monomial import MonomialIdeal, RingContext, radical
from .newton import newton_polyhedron


@dataclass(frozen=True)
class WeightValuation:
    ctx: RingContext
    w: tuple

    def __post_init__(self):
        w = self.ctx.check(self.w)
        if any(v < 0 for v in w):
            raise ValueError(f"weights must be nonnegative: {w}")
        if not any(w):
            raise ValueError("the zero weight is not a valuation")
        object.__setattr__(self, "w", w)

    def is_primitive(self):
        return math.gcd(*self.w) == 1

    def __call__(self, a):
        return value(self, a)

    def __str__(self):
        return "ν(" + ", ".join(f"{x}={v}" for x, v in zip(self.ctx.variable_names, self.w)) + ")"


def value(v: WeightValuation, a) -> int:
    return sum(x * y for x, y in zip(v.w, v.ctx.check(a)))


def value_ideal(v: WeightValuation, I: MonomialIdeal) -> int:
    if I.is_zero():
        raise ZeroIdealError("the zero ideal has infinite value")
    return min(value(v, a) for a in I.gens)


def _log_kernel(I: MonomialIdeal, b):
    # ∂ of negative weight must kill every f in I; monomials of I include the
    # generators and their multiples x_j·g, which together pin c down
    n = I.ctx.n
    rows = set(I.gens)
    for g in I.gens:
        for j in range(n):
            rows.add(tuple(v + int(i == j) for i, v in enumerate(g)))
    return restricted_nullspace(b, sorted(rows), n)


def log_piece(v: WeightValuation, I: MonomialIdeal, b):
    """Degree-b piece of T(log^v I)."""
    if sum(x * y for x, y in zip(v.w, b)) >= 0:
        return full_piece(b, I.ctx.n)
    return _log_kernel(I, b)


def _start_degree(weights):
    # x^u ∂_i with w·u >= w_i needs no exponent beyond max w_i / w_j
    return max(-(-wi // wj) for w in weights for wi in w for wj in w if wj > 0) + 1


def log_module(v: WeightValuation, I: MonomialIdeal) -> DerivationModule:
    """T(log^v I): graded pieces are full where w·b >= 0, the I-kernel elsewhere."""
    if I.is_zero():
        raise ZeroIdealError("log module of the zero ideal")
    return build_module(I.ctx, lambda b: log_piece(v, I, b), _start_degree([v.w]))


def rees_valuations(I: MonomialIdeal):
    """[(WeightValuation, d)] from the Newton polyhedron facets w·a >= d."""
    if I.is_zero():
        raise ZeroIdealError("the zero ideal has no Rees valuations")
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no critical locus")
    return [(WeightValuation(I.ctx, w), d) for w, d in newton_polyhedron(I).facets]


def liftable_module(I: MonomialIdeal, rees=None) -> DerivationModule:
    """L(I): intersection of T(log^w I) over the Rees valuations of I."""
    if rees is None:
        rees = rees_valuations(I)
    n = I.ctx.n

    def piece(b):
        out = None
        for v, _ in rees:
            p = log_piece(v, I, b)
            out = p if out is None else linalg.intersect(out, p, n)
            if not out:
                break
        return out

    return build_module(I.ctx, piece, _start_degree([v.w for v, _ in rees]))


def uniformly_ramified(I: MonomialIdeal, rees=None) -> bool:
    """Every Rees valuation is constant on the minimal generators of √I."""
    if rees is None:
        rees = rees_valuations(I)
    rad = radical(I)
    return all(len({value(v, a) for a in rad.gens}) == 1 for v, _ in rees)


@dataclass(frozen=True)
class LiftReport:
    ideal: MonomialIdeal
    T_I: DerivationModule
    T_rr: DerivationModule
    L: DerivationModule
    T_bar: DerivationModule
    T_rad: DerivationModule
    rees: tuple
    rr_ideal: MonomialIdeal
    bar_ideal: MonomialIdeal
    chain: tuple  # (T_I ⊆ T_rr, T_rr ⊆ L, L ⊆ T_bar)
    chain_ok: bool
    uniformly_ramified: bool
    differentially_ramified: bool

    def to_json(self):
        mod = lambda M: {"text": str(M), "generators": M.to_json()}
        return {
            "ideal": str(self.ideal),
            "rr_closure": str(self.rr_ideal),
            "integral_closure": str(self.bar_ideal),
            "rees_valuations": [{"w": list(v.w), "d": d} for v, d in self.rees],
            "T_I": mod(self.T_I),
            "T_rr": mod(self.T_rr),
            "L": mod(self.L),
            "T_bar": mod(self.T_bar),
            "T_rad": mod(self.T_rad),
            "chain": {"T_I<=T_rr": self.chain[0], "T_rr<=L": self.chain[1], "L<=T_bar": self.chain[2]},
            "chain_ok": self.chain_ok,
            "uniformly_ramified": self.uniformly_ramified,
            "differentially_ramified": self.differentially_ramified,
        }


def sandwich_report(I: MonomialIdeal, n_max: int = 20, box_margin: int = 1) -> LiftReport:
    rees = tuple(rees_valuations(I))
    rr = rr_closure(I, n_max=n_max).closure
    bar = integral_closure(I)
    T_I = tangent_module(I, box_margin)
    T_rr = tangent_module(rr, box_margin)
    L = liftable_module(I, rees)
    T_bar = tangent_module(bar, box_margin)
    T_rad = tangent_module(radical(I), box_margin)
    chain = (module_subset(T_I, T_rr), module_subset(T_rr, L), module_subset(L, T_bar))
    return LiftReport(
        ideal=I, T_I=T_I, T_rr=T_rr, L=L, T_bar=T_bar, T_rad=T_rad, rees=rees,
        rr_ideal=rr, bar_ideal=bar, chain=chain, chain_ok=all(chain),
        uniformly_ramified=uniformly_ramified(I, rees),
        differentially_ramified=module_equal(L, T_rad),
    )
