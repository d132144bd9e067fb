"""Lifting derivations through monomial charts Q[y] -> Q[x], y_i -> x^(m_i).

The lift is computed in logarithmic coordinates: with M the exponent matrix,
log y = M log x, so ∂̄(x_j)/x_j = sum_i (M^-1)_{ji} ∂(y_i)/y_i. The result is
a derivation of the Laurent ring in x; whether it is regular along the
critical coordinates is the direct test that ``chart_liftable`` is checked
against.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .derivations import DerivationModule, GradedDerivation, intersect_all
from .errors import NotLiftable, SingularExponentMatrix, ZeroWeight
from .monomial import MonomialIdeal, RingContext
from .valuations import WeightValuation, log_module


class UnramifiedChartWarning(UserWarning):
    """An induced weight is a standard basis vector, so the chart is unramified there."""


@dataclass(frozen=True)
class MonomialMap:
    source: RingContext
    target: RingContext
    matrix: tuple  # row i: exponent in the target of the image of y_i

    def __post_init__(self):
        rows = tuple(self.target.check(r) for r in self.matrix)
        if len(rows) != self.source.n:
            raise ValueError(f"need one row per source variable ({self.source.n}), got {len(rows)}")
        if self.source.n != self.target.n:
            raise SingularExponentMatrix("source and target need the same number of variables")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("chart exponents must be nonnegative")
        inv = linalg.inverse([list(r) for r in rows])
        if inv is None:
            raise SingularExponentMatrix(f"exponent matrix {rows} is not invertible over Q")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "_inverse", tuple(tuple(r) for r in inv))

    @property
    def n(self):
        return self.source.n

    @property
    def inverse(self):
        return self._inverse

    def coord(self, j) -> int:
        """Target coordinate index from an index or a variable name."""
        if isinstance(j, str):
            return self.target.index(j)
        if not 0 <= j < self.n:
            raise IndexError(f"coordinate {j} out of range")
        return j

    def image(self, e):
        """Target exponent of the (Laurent) monomial y^e."""
        return tuple(sum(e[i] * self.matrix[i][k] for i in range(self.n)) for k in range(self.n))

    def __str__(self):
        return "; ".join(f"{y} = {self.target.monomial_str(r)}" for y, r in zip(self.source.variable_names, self.matrix))


def identity_map(ctx: RingContext, target: RingContext | None = None) -> MonomialMap:
    n = ctx.n
    return MonomialMap(ctx, target or ctx, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def compose(first: MonomialMap, second: MonomialMap) -> MonomialMap:
    """Chart y -> x -> z: ``first`` sends y into Q[x], ``second`` sends x into Q[z]."""
    if first.target != second.source:
        raise ValueError("maps do not compose")
    M, N = first.matrix, second.matrix
    rows = tuple(tuple(sum(M[i][k] * N[k][j] for k in range(len(N))) for j in range(len(N[0]))) for i in range(len(M)))
    return MonomialMap(first.source, second.target, rows)


def _laurent_str(ctx, e):
    parts = []
    for name, v in zip(ctx.variable_names, e):
        if v == 1:
            parts.append(name)
        elif v:
            parts.append(f"{name}^{v}")
    return "*".join(parts) if parts else "1"


def _poly_str(ctx, terms):
    if not terms:
        return "0"
    out = []
    for k, (e, c) in enumerate(terms):
        mono = _laurent_str(ctx, e)
        mag = abs(c)
        body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


@dataclass(frozen=True)
class LaurentDerivationImage:
    """A derivation of Q[x^±1] given by its values on the variables.

    ``images[j]`` is a sorted tuple of (exponent, coefficient) pairs, the fully
    expanded Laurent polynomial ∂(x_j); exponents may be negative.
    """

    ctx: RingContext
    images: tuple

    @classmethod
    def from_dicts(cls, ctx, dicts):
        return cls(ctx, tuple(tuple(sorted((e, Fraction(c)) for e, c in d.items() if c)) for d in dicts))

    def terms(self, j):
        return self.images[j]

    def is_zero(self):
        return not any(self.images)

    def format(self):
        parts = []
        for name, terms in zip(self.ctx.variable_names, self.images):
            if terms:
                parts.append(f"({_poly_str(self.ctx, terms)})∂{name}")
        return " + ".join(parts) if parts else "0"

    def values_str(self):
        return "; ".join(f"∂({x}) = {_poly_str(self.ctx, t)}" for x, t in zip(self.ctx.variable_names, self.images))

    def to_json(self):
        return {x: [{"exponent": list(e), "coeff": f"{c.numerator}/{c.denominator}"} for e, c in t]
                for x, t in zip(self.ctx.variable_names, self.images)}


def as_laurent(d: GradedDerivation, ctx: RingContext) -> LaurentDerivationImage:
    dicts = [{} for _ in range(ctx.n)]
    for i, c, e in d.terms():
        dicts[i][e] = c
    return LaurentDerivationImage.from_dicts(ctx, dicts)


def lift_laurent(chart: MonomialMap, D: LaurentDerivationImage) -> LaurentDerivationImage:
    """Unique Laurent derivation ∂̄ upstairs with dπ(∂̄) = D."""
    if D.ctx != chart.source:
        raise ValueError("derivation lives on a different ring than the chart source")
    n = chart.n
    inv = chart.inverse
    # log-derivatives D(y_i)/y_i pushed to the target
    logs = []
    for i in range(n):
        acc = {}
        for e, c in D.terms(i):
            shifted = tuple(v - int(k == i) for k, v in enumerate(e))
            img = chart.image(shifted)
            acc[img] = acc.get(img, 0) + c
        logs.append(acc)
    out = []
    for j in range(n):
        acc = defaultdict(Fraction)
        for i in range(n):
            if inv[j][i] == 0:
                continue
            for e, c in logs[i].items():
                acc[tuple(v + int(k == j) for k, v in enumerate(e))] += inv[j][i] * c
        out.append(acc)
    return LaurentDerivationImage.from_dicts(chart.target, out)


def direct_lift(chart: MonomialMap, d: GradedDerivation) -> LaurentDerivationImage:
    return lift_laurent(chart, as_laurent(d, chart.source))


def induced_weight(chart: MonomialMap, j) -> WeightValuation:
    """Order of vanishing of each y_i along the divisor x_j = 0."""
    j = chart.coord(j)
    w = tuple(row[j] for row in chart.matrix)
    if not any(w):
        raise ZeroWeight(f"{chart.target.variable_names[j]} divides no image monomial")
    return WeightValuation(chart.source, w)


def pullback_weight(chart: MonomialMap, W) -> WeightValuation:
    """Source weight ν_W ∘ π for a monomial weight W on the target."""
    W = chart.target.check(W)
    return WeightValuation(chart.source, tuple(sum(a * b for a, b in zip(W, row)) for row in chart.matrix))


def ramified_coordinates(chart: MonomialMap) -> list:
    """Target coordinates dividing the Jacobian.

    det(∂y_i/∂x_j) = det(M)·x^(column sums - 1), so x_j is critical exactly
    when the weight it induces sums to more than 1.
    """
    return [j for j in range(chart.n) if sum(row[j] for row in chart.matrix) > 1]


def chart_liftable(chart: MonomialMap, critical) -> DerivationModule:
    """Intersection of T(log^w m) over the weights induced by the critical coordinates."""
    critical = sorted({chart.coord(j) for j in critical})
    if not critical:
        raise ValueError("declare at least one critical coordinate")
    m = MonomialIdeal.maximal(chart.source)
    modules = []
    for j in critical:
        v = induced_weight(chart, j)
        if sum(v.w) == 1:
            warnings.warn(f"chart is unramified along {chart.target.variable_names[j]}; "
                          f"weight {v.w} imposes a vacuous lifting condition", UnramifiedChartWarning, stacklevel=2)
        modules.append(log_module(v, m))
    return intersect_all(modules)


def lifts_regularly(chart: MonomialMap, d: GradedDerivation, critical) -> bool:
    """No term of the lift has a negative exponent in a critical coordinate."""
    critical = {chart.coord(j) for j in critical}
    image = direct_lift(chart, d)
    return all(e[j] >= 0 for terms in image.images for e, _ in terms for j in critical)


def lifts_for_weight(chart: MonomialMap, d: GradedDerivation, W) -> bool:
    """ν_W(∂̄ x_k) >= ν_W(x_k) for every target variable, W a target weight."""
    W = chart.target.check(W)
    image = direct_lift(chart, d)
    return all(sum(a * b for a, b in zip(W, e)) >= W[k]
               for k, terms in enumerate(image.images) for e, _ in terms)


def tangency_check(chart: MonomialMap, d: GradedDerivation, critical) -> bool:
    """∂̄(x_j) ∈ (x_j) for every critical j; requires a regular lift."""
    if not lifts_regularly(chart, d, critical):
        raise NotLiftable(f"{d.format(chart.source)} does not lift regularly")
    image = direct_lift(chart, d)
    return all(e[j] >= 1 for j in {chart.coord(j) for j in critical} for e, _ in image.terms(j))
