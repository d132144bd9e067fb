"""Monomial ideals in Q[x_1, ..., x_n].

An ideal is stored by its minimal generators, as exponent tuples in
descending lexicographic order. That form is canonical, so ideal equality is
tuple equality. Everything is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, ZeroIdealError

Exponent = tuple  # tuple[int, ...]

# below this many candidates the pure-Python scan beats numpy setup costs
_SMALL = 64


@dataclass(frozen=True)
class RingContext:
    variable_names: tuple

    def __post_init__(self):
        names = tuple(str(v) for v in self.variable_names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        object.__setattr__(self, "variable_names", names)

    @property
    def n(self) -> int:
        return len(self.variable_names)

    @classmethod
    def of(cls, *names):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        elif len(names) == 1 and "," in names[0]:
            names = tuple(s.strip() for s in names[0].split(","))
        return cls(tuple(names))

    def index(self, name: str) -> int:
        return self.variable_names.index(name)

    def check(self, a) -> Exponent:
        a = tuple(int(v) for v in a)
        if len(a) != self.n:
            raise DimensionMismatch(f"exponent {a} has length {len(a)}, ring has {self.n} variables")
        return a

    def monomial_str(self, a, mult="*") -> str:
        parts = []
        for name, e in zip(self.variable_names, a):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return mult.join(parts) if parts else "1"


def divides(g, a) -> bool:
    return all(x <= y for x, y in zip(g, a))


def _minimal_small(vecs):
    vecs = sorted(set(vecs), key=lambda v: (sum(v), v))
    kept = []
    for v in vecs:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return kept


def _minimal_2d(arr):
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    arr = arr[order]
    y = arr[:, 1]
    prior = np.minimum.accumulate(np.concatenate(([np.iinfo(np.int64).max], y[:-1])))
    return arr[y < prior]


def _minimal_3d(arr):
    # sweep in x; best[y] holds the smallest z among kept points with y' <= y
    arr = np.unique(arr, axis=0)
    ymax = int(arr[:, 1].max())
    big = np.iinfo(np.int64).max
    best = np.full(ymax + 1, big, dtype=np.int64)
    out = []
    xs = arr[:, 0]
    cuts = np.flatnonzero(np.diff(xs)) + 1
    for grp in np.split(arr, cuts):
        y, z = grp[:, 1], grp[:, 2]
        prior = np.minimum.accumulate(np.concatenate(([big], z[:-1])))
        keep = (best[y] > z) & (z < prior)
        if keep.any():
            kept = grp[keep]
            out.append(kept)
            tmp = np.full(ymax + 1, big, dtype=np.int64)
            np.minimum.at(tmp, kept[:, 1], kept[:, 2])
            best = np.minimum(best, np.minimum.accumulate(tmp))
    return np.concatenate(out)


def _minimal_generic(arr, chunk=2048):
    arr = np.unique(arr, axis=0)
    keep = np.ones(len(arr), dtype=bool)
    for start in range(0, len(arr), chunk):
        block = arr[start:start + chunk]
        le = np.all(arr[None, :, :] <= block[:, None, :], axis=2)
        # a row never strictly divides itself once duplicates are gone
        le[np.arange(len(block)), np.arange(start, start + len(block))] = False
        keep[start:start + len(block)] = ~le.any(axis=1)
    return arr[keep]


def minimal_elements(vecs) -> list:
    """Minimal elements of a finite set of exponent vectors under divisibility."""
    if isinstance(vecs, np.ndarray):
        arr = vecs
        if len(arr) <= _SMALL:
            return _minimal_small(map(tuple, arr.tolist()))
    else:
        vecs = list(vecs)
        if len(vecs) <= _SMALL:
            return _minimal_small(vecs)
        arr = np.asarray(vecs, dtype=np.int64)
    if len(arr) == 0:
        return []
    n = arr.shape[1]
    if n == 1:
        return [(int(arr.min()),)]
    if n == 2:
        res = _minimal_2d(np.unique(arr, axis=0))
    elif n == 3:
        res = _minimal_3d(arr)
    else:
        res = _minimal_generic(arr)
    return [tuple(r) for r in res.tolist()]


@dataclass(frozen=True, eq=True)
class MonomialIdeal:
    """Monomial ideal given by generators; canonicalized on construction."""

    ctx: RingContext
    gens: tuple = ()

    def __post_init__(self):
        checked = [self.ctx.check(g) for g in self.gens]
        if any(v < 0 for g in checked for v in g):
            raise ValueError("monomial exponents must be nonnegative")
        canon = tuple(sorted(minimal_elements(checked), reverse=True))
        object.__setattr__(self, "gens", canon)

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx):
        return cls(ctx, ((0,) * ctx.n,))

    @classmethod
    def maximal(cls, ctx):
        return cls(ctx, tuple(tuple(int(i == j) for j in range(ctx.n)) for i in range(ctx.n)))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.ctx.n,)

    def max_exponents(self) -> Exponent:
        if not self.gens:
            return (0,) * self.ctx.n
        return tuple(max(col) for col in zip(*self.gens))

    def array(self) -> np.ndarray:
        return np.asarray(self.gens, dtype=np.int64).reshape(len(self.gens), self.ctx.n)

    def __contains__(self, a) -> bool:
        return member(self, a)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __le__(self, other):
        return contained(self, other)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.ctx.monomial_str(g) for g in self.gens) + ")"

    def to_text(self) -> str:
        """Render in the ``ring ...; gens`` grammar accepted by the parser."""
        body = ", ".join(self.ctx.monomial_str(g) for g in self.gens) if self.gens else "0"
        return f"ring {', '.join(self.ctx.variable_names)}; {body}"


def _same_ctx(I, J):
    if I.ctx != J.ctx:
        raise DimensionMismatch(f"ideals live in different rings: {I.ctx} vs {J.ctx}")


def minimalize(gens: Iterable[Sequence[int]], ctx: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, tuple(tuple(g) for g in gens))


def member(I: MonomialIdeal, a) -> bool:
    a = I.ctx.check(a)
    return any(divides(g, a) for g in I.gens)


def contained(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J."""
    _same_ctx(I, J)
    return all(member(J, g) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    return MonomialIdeal(I.ctx, I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.ctx)
    if len(I.gens) * len(J.gens) <= _SMALL:
        sums = [tuple(x + y for x, y in zip(a, b)) for a in I.gens for b in J.gens]
        return MonomialIdeal(I.ctx, tuple(sums))
    sums = (I.array()[:, None, :] + J.array()[None, :, :]).reshape(-1, I.ctx.n)
    return MonomialIdeal(I.ctx, tuple(minimal_elements(sums)))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    result = MonomialIdeal.unit(I.ctx)
    for _ in range(k):
        result = product(result, I)
    return result


def powers(I: MonomialIdeal, k_max: int):
    """Yield (k, I^k) for k = 1..k_max, reusing the previous power."""
    cur = MonomialIdeal.unit(I.ctx)
    for k in range(1, k_max + 1):
        cur = product(cur, I)
        yield k, cur


def colon_monomial(I: MonomialIdeal, g) -> MonomialIdeal:
    """[I : x^g]."""
    g = I.ctx.check(g)
    return MonomialIdeal(I.ctx, tuple(tuple(max(m - c, 0) for m, c in zip(a, g)) for a in I.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ctx(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.ctx)
    lcms = [tuple(max(x, y) for x, y in zip(a, b)) for a in I.gens for b in J.gens]
    return MonomialIdeal(I.ctx, tuple(lcms))


def quotient(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """[I : J] = {f : fJ ⊆ I}."""
    _same_ctx(I, J)
    if J.is_zero():
        raise ZeroIdealError("quotient by the zero ideal")
    if I.is_zero():
        return I
    return _fold(intersect, (colon_monomial(I, g) for g in J.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero():
        raise ZeroIdealError("radical of the zero ideal")
    return MonomialIdeal(I.ctx, tuple(tuple(min(v, 1) for v in g) for g in I.gens))


def is_m_primary(I: MonomialIdeal) -> bool:
    """True iff every variable has a positive pure power among the generators."""
    found = set()
    for g in I.gens:
        support = [i for i, v in enumerate(g) if v]
        if len(support) == 1:
            found.add(support[0])
    return len(found) == I.ctx.n


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.ctx == J.ctx and I.gens == J.gens


def minimal_primes(I: MonomialIdeal) -> list:
    """Minimal monomial primes over I, each as a frozenset of variable indices."""
    if I.is_zero():
        return [frozenset()]
    supports = [frozenset(i for i, v in enumerate(g) if v) for g in I.gens]
    if any(not s for s in supports):
        return []
    # minimal transversals (vertex covers) of the support hypergraph
    covers = [frozenset()]
    for s in supports:
        nxt = set()
        for c in covers:
            if c & s:
                nxt.add(c)
            else:
                nxt.update(c | {i} for i in s)
        covers = [c for c in nxt if not any(o < c for o in nxt)]
    return sorted(covers, key=lambda c: (len(c), sorted(c)))
