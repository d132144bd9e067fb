"""Numerical semigroup rings Q[t^S], their ideals and derivation order sets.

Everything graded in Q[t^S] is a set of integers closed under adding S, and
such sets are cofinite above some threshold, so all the scans below stop.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NoStabilization, ZeroIdealError


def _minimal_semigroup_gens(gens):
    out = []
    for g in sorted(set(gens)):
        # g is redundant if it is a sum of smaller kept generators
        reach = {0}
        for s in range(1, g + 1):
            if any(s - k in reach for k in out if k <= s):
                reach.add(s)
        if g not in reach:
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple
    frobenius: int = field(init=False)
    _table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if not gens or any(g <= 0 for g in gens):
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise ValueError(f"generators {gens} have gcd > 1; not a numerical semigroup")
        gens = _minimal_semigroup_gens(gens)
        # reachable residues: the table is complete once min(gens) consecutive hits occur
        table = [True]
        run, m = 0, gens[0]
        while run < m:
            s = len(table)
            hit = any(s >= g and table[s - g] for g in gens)
            table.append(hit)
            run = run + 1 if hit else 0
        frob = max((s for s, v in enumerate(table) if not v), default=-1)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "frobenius", frob)
        object.__setattr__(self, "_table", tuple(table[:frob + 2]))

    @classmethod
    def naturals(cls):
        return cls((1,))

    @property
    def conductor(self):
        return self.frobenius + 1

    def __contains__(self, s):
        if s < 0:
            return False
        return s > self.frobenius or self._table[s]

    def elements_below(self, bound):
        return [s for s in range(bound) if s in self]

    def gaps(self):
        return [s for s in range(self.conductor) if s not in self]

    def __str__(self):
        return "⟨" + ",".join(map(str, self.generators)) + "⟩"


def _minimal_shifts(S, elems):
    elems = sorted(set(elems))
    kept = []
    for e in elems:
        if not any((e - k) in S for k in kept):
            kept.append(e)
    return tuple(kept)


@dataclass(frozen=True)
class SemigroupIdeal:
    """The S-closed set ∪ (e + S) over the generators e, stored minimally."""

    sgr: NumericalSemigroup
    gens: tuple = ()

    def __post_init__(self):
        gens = tuple(int(e) for e in self.gens)
        if any(e < 0 for e in gens):
            raise ValueError("ideal generators must be nonnegative")
        object.__setattr__(self, "gens", _minimal_shifts(self.sgr, gens))

    @classmethod
    def unit(cls, S):
        return cls(S, (0,))

    @classmethod
    def maximal(cls, S):
        return cls(S, S.generators)

    def is_zero(self):
        return not self.gens

    def __contains__(self, m):
        return any((m - e) in self.sgr for e in self.gens)

    @property
    def conductor(self):
        """Every integer >= this lies in the ideal."""
        if self.is_zero():
            raise ZeroIdealError("the zero ideal has no conductor")
        return min(e + self.sgr.conductor for e in self.gens)

    def elements_below(self, bound):
        return [m for m in range(bound) if m in self]

    def __add__(self, other):
        return sgr_sum(self, other)

    def __mul__(self, other):
        return sgr_product(self, other)

    def __pow__(self, k):
        return sgr_power(self, k)

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join("1" if e == 0 else ("t" if e == 1 else f"t^{e}") for e in self.gens) + ")"


def _same(E, F):
    if E.sgr != F.sgr:
        raise ValueError("ideals of different semigroups")


def sgr_sum(E, F):
    _same(E, F)
    return SemigroupIdeal(E.sgr, E.gens + F.gens)


def sgr_product(E, F):
    _same(E, F)
    return SemigroupIdeal(E.sgr, tuple(a + b for a in E.gens for b in F.gens))


def sgr_power(E, k):
    out = SemigroupIdeal.unit(E.sgr)
    for _ in range(k):
        out = sgr_product(out, E)
    return out


def sgr_quotient(E, F):
    """[E : F] = {s ∈ S : s + f ∈ E for every generator f of F}."""
    _same(E, F)
    if F.is_zero():
        raise ZeroIdealError("quotient by the zero ideal")
    if E.is_zero():
        return E
    # beyond E's conductor every s works
    bound = E.conductor
    found = [s for s in range(bound + 1) if s in E.sgr and all((s + f) in E for f in F.gens)]
    return SemigroupIdeal(E.sgr, tuple(found))


@dataclass(frozen=True)
class SemigroupRRReport:
    closure: SemigroupIdeal
    stabilized_at: int
    checked_window: int
    power_check_passed: bool


def sgr_rr_report(E, n_max=20, window=2) -> SemigroupRRReport:
    if E.is_zero():
        raise ZeroIdealError("Ratliff-Rush closure of the zero ideal")
    prev = E
    run = []
    fallback = None
    for n in range(1, n_max + 1):
        nxt = sgr_product(prev, E)
        q = sgr_quotient(nxt, prev)
        prev = nxt
        run = run + [(n, q)] if run and run[-1][1] == q else [(n, q)]
        if len(run) >= window:
            start = run[0][0]
            if all(sgr_power(E, m) == sgr_power(q, m) for m in range(start, start + 3)):
                return SemigroupRRReport(q, start, window, True)
            fallback = fallback or SemigroupRRReport(q, start, window, False)
            run = []
    if fallback is not None:
        return fallback
    raise NoStabilization(n_max, last=run[-1][1] if run else None)


def sgr_rr_closure(E, n_max=20, window=2) -> SemigroupIdeal:
    return sgr_rr_report(E, n_max, window).closure


@dataclass(frozen=True)
class OrderSet:
    """Orders k of the derivations t^k ∂_t in a module, closed under adding S.

    ``gens`` is the minimal generating set; ``threshold`` is the first integer
    from which every order belongs; ``exceptions`` are the members below it.
    """

    sgr: NumericalSemigroup
    gens: tuple

    def __post_init__(self):
        object.__setattr__(self, "gens", _minimal_shifts(self.sgr, self.gens))

    def __contains__(self, k):
        return any((k - g) in self.sgr for g in self.gens)

    @property
    def threshold(self):
        if not self.gens:
            return None
        t = min(g + self.sgr.conductor for g in self.gens)
        while t - 1 >= 0 and (t - 1) in self:
            t -= 1
        return t

    @property
    def exceptions(self):
        t = self.threshold
        return [] if t is None else [k for k in range(t) if k in self]

    def min_order(self):
        return min(self.gens) if self.gens else None

    def module_str(self):
        if not self.gens:
            return "0"
        term = lambda k: "∂t" if k == 0 else ("t∂t" if k == 1 else f"t^{k}∂t")
        return " + ".join(f"R·{term(k)}" for k in self.gens)

    def to_json(self):
        return {"generators": list(self.gens), "threshold": self.threshold, "exceptions": self.exceptions}


def sgr_tangent(E: SemigroupIdeal) -> OrderSet:
    """Orders k with t^k ∂_t preserving both Q[t^S] and the ideal E.

    t^k ∂_t sends t^s to s·t^(s+k-1); in characteristic 0 the coefficient
    vanishes only for s = 0, which imposes nothing.
    """
    if E.is_zero():
        raise ZeroIdealError("tangent set of the zero ideal")
    S = E.sgr
    # once k - 1 >= both conductors every condition holds
    bound = max(S.conductor, E.conductor) + 1
    ks = [k for k in range(bound + 1)
          if all((s + k - 1) in S for s in S.generators)
          and all((e + k - 1) in E for e in E.gens if e)]
    return OrderSet(S, tuple(ks))


def sgr_tangent_ring(S: NumericalSemigroup) -> OrderSet:
    return sgr_tangent(SemigroupIdeal.unit(S))


def sgr_is_regular(S: NumericalSemigroup) -> bool:
    return 1 in S
