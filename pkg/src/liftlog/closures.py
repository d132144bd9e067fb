"""Ratliff-Rush and integral closures of monomial ideals.

The Ratliff-Rush closure is the stable value of the colon ideals
[I^{n+1} : I^n]. The integral closure is read off the Newton polyhedron.
Each has an independent cross-check: the power identity I^m = Î^m for the
former, and the membership test x^{ka} ∈ I^k for the latter.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import NoStabilization, ZeroIdealError
from .monomial import MonomialIdeal, member, power, powers, quotient
from .newton import newton_polyhedron


@dataclass(frozen=True)
class RRReport:
    closure: MonomialIdeal
    stabilized_at: int
    checked_window: int
    power_check_passed: bool

    def to_json(self):
        return {
            "closure": [list(g) for g in self.closure.gens],
            "closure_text": str(self.closure),
            "stabilized_at": self.stabilized_at,
            "checked_window": self.checked_window,
            "power_check_passed": self.power_check_passed,
        }


def colon_sequence(I: MonomialIdeal, n_max: int):
    """Yield (n, [I^{n+1} : I^n]) for n = 1..n_max."""
    prev = I
    for n in range(1, n_max + 1):
        nxt = prev * I
        yield n, quotient(nxt, prev)
        prev = nxt


def _powers_agree(I, J, start, count=3):
    return all(power(I, m) == power(J, m) for m in range(start, start + count))


def rr_closure(I: MonomialIdeal, n_max: int = 20, window: int = 2) -> RRReport:
    """Ratliff-Rush closure by stabilizing colon iteration.

    Stops once ``window`` consecutive colon ideals agree and then confirms
    I^m = Î^m for three consecutive m. A plateau that fails the power check
    is skipped and the iteration continues.
    """
    if I.is_zero():
        raise ZeroIdealError("Ratliff-Rush closure of the zero ideal")
    if not n_max >= window >= 1:
        raise ValueError("need n_max >= window >= 1")
    run = []
    fallback = None
    for n, q in colon_sequence(I, n_max):
        if run and run[-1][1] == q:
            run.append((n, q))
        else:
            run = [(n, q)]
        if len(run) >= window:
            start = run[0][0]
            if _powers_agree(I, q, start):
                return RRReport(q, start, window, True)
            if fallback is None:
                fallback = RRReport(q, start, window, False)
            run = []
    if fallback is not None:
        return fallback
    raise NoStabilization(n_max, last=run[-1][1] if run else None)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Lattice points of NP(I) inside the generator box, minimalized."""
    if I.is_zero():
        raise ZeroIdealError("integral closure of the zero ideal")
    if I.is_unit():
        return I
    np_ = newton_polyhedron(I)
    box = I.max_exponents()
    pts = [a for a in itertools.product(*(range(m + 1) for m in box)) if np_.contains(a)]
    return MonomialIdeal(I.ctx, tuple(pts))


def default_oracle_k(I: MonomialIdeal) -> int:
    """n! * (max exponent) * 4, the advisory cap for the power oracle."""
    return math.factorial(I.ctx.n) * max(1, max(I.max_exponents())) * 4


def integral_member_oracle(I: MonomialIdeal, a, k_max: int) -> bool:
    """True iff x^{k a} ∈ I^k for some 1 <= k <= k_max (cross-check only)."""
    a = I.ctx.check(a)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    for k, Ik in powers(I, k_max):
        if member(Ik, tuple(k * v for v in a)):
            return True
    return False


def integral_members_oracle(I: MonomialIdeal, points, k_max: int) -> dict:
    """Batch form of the oracle: one pass over the powers for many points."""
    pts = sorted({I.ctx.check(a) for a in points})
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    found = dict.fromkeys(pts, False)
    pending = np.asarray(pts, dtype=np.int64).reshape(len(pts), I.ctx.n)
    for k, Ik in powers(I, k_max):
        if not len(pending) or Ik.is_zero():
            break
        hit = (Ik.array()[None, :, :] <= k * pending[:, None, :]).all(axis=2).any(axis=1)
        for a in pending[hit].tolist():
            found[tuple(a)] = True
        pending = pending[~hit]
    return found
