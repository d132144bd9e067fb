"""Newton polyhedra of monomial ideals.

NP(I) = conv(exponents of I) + R^n_{>=0}. Only the facets with positive
right-hand side are stored; the coordinate inequalities a_i >= 0 are implicit.
Two-variable ideals use a staircase sweep, higher dimensions an exact
double-description (Motzkin) enumeration over the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroIdealError
from .monomial import MonomialIdeal, RingContext

DEFAULT_MAX_DIM = 5


def _primitive(v):
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    return tuple(int(x) // g for x in v) if g > 1 else tuple(int(x) for x in v)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class NewtonPolyhedron:
    ctx: RingContext
    facets: tuple  # of (w, d): w·a >= d

    def contains(self, a) -> bool:
        if any(v < 0 for v in a):
            return False
        return all(_dot(w, a) >= d for w, d in self.facets)

    def tight(self, a):
        """Facets on which ``a`` lies."""
        return [(w, d) for w, d in self.facets if _dot(w, a) == d]

    def __str__(self):
        rows = [f"{' + '.join(f'{c}*{x}' for c, x in zip(w, self.ctx.variable_names) if c)} >= {d}"
                for w, d in self.facets]
        return "; ".join(rows) if rows else "(no facets)"


def _lower_hull(points):
    """Lower-left convex chain of points sorted by x ascending."""
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it makes a strict left turn toward p
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _facets_2d(gens):
    pts = sorted(gens)  # minimal generators: x ascending means y descending
    facets = set()
    xmin = pts[0][0]
    ymin = min(p[1] for p in pts)
    if xmin > 0:
        facets.add(((1, 0), xmin))
    if ymin > 0:
        facets.add(((0, 1), ymin))
    hull = _lower_hull(pts)
    for p, q in zip(hull, hull[1:]):
        w = _primitive((p[1] - q[1], q[0] - p[0]))
        facets.add((w, _dot(w, p)))
    return facets


def _extreme_rays(constraints, dim):
    """Extreme rays of {x in Z^dim : r·x >= 0 for r in constraints}.

    The first ``dim`` constraints must be linearly independent.
    """
    from .linalg import inverse

    base = [list(r) for r in constraints[:dim]]
    inv = inverse(base)
    if inv is None:
        raise ValueError("initial constraints are not independent")
    rays = []
    for j in range(dim):
        col = [inv[i][j] for i in range(dim)]
        den = math.lcm(*[c.denominator for c in col])
        rays.append(_primitive([int(c * den) for c in col]))
    tight = [frozenset(i for i in range(dim) if _dot(constraints[i], r) == 0) for r in rays]
    for k in range(dim, len(constraints)):
        r = constraints[k]
        vals = [_dot(r, x) for x in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos + zero]
        new_tight = [tight[i] for i in pos] + [tight[i] | {k} for i in zero]
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < dim - 2:
                    continue
                if any(s != p and s != q and common <= tight[s] for s in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                x = _primitive([vp * b - vq * a for a, b in zip(rays[p], rays[q])])
                new_rays.append(x)
                new_tight.append(common | {k})
        rays, tight = new_rays, new_tight
    return rays


def _facets_dd(gens, n):
    # valid inequalities (w, delta) with w·a >= delta on NP form a cone whose
    # extreme rays with delta > 0 are exactly the non-coordinate facets
    dim = n + 1
    constraints = [tuple(int(i == j) for j in range(dim)) for i in range(n)]
    constraints += [tuple(g) + (-1,) for g in gens]
    facets = set()
    for ray in _extreme_rays(constraints, dim):
        w, delta = ray[:n], ray[n]
        if delta <= 0:
            continue
        w = _primitive(w)
        facets.add((w, min(_dot(w, g) for g in gens)))
    return facets


def newton_polyhedron(I: MonomialIdeal, max_dim: int = DEFAULT_MAX_DIM, method: str = "auto") -> NewtonPolyhedron:
    """Facets w·a >= d (d > 0, w primitive and nonnegative) of NP(I)."""
    if I.is_zero():
        raise ZeroIdealError("the zero ideal has no Newton polyhedron")
    n = I.ctx.n
    if n > max_dim:
        raise ValueError(f"facet enumeration capped at {max_dim} variables (got {n})")
    if method == "auto":
        method = {1: "dd", 2: "sweep"}.get(n, "dd")
    if method == "sweep":
        if n != 2:
            raise ValueError("the staircase sweep needs exactly two variables")
        facets = _facets_2d(I.gens)
    else:
        facets = _facets_dd(I.gens, n)
    return NewtonPolyhedron(I.ctx, tuple(sorted(facets, reverse=True)))
