"""Alcoved polytopes: integer root-form bounds, plus the stock constructions.

An alcoved polytope is cut out by k_alpha <= (x, alpha) <= K_alpha with
integer bounds over a subset of the positive roots.  Only proper
(full-dimensional) polytopes are meaningful here, and boundedness is
enforced syntactically by requiring a finite bound pair on every simple
root; any root may additionally be bounded, the rest are unconstrained.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Mapping, Optional, Sequence

from .errors import PolytopeError
from .rootsys import Point, Rational, RootSystem, as_point, build, eval_form

Bounds = tuple[Optional[tuple[int, int]], ...]


@dataclass(frozen=True)
class AlcovedPolytope:
    rs: RootSystem = field(repr=False)
    bounds: Bounds = ()
    vertices: Optional[tuple[Point, ...]] = field(default=None, compare=False, repr=False)

    def contains_alcove(self, m_vector: Sequence[int]) -> bool:
        """Whether the alcove with this m vector lies inside the polytope."""
        for m, b in zip(m_vector, self.bounds):
            if b is not None and not (b[0] <= m and m + 1 <= b[1]):
                return False
        return True

    def contains_point(self, p: Sequence[Fraction], dilation: int = 1) -> bool:
        """Whether p lies in the dilation-fold dilate of the closed polytope."""
        for root, b in zip(self.rs.positive_roots, self.bounds):
            if b is None:
                continue
            v = eval_form(root, p)
            if not (dilation * b[0] <= v <= dilation * b[1]):
                return False
        return True

    def simple_root_box(self) -> tuple[tuple[int, int], ...]:
        """The bound pairs of the simple roots, i.e. coordinate ranges in omega coordinates."""
        out = []
        for i in self.rs.simple_root_indices:
            b = self.bounds[i]
            assert b is not None, "simple roots are always bounded"
            out.append(b)
        return tuple(out)


def from_bounds(rs: RootSystem, bounds: Mapping[tuple[int, ...], tuple[int, int]]) -> AlcovedPolytope:
    """Build a polytope from a map of root coefficient vectors to (min, max) bounds."""
    per_root: list[Optional[tuple[int, int]]] = [None] * len(rs.positive_roots)
    for c, pair in bounds.items():
        c = tuple(int(x) for x in c)
        idx = rs.root_index_by_c.get(c)
        if idx is None:
            raise PolytopeError(f"unknown root coefficients {c} for {rs.family}{rs.rank}")
        lo, hi = int(pair[0]), int(pair[1])
        if lo >= hi:
            raise PolytopeError(
                f"empty or lower-dimensional: bound [{lo}, {hi}] on root c={c}"
            )
        per_root[idx] = (lo, hi)
    missing = [i for i in rs.simple_root_indices if per_root[i] is None]
    if missing:
        c = rs.positive_roots[missing[0]].c
        raise PolytopeError(f"possibly unbounded: no bound on simple root c={c}")
    return AlcovedPolytope(rs=rs, bounds=tuple(per_root))


def from_vertices(rs: RootSystem, points: Iterable[Iterable[Rational]]) -> AlcovedPolytope:
    """Tightest integer bounds around a vertex list given in omega coordinates.

    For a genuine alcoved polytope the facet bounds are attained at integer
    values, so flooring the minimum and ceiling the maximum of every root
    form recovers the halfspace description exactly.  A degenerate input
    (e.g. a single point) yields coinciding bounds and fails downstream when
    no alcove fits inside.
    """
    verts = tuple(as_point(p) for p in points)
    if not verts:
        raise PolytopeError("empty vertex list")
    if any(len(v) != rs.rank for v in verts):
        raise PolytopeError(f"vertices must have rank {rs.rank} omega coordinates")
    per_root = []
    for root in rs.positive_roots:
        vals = [eval_form(root, v) for v in verts]
        per_root.append((floor(min(vals)), ceil(max(vals))))
    return AlcovedPolytope(rs=rs, bounds=tuple(per_root), vertices=verts)


def fundamental_polytope(rs: RootSystem) -> AlcovedPolytope:
    """The closed fundamental alcove as a one-alcove polytope."""
    from .alcove import fundamental_alcove

    return from_vertices(rs, fundamental_alcove(rs).vertices)


def hypersimplex(k: int, n: int) -> AlcovedPolytope:
    """The hypersimplex Delta_{k,n} as a rank n-1 type A polytope.

    Delta_{k,n} is the convex hull of the 0/1 vectors of length n with
    coordinate sum k.  Passing to partial-sum differences kills the ambient
    sum constraint: the omega coordinates of a vertex are simply its first
    n-1 entries.
    """
    if not (n >= 3 and 1 <= k <= n - 1):
        raise PolytopeError(f"hypersimplex requires n >= 3 and 1 <= k <= n-1, got k={k}, n={n}")
    rs = build("A", n - 1)
    verts = []
    for ones in itertools.combinations(range(n), k):
        x = [0] * n
        for i in ones:
            x[i] = 1
        verts.append(tuple(x[:-1]))
    return from_vertices(rs, sorted(set(verts)))


def hypercube(n: int) -> AlcovedPolytope:
    """The unit cube [0,1]^n in partial-sum coordinates, a rank n type A polytope."""
    if n < 2:
        raise PolytopeError(f"hypercube requires n >= 2, got n={n}")
    rs = build("A", n)
    return from_vertices(rs, itertools.product((0, 1), repeat=n))
