"""Brute-force lattice point counting, used to verify the shelling pipeline.

Counting enumerates the integer box spanned by the simple-root bounds (in
omega coordinates the simple-root forms are the coordinates) and filters by
the remaining root bounds, all in exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polytope import AlcovedPolytope
from .rootsys import RootSystem
from .series import expand
from .shelling import Seed, dual_graph, ehrhart_series, half_open_decomposition


@dataclass(frozen=True)
class CountRow:
    t: int
    oracle: int
    series: int

    @property
    def ok(self) -> bool:
        return self.oracle == self.series


@dataclass(frozen=True)
class CountReport:
    rows: tuple[CountRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def __str__(self) -> str:
        lines = [f"{'t':>4} {'oracle':>10} {'series':>10}  match"]
        for r in self.rows:
            lines.append(f"{r.t:>4} {r.oracle:>10} {r.series:>10}  {'yes' if r.ok else 'NO'}")
        return "\n".join(lines)


def lattice_points(P: AlcovedPolytope, t: int) -> Iterable[tuple[int, ...]]:
    """Integer points of the t-fold dilate, via the simple-root coordinate box."""
    if t < 0:
        raise ValueError(f"dilation must be >= 0, got {t}")
    box = [range(t * lo, t * hi + 1) for lo, hi in P.simple_root_box()]
    # Simple-root bounds are enforced by the box itself; check only the rest.
    extra = [
        (root.c, b[0], b[1])
        for i, (root, b) in enumerate(zip(P.rs.positive_roots, P.bounds))
        if b is not None and i not in P.rs.simple_root_indices
    ]
    for x in itertools.product(*box):
        for c, lo, hi in extra:
            v = sum(ci * xi for ci, xi in zip(c, x))
            if v < t * lo or v > t * hi:
                break
        else:
            yield x


def count_points(P: AlcovedPolytope, t: int) -> int:
    """Number of lattice points in the t-fold dilate of P."""
    return sum(1 for _ in lattice_points(P, t))


def count_half_open_fundamental(rs: RootSystem, removed_types: Iterable[int], t: int) -> int:
    """Lattice points of the t-dilated fundamental alcove minus the facets
    opposite the listed vertex types.

    The closed dilate is x >= 0 with (x, theta) <= t; the facet opposite type
    0 lies on (x, theta) = t and the facet opposite type i >= 1 on x_i = 0.
    """
    removed = set(removed_types)
    theta_c = rs.theta.c
    n = rs.rank
    count = 0
    for x in itertools.product(range(t + 1), repeat=n):
        s = sum(c * xi for c, xi in zip(theta_c, x))
        if s > t:
            continue
        if 0 in removed and s == t:
            continue
        if any(x[i - 1] == 0 for i in removed if i >= 1):
            continue
        count += 1
    return count


def verify(P: AlcovedPolytope, T: int, seed: Seed = None) -> CountReport:
    """Compare brute-force counts with the shelling series for t = 0 .. T."""
    series = ehrhart_series(P, seed=seed)
    coeffs = expand(series, T)
    rows = tuple(CountRow(t=t, oracle=count_points(P, t), series=coeffs[t]) for t in range(T + 1))
    return CountReport(rows=rows)


def partition_check(P: AlcovedPolytope, t: int, seed: Seed = None) -> bool:
    """Check that the half-open alcoves tile the t-fold dilate exactly.

    Every lattice point of t*P must lie in the closure of at least one alcove
    of the dual graph and in exactly one alcove once each node drops the
    facets shared with its covers.
    """
    g = dual_graph(P, seed=seed)
    removed = half_open_decomposition(g)
    roots = P.rs.positive_roots
    for x in lattice_points(P, t):
        forms = [sum(ci * xi for ci, xi in zip(root.c, x)) for root in roots]
        closed = 0
        half_open = 0
        for a, drops in zip(g.nodes, removed):
            if any(not (t * m <= f <= t * (m + 1)) for m, f in zip(a.m_vector, forms)):
                continue
            closed += 1
            if all(forms[d.root_index] != t * d.level for d in drops):
                half_open += 1
        if closed == 0 or half_open != 1:
            return False
    return True
