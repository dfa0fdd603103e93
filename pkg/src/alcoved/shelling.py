"""Breadth-first shelling of the alcove triangulation and the Ehrhart series.

The dual graph of an alcoved polytope has one node per alcove inside it and
one edge per shared facet, weighted by l_t for the vertex type t opposite
the facet (the same from both sides, since shared vertices keep their
types).  Rooting a breadth-first search anywhere induces the shelling
partial order whose cover relations are the edges that drop the BFS
distance by one; the weight of a node is the total weight of its cover
edges, and

    Ehr(P, z) = sum_nodes z^wt(node) / prod_i (1 - z^(l_i)).

Node order is canonical: BFS level by level, each level sorted by m vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .alcove import (
    Alcove,
    FacetSupport,
    facet_supports,
    locate,
    neighbor_across,
    neighbor_m_vector,
)
from .errors import GraphLimitError, PointOnWallError, SeedError
from .polytope import AlcovedPolytope
from .rootsys import Fraction, Point, Rational, as_point, eval_form
from .series import RationalSeries, poly_trim

Seed = Union[Alcove, Iterable[Rational], None]


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: int
    facet: FacetSupport


@dataclass(frozen=True)
class DualGraph:
    polytope: AlcovedPolytope = field(repr=False)
    nodes: tuple[Alcove, ...] = ()
    edges: tuple[Edge, ...] = ()
    root: int = 0
    dist: tuple[int, ...] = ()
    covers: tuple[tuple[int, ...], ...] = ()

    def adjacency(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.nodes]
        for e in self.edges:
            out[e.u].append(e.v)
            out[e.v].append(e.u)
        return [sorted(nb) for nb in out]

    def node_index(self, m_vector: Sequence[int]) -> int:
        return {a.m_vector: i for i, a in enumerate(self.nodes)}[tuple(m_vector)]


def dual_graph(P: AlcovedPolytope, seed: Seed = None, max_alcoves: int = 10**6) -> DualGraph:
    """Enumerate the alcoves of P by BFS from a seed alcove and collect shared facets."""
    rs = P.rs
    start = _seed_alcove(P, seed)
    if not P.contains_alcove(start.m_vector):
        raise SeedError(f"seed outside the polytope: alcove m={start.m_vector}")

    nodes = [start]
    index = {start.m_vector: 0}
    dist = [0]
    sups_by_node: list[tuple[FacetSupport, ...]] = []
    frontier = [0]
    level = 0
    while frontier:
        level += 1
        discovered: dict[tuple[int, ...], tuple[int, FacetSupport]] = {}
        for u in frontier:
            sups = facet_supports(nodes[u])
            sups_by_node.append(sups)
            for sup in sups:
                m2 = neighbor_m_vector(nodes[u].m_vector, sup)
                if m2 in index or m2 in discovered:
                    continue
                if P.contains_alcove(m2):
                    discovered[m2] = (u, sup)
        frontier = []
        for m in sorted(discovered):
            u, sup = discovered[m]
            b = neighbor_across(nodes[u], sup)
            assert b.m_vector == m
            index[m] = len(nodes)
            nodes.append(b)
            dist.append(level)
            frontier.append(index[m])
        if len(nodes) > max_alcoves:
            raise GraphLimitError(f"polytope too large: more than {max_alcoves} alcoves")

    # Each shared facet is seen from both endpoints; the wall and the opposite
    # vertex type must agree from either side, so weight l_t is side-independent.
    pair_sup: dict[tuple[int, int], FacetSupport] = {}
    for u, sups in enumerate(sups_by_node):
        for sup in sups:
            v = index.get(neighbor_m_vector(nodes[u].m_vector, sup))
            if v is None:
                continue
            key = (min(u, v), max(u, v))
            prev = pair_sup.setdefault(key, sup)
            assert prev == sup, "facet support must agree from both sides"
    edges = [
        Edge(u=u, v=v, weight=rs.ell[sup.opposite_type], facet=sup)
        for (u, v), sup in sorted(pair_sup.items())
    ]

    below: list[list[int]] = [[] for _ in nodes]
    for e in edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if dist[a] == dist[b] - 1:
                below[b].append(a)
    return DualGraph(
        polytope=P,
        nodes=tuple(nodes),
        edges=tuple(edges),
        root=0,
        dist=tuple(dist),
        covers=tuple(tuple(sorted(xs)) for xs in below),
    )


def _seed_alcove(P: AlcovedPolytope, seed: Seed) -> Alcove:
    if isinstance(seed, Alcove):
        return seed
    if seed is not None:
        return locate(P.rs, as_point(seed))
    return _default_seed(P)


def _default_seed(P: AlcovedPolytope) -> Alcove:
    """Deterministic interior point: weighted average of the vertex list if the
    polytope was built from vertices, of the simple-root box corners otherwise.

    Wall collisions are retried with weights re-scaled by powers of 1/3.
    """
    rs = P.rs
    if P.vertices is not None:
        base = list(P.vertices)
    else:
        box = P.simple_root_box()
        base = [as_point(corner) for corner in _corners(box)]
    for attempt in range(rs.rank + 3):
        weights = [Fraction(1, 3 ** (i * attempt)) for i in range(len(base))]
        total = sum(weights)
        q = tuple(
            sum((w * v[j] for w, v in zip(weights, base)), Fraction(0)) / total
            for j in range(rs.rank)
        )
        if any(eval_form(root, q).denominator == 1 for root in rs.positive_roots):
            continue
        alcove = locate(rs, q)
        if P.contains_alcove(alcove.m_vector):
            return alcove
    raise SeedError("no alcove found inside the polytope; provide an explicit seed")


def _corners(box: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    corners: list[tuple[int, ...]] = [()]
    for lo, hi in box:
        corners = [c + (x,) for c in corners for x in (lo, hi)]
    return corners


def bfs_weights(g: DualGraph) -> tuple[int, ...]:
    """Per-node total weight of the cover edges (the shelling statistic)."""
    wt = [0] * len(g.nodes)
    for e in g.edges:
        if g.dist[e.u] == g.dist[e.v] - 1:
            wt[e.v] += e.weight
        elif g.dist[e.v] == g.dist[e.u] - 1:
            wt[e.u] += e.weight
    return tuple(wt)


def numerator(g: DualGraph) -> tuple[int, ...]:
    """The Ehrhart numerator sum_nodes z^wt(node) as polynomial coefficients."""
    wt = bfs_weights(g)
    coeffs = [0] * (max(wt) + 1)
    for w in wt:
        coeffs[w] += 1
    return poly_trim(coeffs)


def ehrhart_series(P: AlcovedPolytope, seed: Seed = None, max_alcoves: int = 10**6) -> RationalSeries:
    """Ehrhart series of P over the structural denominator prod (1 - z^(l_i))."""
    g = dual_graph(P, seed=seed, max_alcoves=max_alcoves)
    return RationalSeries(numerator(g), P.rs.ell)


def half_open_decomposition(g: DualGraph) -> tuple[tuple[FacetSupport, ...], ...]:
    """Per node, the facets shared with its covers; removing them from each
    closed alcove tiles the polytope with half-open simplices."""
    facet_of: dict[tuple[int, int], FacetSupport] = {}
    for e in g.edges:
        facet_of[(e.u, e.v)] = e.facet
        facet_of[(e.v, e.u)] = e.facet
    return tuple(
        tuple(facet_of[(u, v)] for u in g.covers[v]) for v in range(len(g.nodes))
    )


def to_dot(g: DualGraph, node_labels: Optional[Sequence[str]] = None) -> str:
    """Graphviz rendering of the dual graph with m-vector node labels and edge weights."""
    lines = ["graph alcoves {"]
    for i, a in enumerate(g.nodes):
        label = node_labels[i] if node_labels is not None else ",".join(map(str, a.m_vector))
        lines.append(f'  n{i} [label="{label}"];')
    for e in sorted(g.edges, key=lambda e: (e.u, e.v)):
        lines.append(f'  n{e.u} -- n{e.v} [label="{e.weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
