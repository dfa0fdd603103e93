"""Decorated ordered set partitions and the hypersimplex cover-label conjecture.

A decorated ordered set partition of type (k, n) is a cyclic sequence of
disjoint nonempty blocks covering {1..n}, each block S_i carrying an integer
decoration s_i >= 1 with sum k.  It is hypersimplicial when s_i <= |S_i| - 1
for every block.  Canonical form rotates the block containing 1 to the
front; equality and hashing use that form.

Place the blocks clockwise on a circle, with s_i the clockwise distance
from block i to block i+1.  The winding vector (l_1 .. l_n) records the
clockwise distance from the block containing i to the block containing i+1
(indices mod n); its total is k times the winding number.

Interior walls of the hypersimplex Delta_{2,n} are the hyperplanes
y_j - y_i = 1 with i not adjacent to j mod n (partial-sum coordinates,
y_0 = 0).  Such a wall is labeled by the two-block partition
{{i, .., j-1}, {j, .., i-1}} taken cyclically with 0 read as n, decorated
(1, 1).  The psi image of a set of such labels is the two-block partition
generated by the iterated symmetric difference of one block from each.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .alcove import FacetSupport
from .errors import PolytopeError, WallLabelError
from .polytope import AlcovedPolytope, hypersimplex
from .rootsys import RootSystem
from .shelling import DualGraph, bfs_weights, dual_graph, half_open_decomposition


@dataclass(frozen=True)
class DOSP:
    blocks: tuple[tuple[int, ...], ...]
    decorations: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return sum(self.decorations)

    @property
    def is_hypersimplicial(self) -> bool:
        return all(1 <= s <= len(b) - 1 for b, s in zip(self.blocks, self.decorations))

    def __str__(self) -> str:
        parts = [
            "{" + ",".join(map(str, b)) + "}_" + str(s)
            for b, s in zip(self.blocks, self.decorations)
        ]
        return "(" + " ".join(parts) + ")"


def dosp(blocks: Iterable[Iterable[int]], decorations: Iterable[int]) -> DOSP:
    """Build a DOSP in canonical form (block containing 1 first, blocks sorted inside)."""
    blks = [tuple(sorted(set(b))) for b in blocks]
    decs = [int(s) for s in decorations]
    if len(blks) != len(decs):
        raise ValueError("one decoration per block required")
    if not blks or any(not b for b in blks):
        raise ValueError("blocks must be nonempty")
    if any(s < 1 for s in decs):
        raise ValueError("decorations must be >= 1")
    seen: set[int] = set()
    for b in blks:
        if seen & set(b):
            raise ValueError(f"blocks are not disjoint at {sorted(seen & set(b))}")
        seen |= set(b)
    n = len(seen)
    if seen != set(range(1, n + 1)):
        raise ValueError(f"blocks must cover 1..{n} exactly, got {sorted(seen)}")
    first = next(i for i, b in enumerate(blks) if 1 in b)
    order = list(range(first, len(blks))) + list(range(first))
    return DOSP(
        blocks=tuple(blks[i] for i in order),
        decorations=tuple(decs[i] for i in order),
    )


@dataclass(frozen=True)
class WindingData:
    vector: tuple[int, ...]
    number: int


def winding(p: DOSP) -> WindingData:
    """Winding vector and winding number of a DOSP."""
    k = p.k
    block_of = {x: i for i, b in enumerate(p.blocks) for x in b}
    cum = [0]
    for s in p.decorations[:-1]:
        cum.append(cum[-1] + s)
    n = p.n
    vec = []
    for i in range(1, n + 1):
        a = block_of[i]
        b = block_of[i % n + 1]
        vec.append((cum[b] - cum[a]) % k if a != b else 0)
    total = sum(vec)
    assert total % k == 0, "winding total must be divisible by k"
    return WindingData(vector=tuple(vec), number=total // k)


def enumerate_dosps(k: int, n: int, hypersimplicial_only: bool = True) -> list[DOSP]:
    """All type-(k, n) DOSPs up to cyclic rotation, in canonical form.

    Enumeration fixes the block containing 1 first, so each rotation class
    appears exactly once.  Guarded to n <= 10.
    """
    if not (3 <= n <= 10 and 1 <= k <= n - 1):
        raise ValueError(f"enumerate_dosps requires 3 <= n <= 10 and 1 <= k <= n-1, got k={k}, n={n}")
    min_size = 2 if hypersimplicial_only else 1
    out = []
    rest = tuple(range(2, n + 1))
    for p in range(1, k + 1):
        for blocks in _ordered_partitions_first1(rest, p, min_size):
            for decs in _compositions(k, p):
                cand = DOSP(blocks=blocks, decorations=decs)
                if hypersimplicial_only and not cand.is_hypersimplicial:
                    continue
                out.append(cand)
    return out


def _ordered_partitions_first1(
    rest: tuple[int, ...], p: int, min_size: int
) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Ordered partitions of {1} | rest into p blocks with 1 in the first block."""
    for first_extra in _subsets(rest, min_size - 1):
        first = (1,) + first_extra
        remaining = tuple(x for x in rest if x not in first_extra)
        for tail in _ordered_partitions(remaining, p - 1, min_size):
            yield (first,) + tail


def _ordered_partitions(
    items: tuple[int, ...], p: int, min_size: int
) -> Iterable[tuple[tuple[int, ...], ...]]:
    if p == 0:
        if not items:
            yield ()
        return
    if len(items) < p * min_size:
        return
    # Anchor each block at the smallest remaining element; ordering of the
    # blocks is then chosen by which anchor goes in which position, so iterate
    # over the block that takes items[0] and recurse.
    smallest = items[0]
    others = items[1:]
    for extra in _subsets(others, min_size - 1):
        block = (smallest,) + extra
        remaining = tuple(x for x in others if x not in extra)
        for tail in _ordered_partitions(remaining, p - 1, min_size):
            for pos in range(p):
                yield tail[:pos] + (block,) + tail[pos:]


def _subsets(items: tuple[int, ...], at_least: int) -> Iterable[tuple[int, ...]]:
    for r in range(at_least, len(items) + 1):
        yield from itertools.combinations(items, r)


def _compositions(k: int, p: int) -> Iterable[tuple[int, ...]]:
    if p == 1:
        yield (k,)
        return
    for first in range(1, k - p + 2):
        for tail in _compositions(k - first, p - 1):
            yield (first,) + tail


def psi(inputs: Sequence[DOSP], n: Optional[int] = None) -> DOSP:
    """Iterated symmetric difference of two-block (1,1)-decorated partitions.

    The result is the two-block partition {D, complement} with decorations
    (1, 1) where D is the symmetric difference of one block from each input
    (choice of representatives only swaps the pair).  An empty or full D
    collapses to the one-block partition decorated 2.  The output may fail
    to be hypersimplicial (a singleton block); it is returned as is.
    """
    items = list(inputs)
    if not items:
        if n is None:
            raise ValueError("psi of an empty list needs an explicit n")
        return dosp([range(1, n + 1)], [2])
    for p in items:
        if len(p.blocks) != 2 or p.decorations != (1, 1):
            raise ValueError(f"psi inputs must be two-block partitions decorated (1,1), got {p}")
        if n is not None and p.n != n:
            raise ValueError(f"psi inputs must all have n={n}, got {p}")
    n = items[0].n
    if any(p.n != n for p in items):
        raise ValueError("psi inputs must share the same ground set")
    acc: set[int] = set()
    for p in items:
        acc ^= set(p.blocks[0])
    if not acc or len(acc) == n:
        return dosp([range(1, n + 1)], [2])
    comp = set(range(1, n + 1)) - acc
    return dosp([acc, comp], [1, 1])


def facet_label(rs: RootSystem, facet: FacetSupport) -> DOSP:
    """Block label of an interior wall of Delta_{2,n} for the type A_{n-1} system rs.

    The wall must sit at level 1 on a root y_j - y_i with i, j non-adjacent
    mod n; its label is {{i, .., j-1}, {j, .., i-1}} with 0 read as n.
    """
    if rs.family != "A":
        raise WallLabelError(f"hypersimplex walls live in type A, got {rs.family}{rs.rank}")
    n = rs.rank + 1
    root = rs.positive_roots[facet.root_index]
    ones = [idx for idx, ci in enumerate(root.c) if ci == 1]
    if any(ci not in (0, 1) for ci in root.c) or ones != list(range(ones[0], ones[-1] + 1)):
        raise WallLabelError(f"root c={root.c} is not an interval form")
    i, j = ones[0], ones[-1] + 1
    if facet.level != 1:
        raise WallLabelError(
            f"not an interior hypersimplex wall: level {facet.level} on root c={root.c}"
        )
    if (i - j) % n in (1, n - 1):
        raise WallLabelError(f"not an interior hypersimplex wall: boundary root c={root.c}")
    block1 = [x if x >= 1 else n for x in range(i, j)]
    block2 = [(x - 1) % n + 1 for x in range(j, i + n)]
    return dosp([block1, block2], [1, 1])


@lru_cache(maxsize=None)
def _cached_graph(n: int) -> DualGraph:
    return dual_graph(hypersimplex(2, n))


def _interior_labels(g: DualGraph) -> list[set[DOSP]]:
    labels: list[set[DOSP]] = [set() for _ in g.nodes]
    for e in g.edges:
        lab = facet_label(g.polytope.rs, e.facet)
        labels[e.u].add(lab)
        labels[e.v].add(lab)
    return labels


def adjacent(p1: DOSP, p2: DOSP, n: int) -> bool:
    """Whether two interior-wall labels occur on facets of a common alcove of Delta_{2,n}."""
    labels = _interior_labels(_cached_graph(n))
    return any(p1 in ls and p2 in ls for ls in labels)


@dataclass(frozen=True)
class ConjectureFailure:
    node: int
    m_vector: tuple[int, ...]
    cover_count: int
    cover_labels: tuple[str, ...]
    image: str
    reason: str
    colliding_node: Optional[int] = None


@dataclass(frozen=True)
class RootReport:
    root: int
    root_m_vector: tuple[int, ...]
    cover_histogram: dict[int, int] = field(compare=False)
    dosp_histogram: dict[int, int] = field(compare=False)
    failures: tuple[ConjectureFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures and self.cover_histogram == self.dosp_histogram


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    per_root: tuple[RootReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.per_root)

    def summary(self) -> str:
        good = sum(1 for r in self.per_root if r.ok)
        hist = self.per_root[0].dosp_histogram
        shape = "/".join(str(hist[d]) for d in sorted(hist))
        status = "bijection holds" if good == len(self.per_root) else "bijection FAILS"
        return f"{good}/{len(self.per_root)} roots: {status}; histogram {shape}"


def node_psi_labels(g: DualGraph) -> list[DOSP]:
    """psi image of the cover facet labels of every node of a Delta_{2,n} graph."""
    rs = g.polytope.rs
    n = rs.rank + 1
    decomposition = half_open_decomposition(g)
    return [
        psi([facet_label(rs, f) for f in facets], n=n) for facets in decomposition
    ]


def check_conjecture(n: int, roots: Union[str, Sequence[int]] = "all") -> ConjectureReport:
    """Test, root by root, that psi of the cover labels is a winding-graded bijection.

    For each requested root alcove of Delta_{2,n} the BFS is re-rooted there,
    every node v is mapped to psi(labels of its cover facets), and the map
    restricted to nodes with d covers must biject onto the hypersimplicial
    type-(2,n) DOSPs of winding number d.  Root indices refer to the node
    order of the default-seed graph.
    """
    if not (4 <= n <= 9):
        raise PolytopeError(f"conjecture check supports 4 <= n <= 9, got n={n}")
    base = _cached_graph(n)
    if roots == "all":
        root_list = list(range(len(base.nodes)))
    else:
        root_list = [int(r) for r in roots]
        bad = [r for r in root_list if not 0 <= r < len(base.nodes)]
        if bad:
            raise PolytopeError(f"root index out of range: {bad[0]} (have {len(base.nodes)} alcoves)")
    targets: dict[int, set[DOSP]] = {}
    for p in enumerate_dosps(2, n, hypersimplicial_only=True):
        targets.setdefault(winding(p).number, set()).add(p)
    dosp_hist = {d: len(s) for d, s in sorted(targets.items())}
    reports = []
    for r in root_list:
        g = dual_graph(base.polytope, seed=base.nodes[r])
        reports.append(_check_one_root(g, r, base.nodes[r].m_vector, targets, dosp_hist))
    return ConjectureReport(n=n, per_root=tuple(reports))


def _check_one_root(
    g: DualGraph,
    root_id: int,
    root_m: tuple[int, ...],
    targets: dict[int, set[DOSP]],
    dosp_hist: dict[int, int],
) -> RootReport:
    labels = node_psi_labels(g)
    decomposition = half_open_decomposition(g)
    cover_hist: dict[int, int] = {}
    failures: list[ConjectureFailure] = []
    seen: dict[DOSP, int] = {}
    hit: dict[int, set[DOSP]] = {d: set() for d in targets}
    rs = g.polytope.rs
    for v, lab in enumerate(labels):
        d = len(g.covers[v])
        cover_hist[d] = cover_hist.get(d, 0) + 1
        cover_labels = tuple(str(facet_label(rs, f)) for f in decomposition[v])

        def fail(reason: str, collide: Optional[int] = None) -> None:
            failures.append(
                ConjectureFailure(
                    node=v,
                    m_vector=g.nodes[v].m_vector,
                    cover_count=d,
                    cover_labels=cover_labels,
                    image=str(lab),
                    reason=reason,
                    colliding_node=collide,
                )
            )

        if not lab.is_hypersimplicial:
            fail("psi image is not hypersimplicial")
            continue
        w = winding(lab).number
        if w != d:
            fail(f"winding number {w} differs from cover count {d}")
            continue
        if lab in seen:
            fail("psi image collides with an earlier node", collide=seen[lab])
            continue
        seen[lab] = v
        hit[d].add(lab)
    for d, want in targets.items():
        for missing in sorted(want - hit[d], key=str):
            failures.append(
                ConjectureFailure(
                    node=-1,
                    m_vector=(),
                    cover_count=d,
                    cover_labels=(),
                    image=str(missing),
                    reason="winding-{} DOSP not attained".format(d),
                )
            )
    return RootReport(
        root=root_id,
        root_m_vector=root_m,
        cover_histogram=dict(sorted(cover_hist.items())),
        dosp_histogram=dosp_hist,
        failures=tuple(failures),
    )
