"""Alcoves of the affine Coxeter arrangement and the exact point-location walk.

An alcove is an open simplex cut out by m_alpha < (x, alpha) < m_alpha + 1
over all positive roots alpha.  It is stored by its n+1 typed vertices
(index in the vertex tuple = type) plus the integer vector (m_alpha), which
is the canonical key: two alcoves are equal iff their m vectors agree.
Vertex types are the classical Coxeter complex types, transported from the
fundamental alcove where the type-i vertex is e_i / a_i and type 0 is the
origin.  A type-i vertex always lies in (1/l_i) Z^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import PointOnWallError
from .rootsys import Point, PosRoot, Rational, RootSystem, as_point, eval_form, reflect


@dataclass(frozen=True)
class FacetSupport:
    """The wall (root, level) carrying an alcove facet, and the vertex type it faces."""

    root_index: int
    level: int
    opposite_type: int


@dataclass(frozen=True)
class Alcove:
    rs: RootSystem = field(compare=False, repr=False)
    vertices: tuple[Point, ...] = field(compare=False)
    m_vector: tuple[int, ...] = ()

    def vertex(self, vertex_type: int) -> Point:
        return self.vertices[vertex_type]

    def __repr__(self) -> str:
        return f"Alcove(m={','.join(map(str, self.m_vector))})"


def barycenter(vertices: Sequence[Point]) -> Point:
    n = len(vertices)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*vertices))


def m_from_vertices(rs: RootSystem, vertices: Sequence[Point]) -> tuple[int, ...]:
    """Recover the m vector from the floors of the root forms at the barycenter.

    The barycenter is interior, so no form is an integer there and the floor
    is unambiguous.
    """
    b = barycenter(vertices)
    return tuple(math.floor(eval_form(root, b)) for root in rs.positive_roots)


def _alcove(rs: RootSystem, vertices: tuple[Point, ...]) -> Alcove:
    return Alcove(rs=rs, vertices=vertices, m_vector=m_from_vertices(rs, vertices))


def fundamental_alcove(rs: RootSystem) -> Alcove:
    """The alcove with 0 < (x, alpha) < 1 for every positive root."""
    n = rs.rank
    zero = tuple(Fraction(0) for _ in range(n))
    verts = [zero]
    for i in range(n):
        verts.append(tuple(Fraction(1, rs.marks[i]) if j == i else Fraction(0) for j in range(n)))
    return _alcove(rs, tuple(verts))


def facet_support(a: Alcove, opposite_type: int) -> FacetSupport:
    """Find the unique wall containing the facet opposite the given vertex type.

    Scans all positive roots for one whose form is a constant integer on the
    n remaining vertices.  The root system is reduced, so no two positive
    roots are parallel and the match is unique.
    """
    rs = a.rs
    others = [v for t, v in enumerate(a.vertices) if t != opposite_type]
    for idx, root in enumerate(rs.positive_roots):
        k = eval_form(root, others[0])
        if k.denominator != 1:
            continue
        if all(eval_form(root, v) == k for v in others[1:]):
            assert eval_form(root, a.vertices[opposite_type]) != k, "degenerate alcove"
            return FacetSupport(root_index=idx, level=int(k), opposite_type=opposite_type)
    raise AssertionError("malformed alcove: facet has no supporting wall")


def facet_supports(a: Alcove) -> tuple[FacetSupport, ...]:
    """All n+1 facet supports of an alcove in one sweep over the positive roots.

    A root supports a facet exactly when its form takes one integer value on
    n of the vertices and a different value on the remaining one.
    """
    rs = a.rs
    n = rs.rank
    out: list[Optional[FacetSupport]] = [None] * (n + 1)
    found = 0
    for idx, root in enumerate(rs.positive_roots):
        vals = [eval_form(root, v) for v in a.vertices]
        counts: dict[Fraction, int] = {}
        for v in vals:
            counts[v] = counts.get(v, 0) + 1
        for k, mult in counts.items():
            if mult == n and k.denominator == 1:
                t = next(i for i, v in enumerate(vals) if v != k)
                assert out[t] is None, "two walls support one facet"
                out[t] = FacetSupport(root_index=idx, level=int(k), opposite_type=t)
                found += 1
        if found == n + 1:
            break
    assert found == n + 1, "malformed alcove: facet has no supporting wall"
    return tuple(out)  # type: ignore[arg-type]


def neighbor_m_vector(m_vector: Sequence[int], sup: FacetSupport) -> tuple[int, ...]:
    """m vector across a facet: only the supporting root's band shifts by one."""
    i = sup.root_index
    step = -1 if sup.level == m_vector[i] else 1
    return tuple(m + step if j == i else m for j, m in enumerate(m_vector))


def neighbor_across(a: Alcove, sup: FacetSupport) -> Alcove:
    """The alcove on the other side of a known facet of a.

    Only the opposite vertex moves (reflected in the wall, keeping its type)
    and only the supporting root's band in the m vector shifts.
    """
    root = a.rs.positive_roots[sup.root_index]
    t = sup.opposite_type
    moved = reflect(a.vertices[t], root, sup.level)
    verts = a.vertices[:t] + (moved,) + a.vertices[t + 1:]
    return Alcove(rs=a.rs, vertices=verts, m_vector=neighbor_m_vector(a.m_vector, sup))


def neighbor(a: Alcove, opposite_type: int) -> Alcove:
    """The alcove sharing the facet opposite the given vertex type.

    The shared vertices keep their types; the reflected vertex keeps type i.
    """
    return neighbor_across(a, facet_support(a, opposite_type))


def locate(rs: RootSystem, p: Iterable[Rational]) -> Alcove:
    """The alcove whose closure contains p, for p on no wall of the arrangement."""
    return locate_with_steps(rs, p)[0]


def locate_with_steps(rs: RootSystem, p: Iterable[Rational]) -> tuple[Alcove, int]:
    """locate() plus the number of walls crossed by the successful walk.

    Walks the straight segment from an interior point of the fundamental
    alcove to p, crossing one wall at a time with exact arithmetic.  If the
    segment hits a face of codimension >= 2 (two walls at the same parameter)
    the start point is re-weighted by powers of 1/3 and the walk restarted,
    at most rank + 2 times.
    """
    point = as_point(p)
    if len(point) != rs.rank:
        raise PointOnWallError(
            f"expected a point of rank {rs.rank}, got length {len(point)}"
        )
    for root in rs.positive_roots:
        if eval_form(root, point).denominator == 1:
            raise PointOnWallError(
                f"point on wall: (p, alpha) = {eval_form(root, point)} for root c={root.c}"
            )
    base = fundamental_alcove(rs)
    for attempt in range(rs.rank + 3):
        weights = [Fraction(1, 3 ** (i * attempt)) for i in range(rs.rank + 1)]
        total = sum(weights)
        q0 = tuple(
            sum((w * v[j] for w, v in zip(weights, base.vertices)), Fraction(0)) / total
            for j in range(rs.rank)
        )
        walked = _walk(rs, base, q0, point)
        if walked is not None:
            return walked
    raise PointOnWallError("walk start degenerate after all re-weightings; point may sit on a wall")


def _walk(rs: RootSystem, start: Alcove, q0: Point, p: Point) -> Optional[tuple[Alcove, int]]:
    """Cross walls along the segment q0 -> p; None if a codim >= 2 face is hit."""
    forms0 = [eval_form(root, q0) for root in rs.positive_roots]
    deltas = [eval_form(root, p) - f0 for root, f0 in zip(rs.positive_roots, forms0)]
    a = start
    t_cur = Fraction(0)
    steps = 0
    while True:
        best_t: Optional[Fraction] = None
        hits: list[tuple[int, int]] = []  # (root_index, crossed level)
        for idx, (f0, dv) in enumerate(zip(forms0, deltas)):
            if dv == 0:
                continue
            k = a.m_vector[idx] + 1 if dv > 0 else a.m_vector[idx]
            t_star = (k - f0) / dv
            if t_star <= t_cur or t_star >= 1:
                continue
            if best_t is None or t_star < best_t:
                best_t, hits = t_star, [(idx, k)]
            elif t_star == best_t:
                hits.append((idx, k))
        if best_t is None:
            return a, steps
        if len(hits) > 1:
            return None
        root_index, level = hits[0]
        a = neighbor_across(a, _crossed_facet(a, root_index, level))
        t_cur = best_t
        steps += 1


def _crossed_facet(a: Alcove, root_index: int, level: int) -> FacetSupport:
    for sup in facet_supports(a):
        if sup.root_index == root_index and sup.level == level:
            return sup
    raise AssertionError("crossed wall is not a facet of the current alcove")


def separating_wall_count(rs: RootSystem, p: Point, q: Point) -> int:
    """Number of arrangement walls strictly between two wall-free points."""
    count = 0
    for root in rs.positive_roots:
        count += abs(math.floor(eval_form(root, p)) - math.floor(eval_form(root, q)))
    return count
