"""Alcove vertices, facet supports, neighbors, and the point-location walk."""

from fractions import Fraction

import pytest

from alcoved.alcove import (
    facet_support,
    facet_supports,
    fundamental_alcove,
    locate,
    locate_with_steps,
    m_from_vertices,
    neighbor,
    neighbor_across,
    separating_wall_count,
)
from alcoved.errors import PointOnWallError
from alcoved.rootsys import build, eval_form, to_omega_coords


def test_fundamental_alcove_b2():
    rs = build("B", 2)
    a = fundamental_alcove(rs)
    assert a.m_vector == (0, 0, 0, 0)
    assert a.vertices == ((0, 0), (1, 0), (0, Fraction(1, 2)))
    # agrees with the Euclidean picture
    eucl = [(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))]
    assert [to_omega_coords("B", 2, p) for p in eucl] == list(a.vertices)


def test_fundamental_alcove_g2():
    rs = build("G", 2)
    a = fundamental_alcove(rs)
    eucl = [(0, 0, 0), (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)),
            (Fraction(1, 2), 0, Fraction(-1, 2))]
    assert [to_omega_coords("G", 2, p) for p in eucl] == list(a.vertices)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("B", 3),
                                         ("C", 3), ("A", 3), ("D", 4), ("F", 4)])
def test_vertex_denominators_on_neighbor_ball(family, rank):
    # type-i vertices stay in (1/l_i) Z^n across several reflection steps
    rs = build(family, rank)
    depth = 6 if rank <= 2 else 3
    seen = {fundamental_alcove(rs).m_vector}
    frontier = [fundamental_alcove(rs)]
    for _ in range(depth):
        new = []
        for a in frontier:
            for t in range(rank + 1):
                b = neighbor(a, t)
                if b.m_vector in seen:
                    continue
                seen.add(b.m_vector)
                new.append(b)
        frontier = new
    count = 0
    for a in frontier:
        count += 1
        assert a.m_vector == m_from_vertices(rs, a.vertices)
        for t, v in enumerate(a.vertices):
            assert all((x * rs.ell[t]).denominator == 1 for x in v)
        for idx, root in enumerate(rs.positive_roots):
            for v in a.vertices:
                assert a.m_vector[idx] <= eval_form(root, v) <= a.m_vector[idx] + 1
    assert count > 0


def test_facet_support_b2_fundamental():
    rs = build("B", 2)
    a = fundamental_alcove(rs)
    sup = facet_support(a, 0)
    assert rs.positive_roots[sup.root_index].c == rs.theta.c
    assert sup.level == 1


def test_facet_supports_distinct_and_match_single_scan():
    for family, rank in [("B", 2), ("G", 2), ("B", 3)]:
        rs = build(family, rank)
        a = neighbor(neighbor(fundamental_alcove(rs), 0), 1)
        sups = facet_supports(a)
        assert sups == tuple(facet_support(a, t) for t in range(rank + 1))
        assert len({(s.root_index, s.level) for s in sups}) == rank + 1


def test_neighbor_across_theta_wall():
    rs = build("B", 2)
    b = neighbor(fundamental_alcove(rs), 0)
    assert b.vertices == ((0, 1), (1, 0), (0, Fraction(1, 2)))


def test_neighbor_involution_and_shared_vertices():
    for family, rank in [("B", 2), ("G", 2), ("B", 3)]:
        rs = build(family, rank)
        a = fundamental_alcove(rs)
        for t in range(rank + 1):
            b = neighbor(a, t)
            assert neighbor(b, t) == a
            for t2 in range(rank + 1):
                if t2 != t:
                    assert b.vertices[t2] == a.vertices[t2]
            assert b.vertices[t] != a.vertices[t]


def test_neighbor_m_matches_barycenter_floors():
    for family, rank in [("B", 2), ("G", 2), ("A", 3)]:
        rs = build(family, rank)
        a = fundamental_alcove(rs)
        for t in range(rank + 1):
            b = neighbor(a, t)
            assert b.m_vector == m_from_vertices(rs, b.vertices)
            for t2 in range(rank + 1):
                c = neighbor(b, t2)
                assert c.m_vector == m_from_vertices(rs, c.vertices)


def test_locate_barycenter_of_fundamental():
    for family, rank in [("B", 2), ("G", 2), ("B", 3)]:
        rs = build(family, rank)
        a = fundamental_alcove(rs)
        bary = tuple(sum(v[i] for v in a.vertices) / (rank + 1) for i in range(rank))
        assert locate(rs, bary) == a


def test_locate_b2_point():
    rs = build("B", 2)
    a = locate(rs, (Fraction(3, 5), Fraction(3, 10)))
    assert a.m_vector == (0, 0, 0, 1)


def test_locate_point_on_wall():
    rs = build("B", 2)
    with pytest.raises(PointOnWallError):
        locate(rs, (Fraction(1, 2), Fraction(1, 4)))


def test_locate_closure_contains_point():
    rs = build("G", 2)
    pts = [(Fraction(17, 5), Fraction(23, 7)), (Fraction(-8, 3), Fraction(11, 4)),
           (Fraction(1, 7), Fraction(2, 11))]
    for p in pts:
        a = locate(rs, p)
        for idx, root in enumerate(rs.positive_roots):
            assert a.m_vector[idx] <= eval_form(root, p) <= a.m_vector[idx] + 1


@pytest.mark.parametrize("family,rank", [("B", 2), ("G", 2), ("B", 3)])
def test_walk_length_is_separation_count(family, rank):
    rs = build(family, rank)
    a0 = fundamental_alcove(rs)
    bary0 = tuple(sum(v[i] for v in a0.vertices) / (rank + 1) for i in range(rank))
    pts = []
    for s in range(1, 5):
        pts.append(tuple(Fraction(3 * s + 2 * i + 1, 7 + i) for i in range(rank)))
        pts.append(tuple(Fraction(-2 * s + i, 5 + 2 * i) for i in range(rank)))
    for p in pts:
        try:
            a, steps = locate_with_steps(rs, p)
        except PointOnWallError:
            continue
        assert steps == separating_wall_count(rs, bary0, p)
