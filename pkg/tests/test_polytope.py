"""Polytope constructions: bounds, vertex hulls, and the stock families."""

from fractions import Fraction

import pytest

from alcoved.errors import PolytopeError, SeedError
from alcoved.polytope import (
    from_bounds,
    from_vertices,
    fundamental_polytope,
    hypercube,
    hypersimplex,
)
from alcoved.rootsys import build, to_omega_coords
from alcoved.series import equals
from alcoved.shelling import dual_graph, ehrhart_series

SQUARE_BOUNDS = {(1, 0): (0, 1), (0, 1): (0, 1), (1, 1): (0, 2), (1, 2): (0, 2)}


def eulerian(m: int, j: int) -> int:
    # permutations of m elements with j descents
    if m == 0:
        return 1 if j == 0 else 0
    if j < 0 or j >= m:
        return 0
    return (j + 1) * eulerian(m - 1, j) + (m - j) * eulerian(m - 1, j - 1)


def test_from_bounds_square():
    rs = build("B", 2)
    P = from_bounds(rs, SQUARE_BOUNDS)
    assert P.bounds == ((0, 1), (0, 1), (0, 2), (0, 2))
    assert P.simple_root_box() == ((0, 1), (0, 1))
    assert P.vertices is None


def test_from_bounds_unknown_root():
    rs = build("B", 2)
    with pytest.raises(PolytopeError, match="unknown root coefficients"):
        from_bounds(rs, {(1, 0): (0, 1), (0, 1): (0, 1), (2, 1): (0, 1)})


def test_from_bounds_empty_interval():
    rs = build("B", 2)
    with pytest.raises(PolytopeError, match="empty or lower-dimensional"):
        from_bounds(rs, {(1, 0): (1, 1), (0, 1): (0, 1)})


def test_from_bounds_unbounded():
    rs = build("B", 2)
    with pytest.raises(PolytopeError, match="possibly unbounded"):
        from_bounds(rs, {(1, 2): (0, 2)})


def test_square_from_euclidean_vertices():
    # same quadrilateral, entered as a Euclidean vertex list
    rs = build("B", 2)
    eucl = [(0, 0), (1, 0), (Fraction(3, 2), Fraction(1, 2)), (1, 1)]
    P = from_vertices(rs, [to_omega_coords("B", 2, p) for p in eucl])
    assert P.bounds == from_bounds(rs, SQUARE_BOUNDS).bounds


def test_contains_alcove():
    P = from_bounds(build("B", 2), SQUARE_BOUNDS)
    assert P.contains_alcove((0, 0, 0, 0))
    assert P.contains_alcove((0, 0, 1, 1))
    assert not P.contains_alcove((0, 0, 0, 2))
    assert not P.contains_alcove((-1, 0, 0, 0))


def test_contains_point_dilated():
    P = from_bounds(build("B", 2), SQUARE_BOUNDS)
    assert P.contains_point((1, Fraction(1, 2)))
    assert not P.contains_point((1, 1))
    assert P.contains_point((2, 1), dilation=2)


def test_from_vertices_guards():
    rs = build("B", 2)
    with pytest.raises(PolytopeError, match="empty vertex list"):
        from_vertices(rs, [])
    with pytest.raises(PolytopeError, match="rank 2"):
        from_vertices(rs, [(0, 0, 0)])


def test_single_point_fails_downstream():
    P = from_vertices(build("B", 2), [(0, 0)])
    with pytest.raises(SeedError):
        dual_graph(P)


def test_fundamental_polytope_single_alcove():
    for family, rank in [("A", 2), ("B", 2), ("G", 2), ("B", 3)]:
        rs = build(family, rank)
        P = fundamental_polytope(rs)
        assert all(b == (0, 1) for b in P.bounds)
        assert len(dual_graph(P).nodes) == 1


@pytest.mark.parametrize("k,n,count", [(2, 5, 11), (2, 4, 4), (1, 5, 1), (3, 4, 1)])
def test_hypersimplex_alcove_counts(k, n, count):
    assert len(dual_graph(hypersimplex(k, n)).nodes) == count


def test_hypersimplex_eulerian_volumes():
    # normalized volume of the (k,n) hypersimplex counts permutations by descents
    for n in range(3, 8):
        for k in range(1, n):
            g = dual_graph(hypersimplex(k, n))
            assert len(g.nodes) == eulerian(n - 1, k - 1), (k, n)


def test_hypersimplex_complementation():
    for k, n in [(2, 5), (2, 6), (3, 7)]:
        s1 = ehrhart_series(hypersimplex(k, n))
        s2 = ehrhart_series(hypersimplex(n - k, n))
        assert equals(s1, s2)


def test_hypersimplex_guards():
    for k, n in [(0, 5), (5, 5), (2, 2), (-1, 4)]:
        with pytest.raises(PolytopeError, match="hypersimplex requires"):
            hypersimplex(k, n)


@pytest.mark.parametrize("n,count", [(2, 2), (3, 6), (4, 24)])
def test_hypercube_alcove_counts(n, count):
    assert len(dual_graph(hypercube(n)).nodes) == count


def test_hypercube_guard():
    with pytest.raises(PolytopeError, match="hypercube requires"):
        hypercube(1)


def test_from_vertices_idempotent_on_builtins():
    for P in [hypersimplex(2, 5), hypercube(3), fundamental_polytope(build("G", 2))]:
        Q = from_vertices(P.rs, P.vertices)
        assert Q.bounds == P.bounds
