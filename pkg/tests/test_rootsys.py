"""Root system tables: Cartan matrices, positive roots, marks, forms."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alcoved.errors import UnsupportedTypeError
from alcoved.rootsys import (
    build,
    cartan_matrix,
    eval_form,
    reflect,
    to_omega_coords,
)

ROOT_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 4): 10, ("A", 7): 28,
    ("B", 2): 4, ("B", 3): 9, ("B", 8): 64,
    ("C", 2): 4, ("C", 3): 9, ("C", 8): 64,
    ("D", 4): 12, ("D", 8): 56,
    ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}

COXETER_NUMBERS = {
    ("A", 4): 5, ("B", 3): 6, ("C", 3): 6, ("D", 4): 6,
    ("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 12, ("G", 2): 6,
}


@pytest.mark.parametrize("family,rank", sorted(ROOT_COUNTS))
def test_positive_root_counts(family, rank):
    rs = build(family, rank)
    assert len(rs.positive_roots) == ROOT_COUNTS[(family, rank)]


@pytest.mark.parametrize("family,rank", sorted(ROOT_COUNTS))
def test_cartan_shape(family, rank):
    C = cartan_matrix(family, rank)
    for i in range(rank):
        assert C[i][i] == 2
        for j in range(rank):
            if i != j:
                assert C[i][j] <= 0


def test_g2_cartan_pinned():
    assert cartan_matrix("G", 2) == ((2, -1), (-3, 2))


def test_unsupported_types():
    for family, rank in [("A", 0), ("B", 1), ("D", 3), ("E", 9), ("E", 5),
                         ("F", 3), ("G", 3), ("H", 2)]:
        with pytest.raises(UnsupportedTypeError):
            build(family, rank)


@pytest.mark.parametrize("family,rank", sorted(ROOT_COUNTS))
def test_pairing_and_positivity(family, rank):
    rs = build(family, rank)
    for root in rs.positive_roots:
        assert sum(c * d for c, d in zip(root.c, root.d)) == 2
        assert all(c >= 0 for c in root.c)
    # exactly one root of height 1 per simple index
    simples = [r.c for r in rs.positive_roots if r.height == 1]
    assert sorted(simples) == sorted(
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
    )


@pytest.mark.parametrize("family,rank", sorted(ROOT_COUNTS))
def test_highest_root_and_marks(family, rank):
    rs = build(family, rank)
    heights = [r.height for r in rs.positive_roots]
    assert heights.count(max(heights)) == 1
    assert rs.theta.height == max(heights)
    assert rs.theta.c == rs.marks
    assert rs.ell == (1,) + rs.marks
    assert rs.coxeter_number == 1 + sum(rs.marks)


@pytest.mark.parametrize("family,rank", sorted(COXETER_NUMBERS))
def test_coxeter_numbers_match_classical_table(family, rank):
    assert build(family, rank).coxeter_number == COXETER_NUMBERS[(family, rank)]


def test_b3_marks_and_denominators():
    rs = build("B", 3)
    assert rs.marks == (1, 2, 2)
    assert rs.ell == (1, 1, 2, 2)


def test_g2_denominator_multiset():
    rs = build("G", 2)
    assert len(rs.positive_roots) == 6
    assert sorted(rs.ell) == [1, 2, 3]


def test_a4_all_marks_one():
    rs = build("A", 4)
    assert len(rs.positive_roots) == 10
    assert rs.marks == (1, 1, 1, 1)
    assert rs.ell == (1, 1, 1, 1, 1)


def test_b2_root_order():
    # canonical order: height, then descending lex on c
    rs = build("B", 2)
    assert [r.c for r in rs.positive_roots] == [(1, 0), (0, 1), (1, 1), (1, 2)]


def test_eval_form_b2_theta():
    rs = build("B", 2)
    assert eval_form(rs.theta, (0, 0)) == 0
    assert eval_form(rs.theta, (0, Fraction(1, 2))) == 1


def test_eval_form_b3_long_root():
    rs = build("B", 3)
    root = rs.positive_roots[rs.root_index_by_c[(1, 2, 2)]]
    x = to_omega_coords("B", 3, (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)))
    assert x == (1, 0, Fraction(1, 2))
    assert eval_form(root, x) == 2


def test_reflect_fixes_hyperplane():
    rs = build("B", 2)
    alpha2 = rs.positive_roots[1]
    p = (Fraction(3), Fraction(0))  # c=(0,1) form vanishes
    assert reflect(p, alpha2, 0) == p


def test_reflect_b2_alpha2():
    rs = build("B", 2)
    alpha2 = rs.positive_roots[1]
    assert alpha2.c == (0, 1)
    assert alpha2.d == (-2, 2)
    assert reflect((-1, 1), alpha2, 0) == (1, -1)


@given(st.tuples(st.fractions(max_denominator=40), st.fractions(max_denominator=40)),
       st.integers(min_value=0, max_value=3), st.integers(min_value=-2, max_value=2))
def test_reflect_involution(p, idx, level):
    rs = build("B", 2)
    root = rs.positive_roots[idx]
    assert reflect(reflect(p, root, level), root, level) == p


@pytest.mark.parametrize("family,rank", [("B", 3), ("G", 2), ("C", 3), ("D", 4)])
def test_reflect_preserves_lattice(family, rank):
    rs = build(family, rank)
    pts = [tuple((i * 7 + j * 3 + 1) % 5 - 2 for j in range(rank)) for i in range(4)]
    for root in rs.positive_roots:
        for p in pts:
            for level in (-1, 0, 2):
                q = reflect(p, root, level)
                assert all(x.denominator == 1 for x in q)


def test_to_omega_coords():
    assert to_omega_coords("B", 3, (Fraction(1, 2),) * 3) == (0, 0, Fraction(1, 2))
    assert to_omega_coords("B", 2, (1, 0)) == (1, 0)
    assert to_omega_coords("A", 2, (0, 0, 0)) == (0, 0)
    assert to_omega_coords("G", 2, (0, 0, 0)) == (0, 0)
    assert to_omega_coords("D", 4, (0, 0, 0, 0)) == (0, 0, 0, 0)


def test_to_omega_coords_a_family():
    # coordinates are consecutive differences of the ambient coordinates
    assert to_omega_coords("A", 3, (3, 2, 2, 0)) == (1, 0, 2)


def test_to_omega_coords_unsupported():
    with pytest.raises(UnsupportedTypeError):
        to_omega_coords("E", 6, (0,) * 6)
