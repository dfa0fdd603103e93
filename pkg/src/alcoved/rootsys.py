"""Irreducible crystallographic root systems in fundamental coweight coordinates.

Every point in this package is written in the basis of fundamental coweights
(omega coordinates): coordinate i of a point p is the pairing (p, alpha_i)
with the i-th simple root.  In this basis the coweight lattice is exactly
Z^n, the pairing of p with a positive root alpha = sum c_i alpha_i is the
integer-vector dot product c . p, and the vertex omega_i / a_i of the
fundamental alcove is e_i / a_i where a_i is the mark of the highest root.
That normalization is what makes every alcove vertex of type i live in
(1/l_i) Z^n with l_0 = 1 and l_i = a_i.

Simple root numbering follows Bourbaki.  The G2 Cartan matrix is pinned to
[[2, -1], [-3, 2]] (alpha_1 short, alpha_2 long).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import UnsupportedTypeError

Point = tuple[Fraction, ...]
Rational = Union[int, str, Fraction]

FAMILIES = "ABCDEFG"

# Smallest rank supported per family; E is handled separately (6, 7, 8 only).
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "F": 4, "G": 2}
_MAX_RANK = {"F": 4, "G": 2}


def as_point(coords: Iterable[Rational]) -> Point:
    """Coerce a sequence of exact rationals (ints, 'p/q' strings, Fractions) to a Point."""
    return tuple(Fraction(x) for x in coords)


@dataclass(frozen=True)
class PosRoot:
    """A positive root alpha = sum c_i alpha_i together with its coroot.

    c holds the simple-root coefficients, so the linear form (., alpha) in
    omega coordinates is x -> c . x.  d holds the omega coordinates of the
    coroot alpha^vee, i.e. d_i = (alpha^vee, alpha_i).  For every root
    c . d = (alpha, alpha^vee) = 2.
    """

    c: tuple[int, ...]
    d: tuple[int, ...]
    height: int


@dataclass(frozen=True)
class RootSystem:
    """Positive-root data of one irreducible crystallographic root system.

    positive_roots are sorted by height and, within a height, so that simple
    roots appear in index order (descending lexicographic c).  theta_index
    points at the highest root, marks are its simple-root coefficients, and
    ell = (1, marks...) lists the lattice denominator of each alcove vertex
    type.  coxeter_number is 1 + sum(marks).
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[PosRoot, ...]
    theta_index: int
    marks: tuple[int, ...]
    ell: tuple[int, ...]
    coxeter_number: int

    @property
    def theta(self) -> PosRoot:
        return self.positive_roots[self.theta_index]

    @cached_property
    def root_index_by_c(self) -> dict[tuple[int, ...], int]:
        return {r.c: i for i, r in enumerate(self.positive_roots)}

    @cached_property
    def simple_root_indices(self) -> tuple[int, ...]:
        """Index of alpha_i in positive_roots, for i = 0 .. rank-1."""
        out = []
        for i in range(self.rank):
            c = tuple(1 if j == i else 0 for j in range(self.rank))
            out.append(self.root_index_by_c[c])
        return tuple(out)

    def __repr__(self) -> str:  # keep reprs short; the full dataclass dump is huge
        return f"RootSystem({self.family}{self.rank})"


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix C with C[i][j] = (alpha_i, alpha_j^vee), 0-indexed."""
    _check_type(family, rank)
    n = rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    if family in "ABCD":
        for i in range(n - 1):
            chain(i, i + 1)
        if family == "B" and n >= 2:
            C[n - 2][n - 1] = -2  # alpha_n short
        elif family == "C" and n >= 2:
            C[n - 1][n - 2] = -2  # alpha_n long
        elif family == "D":
            chain(n - 2, n - 1, 0, 0)
            chain(n - 3, n - 1)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n with node 2 hanging off node 4.
        for a, b in [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]:
            chain(a - 1, b - 1)
    elif family == "F":
        chain(0, 1)
        chain(1, 2, -2, -1)  # alpha_2 long, alpha_3 short
        chain(2, 3)
    elif family == "G":
        chain(0, 1, -1, -3)
    return tuple(tuple(row) for row in C)


def _check_type(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise UnsupportedTypeError(f"unsupported type: family {family!r} is not one of A..G")
    if family == "E":
        if rank not in (6, 7, 8):
            raise UnsupportedTypeError(f"unsupported type: E{rank} (rank must be 6, 7 or 8)")
        return
    lo = _MIN_RANK[family]
    hi = _MAX_RANK.get(family)
    if rank < lo or (hi is not None and rank > hi):
        raise UnsupportedTypeError(f"unsupported type: {family}{rank}")


def _generate_roots(C: Sequence[Sequence[int]], n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Close the simple roots under simple reflections, in root coordinates.

    Returns (c, b) pairs where c are the root's coefficients over the simple
    roots and b the coroot's coefficients over the simple coroots.  Applying
    s_j sends c_j to c_j - sum_i c_i C[i][j] and b_j to b_j - sum_i C[j][i] b_i;
    a sign change in any coordinate means we crossed to the negative roots.
    """
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    frontier: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        seen[e] = e
        frontier.append((e, e))
    while frontier:
        new = []
        for c, b in frontier:
            for j in range(n):
                pair_c = sum(c[i] * C[i][j] for i in range(n))
                c2 = c[:j] + (c[j] - pair_c,) + c[j + 1:]
                if any(x < 0 for x in c2):
                    continue
                pair_b = sum(C[j][i] * b[i] for i in range(n))
                b2 = b[:j] + (b[j] - pair_b,) + b[j + 1:]
                if c2 in seen:
                    assert seen[c2] == b2, "inconsistent coroot transport"
                    continue
                seen[c2] = b2
                new.append((c2, b2))
        frontier = new
    return [(c, seen[c]) for c in seen]


def build(family: str, rank: int) -> RootSystem:
    """Construct the full positive root system of the given type."""
    C = cartan_matrix(family, rank)
    n = rank
    pairs = _generate_roots(C, n)
    # Height-major order; within a height the simple roots come in index order,
    # which is descending lexicographic order on the coefficient vectors.
    pairs.sort(key=lambda cb: (sum(cb[0]), tuple(-x for x in cb[0])))
    roots = []
    for c, b in pairs:
        d = tuple(sum(C[j][i] * b[i] for i in range(n)) for j in range(n))
        assert sum(ci * di for ci, di in zip(c, d)) == 2, "root/coroot pairing must be 2"
        roots.append(PosRoot(c=c, d=d, height=sum(c)))
    max_height = roots[-1].height
    assert sum(1 for r in roots if r.height == max_height) == 1, "highest root must be unique"
    theta_index = len(roots) - 1
    marks = roots[theta_index].c
    return RootSystem(
        family=family,
        rank=rank,
        cartan=C,
        positive_roots=tuple(roots),
        theta_index=theta_index,
        marks=marks,
        ell=(1,) + marks,
        coxeter_number=1 + sum(marks),
    )


def eval_form(root: PosRoot, p: Sequence[Fraction]) -> Fraction:
    """Pairing (p, alpha) of a point in omega coordinates with a positive root."""
    return sum((ci * pi for ci, pi in zip(root.c, p)), Fraction(0))


def reflect(p: Sequence[Fraction], root: PosRoot, level: int) -> Point:
    """Reflect p across the affine hyperplane (x, alpha) = level."""
    t = eval_form(root, p) - level
    return tuple(pi - t * di for pi, di in zip(p, root.d))


# Euclidean simple-root embeddings used by to_omega_coords.  Each entry maps a
# Euclidean vector to ((p, alpha_1), ..., (p, alpha_n)).  A_n lives in R^(n+1),
# B/C/D_n in R^n, G2 in the sum-zero plane of R^3 with alpha_1 = (e1-2e2+e3)/3
# and alpha_2 = e2-e3, the realization whose fundamental alcove has vertices
# 0, (2/3,-1/3,-1/3), (1/2,0,-1/2).
def to_omega_coords(family: str, rank: int, euclidean: Iterable[Rational]) -> Point:
    """Convert a point from the family's standard Euclidean embedding to omega coordinates."""
    _check_type(family, rank)
    p = as_point(euclidean)
    n = rank
    if family == "A":
        _want_len(p, n + 1, family, rank)
        return tuple(p[i] - p[i + 1] for i in range(n))
    if family in "BCD":
        _want_len(p, n, family, rank)
        x = [p[i] - p[i + 1] for i in range(n - 1)]
        if family == "B":
            x.append(p[n - 1])
        elif family == "C":
            x.append(2 * p[n - 1])
        else:
            x.append(p[n - 2] + p[n - 1])
        return tuple(x)
    if family == "G":
        _want_len(p, 3, family, rank)
        return ((p[0] - 2 * p[1] + p[2]) / 3, p[1] - p[2])
    raise UnsupportedTypeError(f"unsupported family for conversion: {family}{rank}")


def _want_len(p: Point, m: int, family: str, rank: int) -> None:
    if len(p) != m:
        raise UnsupportedTypeError(
            f"{family}{rank} expects Euclidean vectors of length {m}, got {len(p)}"
        )
