"""Rational generating functions over structural denominators prod (1 - z^l).

A RationalSeries keeps its integer numerator and the denominator exponent
multiset as given, without expanding or cancelling; all comparisons go
through exact cross-multiplication and all coefficient extraction through
iterated prefix recurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import SeriesError

IntPoly = tuple[int, ...]


def poly_trim(coeffs: Sequence[int]) -> IntPoly:
    cs = list(coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (0,)


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_str(coeffs: Sequence[int], var: str = "z") -> str:
    cs = poly_trim(coeffs)
    if cs == (0,):
        return "0"
    parts = []
    for deg, c in enumerate(cs):
        if c == 0:
            continue
        if deg == 0:
            term = str(abs(c))
        else:
            z = var if deg == 1 else f"{var}^{deg}"
            term = z if abs(c) == 1 else f"{abs(c)}{z}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


@dataclass(frozen=True)
class RationalSeries:
    """numerator / prod_{l in denom_exponents} (1 - z^l), kept unreduced."""

    numerator: IntPoly
    denom_exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", poly_trim(self.numerator))
        exps = tuple(sorted(int(l) for l in self.denom_exponents))
        if any(l < 1 for l in exps):
            raise SeriesError(f"denominator exponents must be positive, got {exps}")
        object.__setattr__(self, "denom_exponents", exps)

    def __str__(self) -> str:
        num = poly_str(self.numerator)
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num} / {denominator_str(self.denom_exponents)}"


def denominator_str(exponents: Sequence[int], var: str = "z") -> str:
    parts = []
    for l in sorted(set(exponents)):
        mult = list(exponents).count(l)
        z = var if l == 1 else f"{var}^{l}"
        factor = f"(1 - {z})"
        parts.append(factor if mult == 1 else f"{factor}^{mult}")
    return " ".join(parts)


def expand(s: RationalSeries, T: int) -> list[int]:
    """Coefficients of the power series of s through degree T, exactly.

    Each factor 1/(1 - z^l) is applied as the prefix recurrence
    a[t] += a[t-l].
    """
    if T < 0:
        raise SeriesError(f"expansion degree must be >= 0, got {T}")
    coeffs = [0] * (T + 1)
    for i, c in enumerate(s.numerator[: T + 1]):
        coeffs[i] = c
    for l in s.denom_exponents:
        for t in range(l, T + 1):
            coeffs[t] += coeffs[t - l]
    return coeffs


def _denominator_poly(exponents: Sequence[int]) -> IntPoly:
    out: IntPoly = (1,)
    for l in exponents:
        factor = (1,) + (0,) * (l - 1) + (-1,)
        out = poly_mul(out, factor)
    return out


def equals(s1: RationalSeries, s2: RationalSeries) -> bool:
    """Exact equality as rational functions, via a common structural denominator."""
    common: list[int] = []
    for l in set(s1.denom_exponents) | set(s2.denom_exponents):
        common.extend([l] * max(s1.denom_exponents.count(l), s2.denom_exponents.count(l)))
    extra1 = list(common)
    for l in s1.denom_exponents:
        extra1.remove(l)
    extra2 = list(common)
    for l in s2.denom_exponents:
        extra2.remove(l)
    return poly_mul(s1.numerator, _denominator_poly(extra1)) == poly_mul(
        s2.numerator, _denominator_poly(extra2)
    )


def h_star(s: RationalSeries) -> IntPoly:
    """The h* polynomial, defined when every denominator factor is (1 - z)."""
    if any(l != 1 for l in s.denom_exponents):
        raise SeriesError("h* undefined for this denominator; use the numerator directly")
    return s.numerator


def quasipolynomial(
    s: RationalSeries, degree_bound: Optional[int] = None
) -> list[tuple[Fraction, ...]]:
    """Per-residue polynomials p_r with p_r(t) = [z^t] s for t = r mod the period.

    The period is lcm of the denominator exponents and the degree bound
    defaults to the number of denominator factors minus one.  Each residue
    class is interpolated exactly through degree_bound + 1 expansion values.
    Entry r of the result lists the coefficients of p_r, constant first,
    always of length degree_bound + 1.
    """
    period = math.lcm(*s.denom_exponents)
    if degree_bound is None:
        degree_bound = len(s.denom_exponents) - 1
    values = expand(s, period * degree_bound + period - 1)
    out = []
    for r in range(period):
        xs = [Fraction(r + j * period) for j in range(degree_bound + 1)]
        ys = [Fraction(values[r + j * period]) for j in range(degree_bound + 1)]
        out.append(_lagrange(xs, ys))
    return out


def _lagrange(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(xs)
    acc = [Fraction(0)] * n
    for i in range(n):
        # Build y_i * prod_{j != i} (x - x_j) / (x_i - x_j) coefficient-wise.
        term = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(term) + 1)
            for deg, c in enumerate(term):
                new[deg] -= c * xs[j]
                new[deg + 1] += c
            term = new
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for deg, c in enumerate(term):
            acc[deg] += scale * c
    return tuple(acc)


def eval_quasipolynomial(residues: Sequence[tuple[Fraction, ...]], t: int) -> Fraction:
    """Evaluate a per-residue polynomial family at an integer argument."""
    coeffs = residues[t % len(residues)]
    return sum((c * Fraction(t) ** deg for deg, c in enumerate(coeffs)), Fraction(0))
