"""Versioned JSON job documents describing a polytope and run parameters.

A job document is a single JSON object with `"schema": 1`.  Rational values
are written as integers or "p/q" strings; floats are rejected outright so no
binary rounding can leak into the exact pipeline.  Exactly one polytope
source must be present:

    {"builtin": {"kind": "hypersimplex", "k": 2, "n": 5}}
    {"builtin": {"kind": "hypercube", "n": 3}}
    {"builtin": {"kind": "fundamental"}}
    {"bounds": [{"c": [1, 0], "min": 0, "max": 1}, ...]}
    {"vertices": {"mode": "omega" | "euclidean", "points": [["1/2", 0], ...]}}

`root_system` is required except for the hypersimplex and hypercube builtins,
which imply type A of the matching rank.  Serialization is canonical, so
parse followed by dumps is idempotent on any accepted document.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from .errors import JobSpecError
from .polytope import (
    AlcovedPolytope,
    from_bounds,
    from_vertices,
    fundamental_polytope,
    hypercube,
    hypersimplex,
)
from .rootsys import Point, RootSystem, build, to_omega_coords

SCHEMA = 1

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


@dataclass(frozen=True)
class BuiltinSource:
    kind: str  # "hypersimplex" | "hypercube" | "fundamental"
    k: Optional[int] = None
    n: Optional[int] = None


@dataclass(frozen=True)
class BoundsSource:
    # (simple root coefficients, lower bound, upper bound) per wall family
    items: tuple[tuple[tuple[int, ...], int, int], ...]


@dataclass(frozen=True)
class VerticesSource:
    mode: str  # "omega" | "euclidean"
    points: tuple[Point, ...]


Source = Union[BuiltinSource, BoundsSource, VerticesSource]


@dataclass(frozen=True)
class JobSpec:
    source: Source
    family: Optional[str] = None
    rank: Optional[int] = None
    T: Optional[int] = None
    seed: Optional[Point] = None
    dot: Optional[str] = None


def parse_rational(value: Any, path: str) -> Fraction:
    """One rational from JSON: an int or a "p/q" string, never a float."""
    if isinstance(value, bool):
        raise JobSpecError(f"{path}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise JobSpecError(f'{path}: floats are not accepted; write rationals as "p/q" strings')
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise JobSpecError(f'{path}: malformed rational string {value!r}; expected "p" or "p/q"')
        return Fraction(value)
    raise JobSpecError(f"{path}: expected a rational, got {type(value).__name__}")


def rational_json(x: Fraction) -> Union[int, str]:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _require_int(value: Any, path: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise JobSpecError(f"{path}: expected an integer, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise JobSpecError(f"{path}: must be >= {minimum}, got {value}")
    return value


def _require_keys(obj: dict, path: str, required: set[str], optional: set[str] = frozenset()) -> None:
    missing = required - obj.keys()
    if missing:
        raise JobSpecError(f"{path}: missing field {sorted(missing)[0]!r}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise JobSpecError(f"{path}: unknown field {sorted(unknown)[0]!r}")


def _parse_point(value: Any, path: str) -> Point:
    if not isinstance(value, list) or not value:
        raise JobSpecError(f"{path}: expected a non-empty list of rationals")
    return tuple(parse_rational(x, f"{path}[{i}]") for i, x in enumerate(value))


def _parse_builtin(obj: Any, path: str) -> BuiltinSource:
    if not isinstance(obj, dict):
        raise JobSpecError(f"{path}: expected an object")
    kind = obj.get("kind")
    if kind == "hypersimplex":
        _require_keys(obj, path, {"kind", "k", "n"})
        return BuiltinSource("hypersimplex", k=_require_int(obj["k"], f"{path}.k", 1),
                             n=_require_int(obj["n"], f"{path}.n", 3))
    if kind == "hypercube":
        _require_keys(obj, path, {"kind", "n"})
        return BuiltinSource("hypercube", n=_require_int(obj["n"], f"{path}.n", 2))
    if kind == "fundamental":
        _require_keys(obj, path, {"kind"})
        return BuiltinSource("fundamental")
    raise JobSpecError(
        f"{path}.kind: expected hypersimplex, hypercube or fundamental, got {kind!r}"
    )


def _parse_bounds(obj: Any, path: str) -> BoundsSource:
    if not isinstance(obj, list) or not obj:
        raise JobSpecError(f"{path}: expected a non-empty list of bound objects")
    items = []
    for i, row in enumerate(obj):
        p = f"{path}[{i}]"
        if not isinstance(row, dict):
            raise JobSpecError(f"{p}: expected an object")
        _require_keys(row, p, {"c", "min", "max"})
        c = row["c"]
        if not isinstance(c, list) or not c:
            raise JobSpecError(f"{p}.c: expected a non-empty list of integers")
        coeffs = tuple(_require_int(x, f"{p}.c[{j}]") for j, x in enumerate(c))
        items.append((coeffs, _require_int(row["min"], f"{p}.min"), _require_int(row["max"], f"{p}.max")))
    return BoundsSource(tuple(items))


def _parse_vertices(obj: Any, path: str) -> VerticesSource:
    if not isinstance(obj, dict):
        raise JobSpecError(f"{path}: expected an object")
    _require_keys(obj, path, {"mode", "points"})
    mode = obj["mode"]
    if mode not in ("omega", "euclidean"):
        raise JobSpecError(f"{path}.mode: expected omega or euclidean, got {mode!r}")
    pts = obj["points"]
    if not isinstance(pts, list) or not pts:
        raise JobSpecError(f"{path}.points: expected a non-empty list of points")
    points = tuple(_parse_point(p, f"{path}.points[{i}]") for i, p in enumerate(pts))
    if len({len(p) for p in points}) != 1:
        raise JobSpecError(f"{path}.points: points have mixed lengths")
    return VerticesSource(mode, points)


# (family, rank) implied by a builtin polytope, or None if it must be declared
def _implied_root_system(source: Source) -> Optional[tuple[str, int]]:
    if isinstance(source, BuiltinSource):
        if source.kind == "hypersimplex":
            assert source.n is not None
            return ("A", source.n - 1)
        if source.kind == "hypercube":
            assert source.n is not None
            return ("A", source.n)
    return None


def parse(doc: Any) -> JobSpec:
    """Validate a decoded JSON document and return the job it describes."""
    if not isinstance(doc, dict):
        raise JobSpecError("job document: expected a JSON object at top level")
    _require_keys(doc, "job document", {"schema", "polytope"},
                  {"root_system", "T", "seed", "dot"})
    if doc["schema"] != SCHEMA:
        raise JobSpecError(f"schema: expected {SCHEMA}, got {doc['schema']!r}")

    poly = doc["polytope"]
    if not isinstance(poly, dict) or len(poly) != 1:
        raise JobSpecError("polytope: expected exactly one of builtin, bounds, vertices")
    (key, val), = poly.items()
    if key == "builtin":
        source: Source = _parse_builtin(val, "polytope.builtin")
    elif key == "bounds":
        source = _parse_bounds(val, "polytope.bounds")
    elif key == "vertices":
        source = _parse_vertices(val, "polytope.vertices")
    else:
        raise JobSpecError(f"polytope: unknown source {key!r}")

    implied = _implied_root_system(source)
    family: Optional[str] = None
    rank: Optional[int] = None
    if "root_system" in doc:
        rs_obj = doc["root_system"]
        if not isinstance(rs_obj, dict):
            raise JobSpecError("root_system: expected an object")
        _require_keys(rs_obj, "root_system", {"family", "rank"})
        family = rs_obj["family"]
        if not isinstance(family, str):
            raise JobSpecError("root_system.family: expected a string")
        rank = _require_int(rs_obj["rank"], "root_system.rank", 1)
        if implied is not None and (family, rank) != implied:
            raise JobSpecError(
                f"root_system: {family}{rank} conflicts with the builtin polytope"
                f" (implies {implied[0]}{implied[1]})"
            )
    elif implied is not None:
        family, rank = implied
    else:
        raise JobSpecError("root_system: required for this polytope source")

    T = None
    if "T" in doc:
        T = _require_int(doc["T"], "T", 0)
    seed = _parse_point(doc["seed"], "seed") if "seed" in doc else None
    dot = None
    if "dot" in doc:
        if not isinstance(doc["dot"], str) or not doc["dot"]:
            raise JobSpecError("dot: expected a non-empty path string")
        dot = doc["dot"]
    return JobSpec(source=source, family=family, rank=rank, T=T, seed=seed, dot=dot)


def loads(text: str) -> JobSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobSpecError(f"job document: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse(doc)


def load(path: str) -> JobSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise JobSpecError(f"job document: cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def to_dict(spec: JobSpec) -> dict:
    """Canonical document for a job; parse(to_dict(spec)) == spec."""
    out: dict[str, Any] = {"schema": SCHEMA}
    if _implied_root_system(spec.source) is None:
        out["root_system"] = {"family": spec.family, "rank": spec.rank}
    s = spec.source
    if isinstance(s, BuiltinSource):
        b: dict[str, Any] = {"kind": s.kind}
        if s.k is not None:
            b["k"] = s.k
        if s.n is not None:
            b["n"] = s.n
        out["polytope"] = {"builtin": b}
    elif isinstance(s, BoundsSource):
        out["polytope"] = {
            "bounds": [{"c": list(c), "min": lo, "max": hi} for c, lo, hi in s.items]
        }
    else:
        out["polytope"] = {
            "vertices": {
                "mode": s.mode,
                "points": [[rational_json(x) for x in p] for p in s.points],
            }
        }
    if spec.T is not None:
        out["T"] = spec.T
    if spec.seed is not None:
        out["seed"] = [rational_json(x) for x in spec.seed]
    if spec.dot is not None:
        out["dot"] = spec.dot
    return out


def dumps(spec: JobSpec) -> str:
    return json.dumps(to_dict(spec), indent=2) + "\n"


def root_system(spec: JobSpec) -> RootSystem:
    assert spec.family is not None and spec.rank is not None
    return build(spec.family, spec.rank)


def build_polytope(spec: JobSpec) -> AlcovedPolytope:
    """Construct the polytope a job describes."""
    s = spec.source
    if isinstance(s, BuiltinSource):
        if s.kind == "hypersimplex":
            assert s.k is not None and s.n is not None
            return hypersimplex(s.k, s.n)
        if s.kind == "hypercube":
            assert s.n is not None
            return hypercube(s.n)
        return fundamental_polytope(root_system(spec))
    rs = root_system(spec)
    if isinstance(s, BoundsSource):
        return from_bounds(rs, {c: (lo, hi) for c, lo, hi in s.items})
    if s.mode == "euclidean":
        pts = [to_omega_coords(rs.family, rs.rank, p) for p in s.points]
    else:
        pts = list(s.points)
    return from_vertices(rs, pts)
