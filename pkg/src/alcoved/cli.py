"""Command-line front end.

Subcommands: ehrhart, verify, alcoves, dosp, conjecture.  Polytopes are read
from JSON job documents (see jobspec); flags override document parameters.
Output is deterministic for identical inputs.  Exit codes: 0 success, 1 a
verification or conjecture check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import jobspec, report
from .dosp import (
    ConjectureReport,
    check_conjecture,
    enumerate_dosps,
    node_psi_labels,
    winding,
)
from .errors import AlcovedError, JobSpecError
from .jobspec import JobSpec
from .oracle import verify
from .polytope import hypersimplex
from .series import RationalSeries, denominator_str, expand, poly_str
from .shelling import bfs_weights, dual_graph, ehrhart_series, numerator, to_dot


def _render_series(s: RationalSeries) -> str:
    return f"({poly_str(s.numerator)}) / ({denominator_str(s.denom_exponents)})"


def _series_json(s: RationalSeries) -> dict:
    return {
        "numerator": list(s.numerator),
        "denominator_exponents": list(s.denom_exponents),
        "rendered": _render_series(s),
    }


def _point_str(p: Sequence[Fraction]) -> str:
    return " ".join(str(x) for x in p)


def _note(path: str) -> None:
    print(f"wrote: {path}", file=sys.stderr)


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise JobSpecError(f"cannot write {path}: {exc.strerror}") from exc
    _note(path)


def cmd_ehrhart(
    spec: JobSpec, json_out: bool = False, report_dir: Optional[str] = None
) -> tuple[int, str]:
    """Ehrhart series of the polytope a job describes, with optional DOT export."""
    P = jobspec.build_polytope(spec)
    g = dual_graph(P, seed=spec.seed)
    s = RationalSeries(numerator(g), P.rs.ell)
    if report_dir is not None:
        for path in (report.write_graph_tables(g, report_dir)
                     + report.write_series_text(s, report_dir, T=spec.T or 8)
                     + report.draw_dual_graph(g, report_dir)):
            _note(path)
    if spec.dot is not None:
        _write_text(spec.dot, to_dot(g))
    coeffs = expand(s, spec.T) if spec.T is not None else None
    if json_out:
        doc = {"series": _series_json(s), "alcove_count": len(g.nodes),
               "coefficients": coeffs}
        return 0, json.dumps(doc, indent=2)
    lines = [_render_series(s), f"alcoves: {len(g.nodes)}"]
    if coeffs is not None:
        lines.append(f"coefficients t=0..{spec.T}: " + " ".join(map(str, coeffs)))
    return 0, "\n".join(lines)


def cmd_verify(
    spec: JobSpec, T: int, json_out: bool = False, report_dir: Optional[str] = None
) -> tuple[int, str]:
    """Series coefficients against direct lattice-point counts for t = 0..T."""
    P = jobspec.build_polytope(spec)
    rep = verify(P, T, seed=spec.seed)
    if report_dir is not None:
        for path in report.write_count_table(rep, report_dir) + report.draw_counts(rep, report_dir):
            _note(path)
    if json_out:
        doc = {
            "rows": [{"t": r.t, "oracle": r.oracle, "series": r.series, "ok": r.ok}
                     for r in rep.rows],
            "ok": rep.ok,
        }
        return (0 if rep.ok else 1), json.dumps(doc, indent=2)
    return (0 if rep.ok else 1), str(rep)


def cmd_alcoves(
    spec: JobSpec, json_out: bool = False, report_dir: Optional[str] = None
) -> tuple[int, str]:
    """Alcove list of the polytope: m-vectors, typed vertices, BFS weights."""
    P = jobspec.build_polytope(spec)
    g = dual_graph(P, seed=spec.seed)
    weights = bfs_weights(g)
    if report_dir is not None:
        for path in (report.write_graph_tables(g, report_dir)
                     + report.draw_dual_graph(g, report_dir)):
            _note(path)
    if spec.dot is not None:
        _write_text(spec.dot, to_dot(g))
    if json_out:
        doc = {
            "alcoves": [
                {
                    "node": v,
                    "dist": g.dist[v],
                    "weight": weights[v],
                    "m_vector": list(a.m_vector),
                    "vertices": [[jobspec.rational_json(x) for x in vx] for vx in a.vertices],
                }
                for v, a in enumerate(g.nodes)
            ],
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "weight": e.weight,
                    "root_c": list(P.rs.positive_roots[e.facet.root_index].c),
                    "level": e.facet.level,
                    "opposite_type": e.facet.opposite_type,
                }
                for e in g.edges
            ],
        }
        return 0, json.dumps(doc, indent=2)
    lines = []
    for v, a in enumerate(g.nodes):
        verts = " ".join("[" + _point_str(vx) + "]" for vx in a.vertices)
        lines.append(
            f"alcove {v}: dist {g.dist[v]} weight {weights[v]}"
            f" m [{_point_str(a.m_vector)}] vertices {verts}"
        )
    for e in g.edges:
        lines.append(f"edge {e.u} -- {e.v} weight {e.weight}")
    return 0, "\n".join(lines)


def cmd_dosp(
    k: int, n: int, json_out: bool = False, report_dir: Optional[str] = None
) -> tuple[int, str]:
    """Winding-graded counts of hypersimplicial decorated ordered set partitions."""
    hist: dict[int, int] = {}
    for p in enumerate_dosps(k, n):
        d = winding(p).number
        hist[d] = hist.get(d, 0) + 1
    total = sum(hist.values())
    if report_dir is not None:
        for path in report.write_winding_table(hist, report_dir) + report.draw_winding(hist, report_dir):
            _note(path)
    if json_out:
        doc = {"k": k, "n": n,
               "winding_counts": {str(d): hist[d] for d in sorted(hist)},
               "total": total}
        return 0, json.dumps(doc, indent=2)
    lines = [f"winding {d}: {hist[d]}" for d in sorted(hist)]
    lines.append(f"total hypersimplicial DOSPs for k={k} n={n}: {total}")
    return 0, "\n".join(lines)


def cmd_conjecture(
    n: int,
    roots: str = "all",
    json_out: bool = False,
    report_dir: Optional[str] = None,
) -> tuple[int, str]:
    """Cover-label bijection check for Delta_{2,n}, one verdict per root alcove."""
    root_list: object = "all"
    if roots != "all":
        try:
            root_list = [int(r) for r in roots.split(",") if r != ""]
        except ValueError:
            raise JobSpecError(f"--roots: expected 'all' or comma-separated integers, got {roots!r}")
    rep = check_conjecture(n, root_list)  # type: ignore[arg-type]
    if report_dir is not None:
        written = report.write_conjecture_tables(rep, report_dir)
        if root_list != "all" and len(rep.per_root) == 1:
            base = dual_graph(hypersimplex(2, n))
            g = dual_graph(base.polytope, seed=base.nodes[rep.per_root[0].root])
            labels = [str(lab) for lab in node_psi_labels(g)]
            written += report.write_label_table(g, labels, report_dir)
            written += report.draw_dual_graph(g, report_dir, node_labels=labels)
        for path in written:
            _note(path)
    if json_out:
        return (0 if rep.ok else 1), json.dumps(_conjecture_json(rep), indent=2)
    lines = []
    for rr in rep.per_root:
        hist = " ".join(f"{d}:{c}" for d, c in sorted(rr.cover_histogram.items()))
        verdict = "ok" if rr.ok else f"FAILED ({len(rr.failures)} failures)"
        lines.append(f"root {rr.root}: {verdict}; covers {hist}")
        for f in rr.failures:
            where = f"node {f.node} m [{_point_str(f.m_vector)}]"
            lines.append(f"  counterexample: {where}: {f.reason}; image {f.image};"
                         f" cover labels {' | '.join(f.cover_labels) or '(none)'}")
    lines.append(rep.summary())
    return (0 if rep.ok else 1), "\n".join(lines)


def _conjecture_json(rep: ConjectureReport) -> dict:
    return {
        "n": rep.n,
        "ok": rep.ok,
        "summary": rep.summary(),
        "per_root": [
            {
                "root": rr.root,
                "root_m_vector": list(rr.root_m_vector),
                "ok": rr.ok,
                "cover_histogram": {str(d): c for d, c in sorted(rr.cover_histogram.items())},
                "dosp_histogram": {str(d): c for d, c in sorted(rr.dosp_histogram.items())},
                "failures": [
                    {
                        "node": f.node,
                        "m_vector": list(f.m_vector),
                        "cover_count": f.cover_count,
                        "cover_labels": list(f.cover_labels),
                        "image": f.image,
                        "reason": f.reason,
                        "colliding_node": f.colliding_node,
                    }
                    for f in rr.failures
                ],
            }
            for rr in rep.per_root
        ],
    }


def _parse_seed(text: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise JobSpecError(f"--seed: expected comma-separated rationals, got {text!r}")
    return tuple(jobspec.parse_rational(p, f"--seed[{i}]") for i, p in enumerate(parts))


def _load_spec(args: argparse.Namespace) -> JobSpec:
    spec = jobspec.load(args.spec)
    updates: dict = {}
    if getattr(args, "T", None) is not None:
        updates["T"] = args.T
    if getattr(args, "seed", None) is not None:
        updates["seed"] = _parse_seed(args.seed)
    if getattr(args, "dot", None) is not None:
        updates["dot"] = args.dot
    return dataclasses.replace(spec, **updates) if updates else spec


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcoved",
        description="Exact Ehrhart series of alcoved polytopes via alcove shellings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p: argparse.ArgumentParser, with_dot: bool = True) -> None:
        p.add_argument("--spec", required=True, help="path to a JSON job document")
        p.add_argument("--seed", help='interior seed point, e.g. "1/3,1/4"')
        if with_dot:
            p.add_argument("--dot", help="write the dual graph in DOT format to this path")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--report-dir", help="write CSV tables and rendered figures here")

    p = sub.add_parser("ehrhart", help="Ehrhart series of the polytope")
    add_spec_flags(p)
    p.add_argument("--T", type=int, help="also print coefficients t=0..T")
    add_common(p)
    p.set_defaults(run=lambda a: cmd_ehrhart(_load_spec(a), a.json, a.report_dir))

    p = sub.add_parser("verify", help="series against direct lattice-point counts")
    add_spec_flags(p, with_dot=False)
    p.add_argument("--T", type=int, help="largest dilation to check (default 8)")
    add_common(p)

    def run_verify(a: argparse.Namespace) -> tuple[int, str]:
        spec = _load_spec(a)
        T = spec.T if spec.T is not None else 8
        return cmd_verify(spec, T, a.json, a.report_dir)

    p.set_defaults(run=run_verify)

    p = sub.add_parser("alcoves", help="alcove list and dual graph of the polytope")
    add_spec_flags(p)
    add_common(p)
    p.set_defaults(run=lambda a: cmd_alcoves(_load_spec(a), a.json, a.report_dir))

    p = sub.add_parser("dosp", help="winding-graded decorated ordered set partition counts")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(run=lambda a: cmd_dosp(a.k, a.n, a.json, a.report_dir))

    p = sub.add_parser("conjecture", help="cover-label bijection check for Delta_{2,n}")
    p.add_argument("n", type=int)
    p.add_argument("--roots", default="all",
                   help="'all' or comma-separated root alcove indices (default all)")
    add_common(p)
    p.set_defaults(run=lambda a: cmd_conjecture(a.n, a.roots, a.json, a.report_dir))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.run(args)
    except AlcovedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
