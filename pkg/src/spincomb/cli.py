"""Command line interface.

Subcommands: analyze, spin, classify, evensets, verify.  Every command
accepts --json for structured output with stable field names; big counts
render in decimal plus 2^k form when they are powers of two.  Exit status
is 0 exactly when there was no error and no sweep violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .curvefile import CurveFile, parse_curve
from .cycles import cyclic_betti_set, is_eulerian
from .enumeration import SweepReport, sweep_theorem2, sweep_theorem3
from .errors import CapExceededError, CurveFileError, GraphError
from .graphs import betti_number, connected_components, separating_edges, separating_vertices
from .spin import (
    check_corollary_split,
    curve_genus,
    even_sets,
    is_compact_type,
    spin_report,
    support_description,
)
from .transforms import (
    Verdict,
    check_theorem2,
    check_theorem3,
    is_fat_triangle,
    is_loop_graph,
    is_split,
    is_superstable,
    is_tetrahedron,
    superstable_reduction,
)


def _pow2(n: int) -> str:
    if n >= 2 and n & (n - 1) == 0:
        return f"{n} (2^{n.bit_length() - 1})"
    return str(n)


def _load(path: str) -> CurveFile:
    return parse_curve(Path(path).read_text(encoding="utf-8"))


def _verdict_dict(v: Verdict, edge_names) -> dict:
    return {
        "holds": v.holds,
        "classification": v.classification,
        "hypothesis_exercised": v.hypothesis_exercised,
        "witness": sorted(edge_names[i] for i in v.witness.indices())
        if v.witness is not None
        else None,
    }


def cmd_analyze(cf: CurveFile) -> dict:
    x = cf.to_dual_graph()
    g = x.graph
    bridges = separating_edges(g)
    return {
        "edge_count": g.edge_count,
        "vertex_count": g.vertex_count,
        "component_count": len(connected_components(g)),
        "betti_number": betti_number(g),
        "separating_edges": sorted(cf.edge_names[i] for i in bridges.indices()),
        "separating_vertices": [cf.vertex_names[v] for v in separating_vertices(g)],
        "eulerian": is_eulerian(g),
        "cyclic_betti_set": sorted(cyclic_betti_set(g)),
    }


def _render_analyze(data: dict) -> List[str]:
    return [
        f"edges (delta):        {data['edge_count']}",
        f"vertices (nu):        {data['vertex_count']}",
        f"components:           {data['component_count']}",
        f"betti number b1:      {data['betti_number']}",
        f"separating edges:     {', '.join(data['separating_edges']) or '-'}",
        f"separating vertices:  {', '.join(data['separating_vertices']) or '-'}",
        f"eulerian:             {'yes' if data['eulerian'] else 'no'}",
        f"cyclic betti set B:   {{{', '.join(map(str, data['cyclic_betti_set']))}}}",
    ]


def cmd_spin(cf: CurveFile) -> dict:
    x = cf.to_dual_graph()
    report = spin_report(x)
    return {
        "b": report.b,
        "p": report.p,
        "genus": report.genus,
        "even_set_count": report.even_set_count,
        "component_count": report.component_count,
        "multiplicity_multiset": {
            str(exp): count for exp, count in report.multiplicity_multiset.items()
        },
        "multiplicity_set_exponents": sorted(report.multiplicity_set_exponents),
        "length": report.length,
        "compact_type": is_compact_type(x),
    }


def _render_spin(data: dict) -> List[str]:
    lines = [
        f"b = {data['b']}, p = {data['p']}, genus = {data['genus']}",
        f"even sets of nodes:   {_pow2(data['even_set_count'])}",
        f"components:           {data['component_count']}",
        "multiplicities:",
    ]
    for exp, count in sorted(data["multiplicity_multiset"].items(), key=lambda kv: int(kv[0])):
        lines.append(f"  multiplicity 2^{exp}: {count} component(s)")
    exps = data["multiplicity_set_exponents"]
    lines.append("L(S_X) = {" + ", ".join(f"2^{e}" for e in exps) + "}")
    lines.append(f"length:               {_pow2(data['length'])}")
    lines.append(f"compact type:         {'yes' if data['compact_type'] else 'no'}")
    return lines


def cmd_classify(cf: CurveFile) -> dict:
    x = cf.to_dual_graph()
    g = x.graph
    data = {
        "superstable": is_superstable(g),
        "split": is_split(g),
        "loop": is_loop_graph(g),
        "tetrahedron": is_tetrahedron(g),
        "fat_triangle": is_fat_triangle(g),
        "via_reduction": False,
        "theorem2": None,
        "theorem3": None,
        "corollary_split": _verdict_dict(check_corollary_split(x), cf.edge_names),
    }
    target = g
    if not data["superstable"]:
        try:
            target = superstable_reduction(g)
            data["via_reduction"] = True
        except GraphError:
            return data
    names = (
        cf.edge_names
        if target is g
        else tuple(f"r{i}" for i in range(target.edge_count))
    )
    data["theorem2"] = _verdict_dict(check_theorem2(target), names)
    data["theorem3"] = _verdict_dict(check_theorem3(target), names)
    return data


def _render_verdict(tag: str, v: Optional[dict]) -> str:
    if v is None:
        return f"{tag}: not applicable (graph has no superstable core)"
    mode = "exercised" if v["hypothesis_exercised"] else "vacuous"
    out = f"{tag}: {'holds' if v['holds'] else 'FAILS'} ({mode}, classification={v['classification']})"
    if v["witness"]:
        out += f", witness={{{', '.join(v['witness'])}}}"
    return out


def _render_classify(data: dict) -> List[str]:
    lines = [
        f"superstable:   {'yes' if data['superstable'] else 'no'}"
        + (" (theorems checked on the reduced graph)" if data["via_reduction"] else ""),
        f"split:         {'yes' if data['split'] else 'no'}",
        f"loop:          {'yes' if data['loop'] else 'no'}",
        f"tetrahedron:   {'yes' if data['tetrahedron'] else 'no'}",
        f"fat triangle:  {'yes' if data['fat_triangle'] else 'no'}",
        _render_verdict("theorem 2", data["theorem2"]),
        _render_verdict("theorem 3", data["theorem3"]),
        _render_verdict("split corollary", data["corollary_split"]),
    ]
    return lines


def cmd_evensets(cf: CurveFile) -> dict:
    x = cf.to_dual_graph()
    sets = []
    for delta in even_sets(x):
        d = support_description(x, delta)
        sets.append(
            {
                "edges": sorted(cf.edge_names[i] for i in delta.indices()),
                "betti": d.gluing_dimension,
                "blown_up_count": d.exceptional_count,
                "point_count": d.point_count,
                "multiplicity_exponent": d.multiplicity_exponent,
            }
        )
    return {"count": len(sets), "even_sets": sets}


def _render_evensets(data: dict) -> List[str]:
    lines = [f"{data['count']} even set(s)"]
    for s in data["even_sets"]:
        edges = "{" + ", ".join(s["edges"]) + "}"
        lines.append(
            f"  {edges or '{}'}: b1={s['betti']}, points={_pow2(s['point_count'])}, "
            f"multiplicity=2^{s['multiplicity_exponent']}"
        )
    return lines


def _sweep_dict(report: SweepReport) -> dict:
    return {
        "graphs_examined": report.graphs_examined,
        "hypothesis_exercised": report.hypothesis_exercised,
        "vacuous": report.vacuous,
        "violations": len(report.violations),
        "elapsed_seconds": round(report.elapsed, 3),
    }


def cmd_verify(max_edges: int) -> dict:
    return {
        "max_edges": max_edges,
        "theorem2": _sweep_dict(sweep_theorem2(max_edges)),
        "theorem3": _sweep_dict(sweep_theorem3(max_edges)),
    }


def _render_verify(data: dict) -> List[str]:
    lines = [f"sweeps over superstable classes with <= {data['max_edges']} edges"]
    for tag in ("theorem2", "theorem3"):
        r = data[tag]
        lines.append(
            f"{tag}: examined={r['graphs_examined']} exercised={r['hypothesis_exercised']} "
            f"vacuous={r['vacuous']} violations={r['violations']} "
            f"({r['elapsed_seconds']}s)"
        )
    return lines


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="spincomb",
        description="Cycle spaces, cyclic Betti numbers and spin-curve numerics "
        "of stable-curve dual graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("analyze", "graph invariants of the dual graph"),
        ("spin", "numerics of the scheme of spin curves"),
        ("classify", "recognizers and theorem verdicts"),
        ("evensets", "stream all even sets with their spin data"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("path", help="curve file")
    p = sub.add_parser("verify", help="run both theorem sweeps")
    p.add_argument("max_edges", type=int)

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            data = cmd_verify(args.max_edges)
            text_lines = _render_verify(data)
            failed = data["theorem2"]["violations"] or data["theorem3"]["violations"]
        else:
            cf = _load(args.path)
            handler = {
                "analyze": (cmd_analyze, _render_analyze),
                "spin": (cmd_spin, _render_spin),
                "classify": (cmd_classify, _render_classify),
                "evensets": (cmd_evensets, _render_evensets),
            }[args.command]
            data = handler[0](cf)
            text_lines = handler[1](data)
            failed = False
    except CapExceededError as exc:
        print(f"error: cycle space too large to enumerate (b1={exc.betti})", file=sys.stderr)
        return 1
    except (CurveFileError, GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
