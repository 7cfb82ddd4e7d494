"""Command-line interface: deterministic JSON reports over the library.

Exit codes: 0 success, 1 parse failure, 2 precondition failure.  Reports
serialize with sorted keys so that byte-identical output (minus the timing
field) can be snapshot-tested.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .algebra.multipoly import MultiPoly, as_fraction
from .algebra.solubility import SolubilityCertificate, nonsolubility_certificate
from .algebra.systems import (
    K33_SPECIAL_DISTANCES,
    eliminate_to_x3,
    k33_system,
    square_eliminate_y,
    x1_branch_report,
)
from .algebra.unipoly import UniPoly, factor_over_q
from .decomposition import (
    StepRecord,
    decompose_unique,
    qs_classify,
    reduce_to_terminal,
)
from .errors import InputError, ParseError
from .graph import Block, Graph, format_graph, freedom_number, is_m_connected, is_planar, parse_graph
from .rigidity import basic_census, is_basic, is_independent, is_laman


def _edge_list(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def graph_json(g: Graph) -> str:
    return format_graph(g, single_line=True)


def fraction_json(f: Fraction) -> str:
    return str(f)


def multipoly_json(p: MultiPoly) -> dict:
    terms = [
        {"coefficient": fraction_json(c), "exponents": list(e)}
        for e, c in sorted(p.terms.items())
    ]
    return {"variables": list(p.variables), "terms": terms}


def unipoly_json(p: UniPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def block_json(b: Block) -> dict:
    return {
        "graph": graph_json(b.subgraph),
        "virtual_edges": _edge_list(b.virtual_edges),
        "redundant_edges": _edge_list(b.redundant_flags),
    }


def certificate_json(cert: SolubilityCertificate) -> dict:
    witness = None
    if cert.witness is not None:
        prime, multiset, rule = cert.witness
        witness = {"prime": prime, "degree_multiset": list(multiset), "rule": rule}
    return {
        "polynomial": unipoly_json(cert.polynomial),
        "verdict": cert.verdict.value,
        "witness": witness,
        "rules_checked": list(cert.rules_checked),
        "prime_bound": cert.prime_bound,
    }


def step_json(record: StepRecord) -> dict:
    detail: dict = {}
    if record.kind.value == "SURGERY":
        detail = {
            "replaced": graph_json(record.detail["replaced"]),
            "attachment": list(record.detail["attachment"]),
        }
    elif record.kind.value == "CONTRACTION":
        detail = {"edge": list(record.detail["edge"])}
    elif record.kind.value == "BLOCK_SPLIT":
        decomposition = record.detail["decomposition"]
        detail = {
            "blocks": [block_json(b) for b in decomposition.blocks],
            "separation_history": [list(p.pair) for p in decomposition.separation_history],
            "recursed_into": [graph_json(g) for g in record.detail["chosen_blocks"]],
        }
    return {
        "kind": record.kind.value,
        "input_graph": graph_json(record.input_graph),
        "output_graphs": [graph_json(g) for g in record.output_graphs],
        "detail": detail,
    }


def _read_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    return parse_graph(text)


def cmd_check(args) -> dict:
    g = _read_graph(args.graph_file)
    laman = is_laman(g)
    return {
        "free": freedom_number(g),
        "independent": is_independent(g),
        "laman": laman,
        "basic": is_basic(g),
        "three_connected": is_m_connected(g, 3),
        "planar": is_planar(g),
    }


def cmd_census(args) -> dict:
    census = basic_census(args.n)
    return {
        "n": census.vertex_count,
        "laman_count": census.laman_count,
        "basic_count": census.basic_count,
        "laman_catalog": [
            graph_json(census.representative(f)) for f in census.laman_canonical_forms
        ],
        "basic_catalog": [
            graph_json(census.representative(f)) for f in census.basic_canonical_forms
        ],
    }


def cmd_decompose(args) -> dict:
    g = _read_graph(args.graph_file)
    decomposition = decompose_unique(g)
    return {
        "blocks": [block_json(b) for b in decomposition.blocks],
        "separation_history": [list(p.pair) for p in decomposition.separation_history],
    }


def cmd_classify(args) -> dict:
    g = _read_graph(args.graph_file)
    result = qs_classify(g)
    return {
        "verdict": result.verdict.value,
        "witnesses": [block_json(b) for b in result.witness_blocks],
    }


def cmd_reduce(args) -> dict:
    g = _read_graph(args.graph_file)
    trace = reduce_to_terminal(g)
    return {
        "steps": [step_json(s) for s in trace.steps],
        "terminal": graph_json(trace.terminal),
        "terminal_kind": trace.terminal_kind.value,
        "terminals": [
            {"graph": graph_json(t), "kind": k.value} for t, k in trace.terminals
        ],
    }


def _parse_distances(text: str) -> list[Fraction]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    try:
        values = [as_fraction(p) for p in parts]
    except (InputError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad distance list: {exc}")
    if len(values) != 8:
        raise ParseError(f"expected 8 distances, got {len(values)}")
    return values


def cmd_k33(args) -> dict:
    distances = (
        list(K33_SPECIAL_DISTANCES)
        if args.distances is None
        else _parse_distances(args.distances)
    )
    system = k33_system(distances)
    quartics = square_eliminate_y(system)
    elimination = eliminate_to_x3(quartics)
    factors = factor_over_q(elimination.eliminant)
    certificates = []
    for factor, multiplicity in factors:
        if factor.degree < 2:
            continue
        certificates.append(certificate_json(nonsolubility_certificate(factor, args.prime_bound)))
    return {
        "distances": [fraction_json(d) for d in distances],
        "equations": [multipoly_json(eq) for eq in system.equations],
        "quartics": [multipoly_json(q) for q in quartics],
        "h1": multipoly_json(elimination.h1),
        "h2": multipoly_json(elimination.h2),
        "eliminant": unipoly_json(elimination.eliminant),
        "eliminant_degree": elimination.eliminant.degree,
        "raw_content": fraction_json(elimination.raw_content),
        "factors": [
            {
                "coefficients": unipoly_json(f),
                "degree": f.degree,
                "multiplicity": m,
            }
            for f, m in factors
        ],
        "certificates": certificates,
        "x1_branch": x1_branch_report(distances),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigicert",
        description="Laman rigidity analysis and radical-solubility certificates",
    )
    parser.add_argument(
        "--json", action="store_true", help="compact JSON report (the default)"
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    parser.add_argument(
        "--tol", type=float, default=1e-9, help="numeric tolerance for embedding checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural and rigidity flags for a graph file")
    p.add_argument("graph_file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("census", help="Laman and basic-Laman catalogs on n vertices")
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("decompose", help="unique block decomposition of a Laman graph")
    p.add_argument("graph_file")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("classify", help="quadratic-solubility classification")
    p.add_argument("graph_file")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("reduce", help="reduce a 3-connected Laman graph to terminals")
    p.add_argument("graph_file")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("k33", help="the full K(3,3) elimination and certificate pipeline")
    p.add_argument(
        "--distances",
        help="8 comma-separated rationals d1..d8 (defaults to the published specialization)",
    )
    p.add_argument("--prime-bound", type=int, default=10000)
    p.set_defaults(handler=cmd_k33)
    return parser


def render_report(command: str, inputs: dict, result: dict, elapsed_ms: float, pretty: bool) -> str:
    report = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "timing_ms": round(elapsed_ms, 3),
    }
    if pretty:
        return json.dumps(report, sort_keys=True, indent=2)
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {
        k: v
        for k, v in vars(args).items()
        if k not in ("handler", "command", "pretty", "json") and v is not None
    }
    start = time.perf_counter()
    try:
        result = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    print(render_report(args.command, inputs, result, elapsed_ms, args.pretty))
    return 0


if __name__ == "__main__":
    sys.exit(main())
