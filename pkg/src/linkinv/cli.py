"""Command-line front end.

Diagrams are read from a file, a literal argument or stdin, as PD text,
braid text (``braid 3: 1 -2 1``) or graph text; ``construct`` prints PD
text so that commands can be piped.  Reports are JSON with a top-level
``"schema": 1`` unless ``--table`` is given.  Input errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .diagram import DiagramError, LinkDiagram, is_alternating, parse_pd
from .families import FamilySpec, braid_closure, construct, parse_braid
from .goeritz import generalized_goeritz, goeritz_data, link_determinant, signature_and_nullity
from .graphs import diagram_from_graph, kirchhoff, parse_graph, spanning_tree_count
from .lattice import LatticeError, apply_move, area, parse_and_validate, planar_reduce
from .polynomials import (
    conway_via_skein,
    determinant_via_bracket,
    jones_in_A,
    kauffman_bracket,
    potential_bundle,
    turaev_genus_diagram,
)
from .quasi_alt import qa_certify
from .rings import LaurentPoly, i_power
from .seifert import seifert_data, seifert_matrix
from .signatures import UnitDirection, classical_signature, signature_function, tl_signature

SCHEMA = 1


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input


def _read_text(source: str | None) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source) as fh:
            return fh.read()
    return source


def read_diagram(text: str, fmt: str | None = None) -> LinkDiagram:
    stripped = text.strip()
    if fmt is None:
        if stripped.startswith("braid"):
            fmt = "braid"
        elif stripped.startswith("v ") or stripped.startswith("v\t"):
            fmt = "graph"
        else:
            fmt = "pd"
    if fmt == "pd":
        return parse_pd(stripped)
    if fmt == "braid":
        return parse_braid(stripped)
    if fmt == "graph":
        return diagram_from_graph(parse_graph(stripped))
    raise InputError(f"format {fmt!r} does not describe a link diagram")


# ---------------------------------------------------------------------------
# reports


def invariants_report(d: LinkDiagram, with_bracket: bool = False) -> dict:
    det_value = link_determinant(d)
    sig = signature_and_nullity(d)
    connected = d.is_connected_projection
    if connected:
        sd = seifert_data(d)
        bundle = potential_bundle(seifert_matrix(d))
        conway, alexander = bundle["conway"], bundle["alexander"]
        genus, circles = sd.genus, sd.s
        turaev = turaev_genus_diagram(d)
    else:
        conway = conway_via_skein(d)
        alexander = LaurentPoly({}, "t_half")
        genus, circles, turaev = None, None, None
    det_abs = det_value.norm()
    root = math.isqrt(det_abs)
    if root * root != det_abs:
        raise ArithmeticError("determinant is not a unit multiple of an integer")
    if root and i_power(sig["sigma"]) * root != det_value:
        raise ArithmeticError("determinant phase disagrees with the signature")
    report = {
        "schema": SCHEMA,
        "input": d.to_pd(),
        "crossings": d.crossing_count,
        "components": d.component_count,
        "determinant": det_value.to_json(),
        "det_abs": root,
        "signature": sig["sigma"],
        "nullity": sig["nullity"],
        "conway": conway.to_json(),
        "alexander": alexander.to_json(),
        "genus_diagram": genus,
        "seifert_circle_count": circles,
        "alternating": is_alternating(d),
        "turaev_genus_diagram": turaev,
    }
    if with_bracket:
        report["bracket"] = kauffman_bracket(d).to_json()
    return report


def goeritz_report(d: LinkDiagram) -> dict:
    if not d.is_connected_projection:
        raise InputError("the Goeritz report needs a connected projection")
    data = goeritz_data(d)
    sig = signature_and_nullity(d)
    return {
        "schema": SCHEMA,
        "input": d.to_pd(),
        "G_unreduced": data.G_unreduced,
        "G": data.G,
        "white_faces": list(data.white_faces),
        "eta": list(data.eta),
        "type": list(data.ctype),
        "mu": data.mu,
        "beta": data.beta,
        "H": generalized_goeritz(d),
        "signature": sig["sigma"],
        "nullity": sig["nullity"],
        "determinant": link_determinant(d).to_json(),
    }


def seifert_report(d: LinkDiagram) -> dict:
    if not d.is_connected_projection:
        raise InputError("the Seifert report needs a connected projection")
    sd = seifert_data(d)
    sm = seifert_matrix(d)
    bundle = potential_bundle(sm)
    return {
        "schema": SCHEMA,
        "input": d.to_pd(),
        "circles": [list(c) for c in sd.circles],
        "seifert_graph": [list(e) for e in sd.graph.edges],
        "genus": sd.genus,
        "V": sm.V,
        "basis": [[list(step) for step in cyc] for cyc in sm.basis],
        "omega": bundle["omega"].to_json(),
        "conway": bundle["conway"].to_json(),
        "alexander": bundle["alexander"].to_json(),
        "classical_signature": classical_signature(sm.V),
    }


def bracket_report(d: LinkDiagram, cap: int) -> dict:
    return {
        "schema": SCHEMA,
        "input": d.to_pd(),
        "bracket": kauffman_bracket(d, cap).to_json(),
        "jones_A": jones_in_A(d, cap).to_json(),
        "determinant": determinant_via_bracket(d, cap).to_json(),
    }


def _parse_psi(text: str) -> UnitDirection:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"--psi expects 'a,b' with integers, got {text!r}") from None
    return UnitDirection(a, b)


def signature_report(d: LinkDiagram, psi: str | None, function: bool) -> dict:
    if not d.is_connected_projection:
        raise InputError("signature from a Seifert matrix needs a connected projection")
    V = seifert_matrix(d).V
    out = {"schema": SCHEMA, "input": d.to_pd(), "classical": classical_signature(V)}
    if psi is not None:
        p = _parse_psi(psi)
        out["psi"] = p.to_json()
        out.update(tl_signature(V, p))
    if function:
        out["function"] = signature_function(V).to_json()
    return out


def qa_report(d: LinkDiagram, depth: int, nodes: int) -> dict:
    out = {"schema": SCHEMA, "input": d.to_pd()}
    out.update(qa_certify(d, depth, nodes).to_json())
    return out


def graph_report(text: str, deleted: int) -> dict:
    g = parse_graph(text)
    k = kirchhoff(g, deleted)
    out = {
        "schema": SCHEMA,
        "vertices": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "kirchhoff": k["kirchhoff"],
        "laplacian": k["laplacian"],
        "spanning_trees": spanning_tree_count(g, deleted),
        "connected": g.is_connected(),
    }
    if g.rotation is not None and g.is_connected():
        out["pd"] = diagram_from_graph(g).to_pd()
    return out


def lattice_report(action: str, word: str, move: str | None, position: int | None,
                   direction: str | None) -> dict:
    w = parse_and_validate(word)
    out = {"schema": SCHEMA, "ok": True, "edges": len(w), "axes": w.axis_stats(), "word": w.to_text()}
    if action == "validate":
        return out
    if action == "move":
        if move is None or position is None:
            raise InputError("lattice move needs MOVE and POSITION")
        r = apply_move(w, move, position, direction)
        out.update({"result": r.to_text(), "result_edges": len(r)})
        return out
    if action == "reduce":
        out["area"] = area(w)
        out["trace"] = planar_reduce(w)
        return out
    raise InputError(f"unknown lattice action {action!r}")


# ---------------------------------------------------------------------------
# output


def format_table(report: dict) -> str:
    width = max((len(k) for k in report), default=0)
    lines = []
    for k, v in report.items():
        shown = v if isinstance(v, (str, int)) and not isinstance(v, bool) else json.dumps(v)
        lines.append(f"{k.ljust(width)}  {shown}")
    return "\n".join(lines)


def _emit(report: dict, table: bool) -> None:
    print(format_table(report) if table else json.dumps(report, indent=2))


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkinv", description="Exact invariants of link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="file, literal text, or '-' for stdin (default)")
        p.add_argument("--format", choices=["pd", "braid", "graph"], default=None)
        p.add_argument("--table", action="store_true", help="aligned table instead of JSON")
        return p

    p = diagram_cmd("invariants", "determinant, signatures, polynomials and genera")
    p.add_argument("--bracket", action="store_true", help="include the Kauffman bracket")
    diagram_cmd("goeritz", "Goeritz matrices and corrections")
    diagram_cmd("seifert", "Seifert circles, matrix and potential function")
    p = diagram_cmd("bracket", "Kauffman bracket, Jones in A and determinant")
    p.add_argument("--cap", type=int, default=24)
    p = diagram_cmd("signature", "classical and Tristram-Levine signatures")
    p.add_argument("--psi", help="direction a,b for psi = (a+bi)/|a+bi|")
    p.add_argument("--function", action="store_true", help="the full signature step function (knots)")
    p = diagram_cmd("qa", "quasi-alternating certification")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--nodes", type=int, default=2000)

    p = sub.add_parser("graph", help="Kirchhoff matrix, tree count and medial diagram of a signed planar graph")
    p.add_argument("input", nargs="?")
    p.add_argument("--deleted", type=int, default=0)
    p.add_argument("--table", action="store_true")

    p = sub.add_parser("construct", help="print the PD code of a family member")
    p.add_argument("family", choices=["torus2", "turkshead", "turks_head", "pretzel", "braid"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--json", action="store_true", help="JSON instead of bare PD text")

    p = sub.add_parser("lattice", help="lattice knot words and square moves")
    p.add_argument("action", choices=["validate", "move", "reduce"])
    p.add_argument("word")
    p.add_argument("move", nargs="?", choices=["DH1", "DH2", "DH2_inv"])
    p.add_argument("position", nargs="?", type=int)
    p.add_argument("--dir", dest="direction", choices=list("xyzXYZ"))
    p.add_argument("--table", action="store_true")
    return parser


def _construct(family: str, params: list) -> LinkDiagram:
    if family in ("turkshead", "turks_head"):
        family = "turks_head"
    if family == "braid":
        if len(params) < 1:
            raise InputError("braid needs a strand count")
        return braid_closure(params[0], params[1:])
    if family == "pretzel":
        return construct(FamilySpec("pretzel", tuple(params)))
    if len(params) != 1:
        raise InputError(f"{family} takes one integer")
    return construct(FamilySpec(family, (params[0],)))


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            d = _construct(args.family, args.params)
            if args.json:
                print(json.dumps({"schema": SCHEMA, "pd": d.to_pd()}))
            else:
                print(d.to_pd())
            return 0
        if args.command == "lattice":
            _emit(lattice_report(args.action, args.word, args.move, args.position, args.direction), args.table)
            return 0
        if args.command == "graph":
            _emit(graph_report(_read_text(args.input), args.deleted), args.table)
            return 0
        d = read_diagram(_read_text(args.input), args.format)
        if args.command == "invariants":
            report = invariants_report(d, args.bracket)
        elif args.command == "goeritz":
            report = goeritz_report(d)
        elif args.command == "seifert":
            report = seifert_report(d)
        elif args.command == "bracket":
            report = bracket_report(d, args.cap)
        elif args.command == "signature":
            report = signature_report(d, args.psi, args.function)
        else:
            report = qa_report(d, args.depth, args.nodes)
        _emit(report, args.table)
        return 0
    except (DiagramError, LatticeError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
