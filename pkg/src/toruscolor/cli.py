"""Command-line front end: every command prints one JSON report on stdout.

Exit status: 0 computed, 1 violation found, 2 input error, 3 search bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import alon_tarsi, discharging, dp_coloring, graph, io, structure, weak_degeneracy
from .configurations import ConfigurationId
from .errors import HypothesisViolation, InputError, SearchBoundExceeded

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def _bound(args, default: int) -> int:
    if args.bound is not None:
        return args.bound
    env = os.environ.get("TORUSCOLOR_BOUND")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"TORUSCOLOR_BOUND must be an integer, got {env!r}") from None
    return default


def _need(args, name: str):
    val = getattr(args, name)
    if val is None:
        raise InputError(f"--{name.replace('_', '-')} is required for {args.command}")
    return val


def _graph(args):
    return io.read_graph(_need(args, "graph"), graph6=args.graph6)


def _embedding(args):
    g = _graph(args) if args.graph else None
    return io.read_embedding(_need(args, "embedding"), g)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


# -- commands -------------------------------------------------------------

def cmd_wd(args):
    g = _graph(args)
    d, trace = weak_degeneracy.weak_degeneracy_certificate(g, _bound(args, weak_degeneracy.DEFAULT_VERTEX_BOUND))
    return {"wd": d, "trace": io.trace_to_json(trace)}, EXIT_OK


def cmd_degeneracy(args):
    g = _graph(args)
    return {"degeneracy": weak_degeneracy.degeneracy(g), "ordering": weak_degeneracy.degeneracy_ordering(g)}, EXIT_OK


def cmd_at(args):
    g = _graph(args)
    k, d = alon_tarsi.alon_tarsi_witness(g, _bound(args, alon_tarsi.DEFAULT_EDGE_BOUND))
    return {"at": k, "orientation": [f"{u} > {v}" for u, v in d.arcs]}, EXIT_OK


def cmd_diff(args):
    g = _graph(args) if args.graph else None
    d = io.read_orientation(_need(args, "orientation"), g)
    res = alon_tarsi.eulerian_census(d, _bound(args, alon_tarsi.DEFAULT_ARC_BOUND))
    return {
        "ee": res.ee,
        "oe": res.oe,
        "diff": res.diff,
        "at_orientation": res.diff != 0,
        "max_out_degree": d.max_out_degree(),
    }, EXIT_OK


def _cover(args):
    g = _graph(args)
    obj = io.load_json(_need(args, "cover"))
    return g, obj, io.parse_cover(obj, g)


def cmd_dp_color(args):
    _, _, c = _cover(args)
    t = dp_coloring.dp_color(c, _bound(args, dp_coloring.DEFAULT_PRODUCT_BOUND))
    return {"transversal": None if t is None else {str(v): i for v, i in sorted(t.items())}}, EXIT_OK


def cmd_transversal(args):
    g, obj, c = _cover(args)
    if "f" in obj:
        rows = obj["f"]
        if len(rows) != g.n:
            raise InputError("cover field 'f' needs one row per vertex")
        f = {(v, i + 1): int(x) for v, row in zip(g.vertices, rows) for i, x in enumerate(row)}
    else:
        k = args.k if args.k is not None else 1
        f = {x: k for x in c.cover_vertices()}
    t = dp_coloring.strictly_f_degenerate_transversal(c, f, _bound(args, dp_coloring.DEFAULT_PRODUCT_BOUND))
    report = {
        "transversal": None if t is None else {str(v): i for v, i in sorted(t.items())},
        "threshold_4": dp_coloring.f_threshold_holds(c, f, 4),
    }
    return report, EXIT_OK


def cmd_find_config(args):
    g = _graph(args)
    cid = ConfigurationId(_need(args, "config"))
    m = graph.find_induced_configuration(g, cid)
    return {"config": cid.value, "mapping": None if m is None else dict(sorted(m.items()))}, EXIT_OK


def cmd_k5mm(args):
    w = graph.find_k5_minus(_graph(args))
    return {"k5_minus": w is not None, "witness": w}, EXIT_OK


def cmd_cycles(args):
    g = _graph(args)
    k = _need(args, "k")
    if not 3 <= k <= 8:
        raise InputError(f"cycle length must lie in 3..8, got {k}")
    return {"k": k, "cycle": graph.find_cycle_of_length(g, k)}, EXIT_OK


def cmd_embed_check(args):
    e = _embedding(args)
    sizes: dict[str, int] = {}
    for f in e.faces:
        sizes[str(f.degree)] = sizes.get(str(f.degree), 0) + 1
    return {
        "n": e.graph.n,
        "m": e.graph.m,
        "faces": len(e.faces),
        "genus": e.genus,
        "euler_characteristic": e.euler_characteristic,
        "face_sizes": sizes,
    }, EXIT_OK


def cmd_discharge(args):
    e = _embedding(args)
    p = discharging.RuleParams(
        epsilon=args.epsilon if args.epsilon is not None else Fraction(1, 1000),
        eta=args.eta if args.eta is not None else Fraction(1, 1000),
        rho=args.rho,
    )
    return discharging.charge_report(discharging.apply_rules(e, p)), EXIT_OK


def cmd_lemma_scan(args):
    e = _embedding(args)
    viol = structure.lemma_scan(e, check_hypotheses_first=not args.no_hypotheses)
    return {"violations": [v.to_dict() for v in viol]}, EXIT_VIOLATION if viol else EXIT_OK


def cmd_theorem_check(args):
    res = structure.check_theorem(_embedding(args))
    code = EXIT_VIOLATION if res.outcome is structure.Outcome.COUNTEREXAMPLE else EXIT_OK
    return res.to_dict(), code


def cmd_verify_trace(args):
    g = _graph(args)
    trace = io.read_trace(_need(args, "trace"))
    k = _need(args, "k")
    ok = weak_degeneracy.verify_trace(g, {v: k for v in g.vertices}, trace)
    return {"valid": ok}, EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {
    "wd": (cmd_wd, "weak degeneracy with a Delete/DeleteSave certificate"),
    "degeneracy": (cmd_degeneracy, "degeneracy and peeling order"),
    "at": (cmd_at, "Alon-Tarsi number with a witness orientation"),
    "diff": (cmd_diff, "Eulerian sub-digraph census of an orientation"),
    "dp-color": (cmd_dp_color, "independent transversal of a cover"),
    "transversal": (cmd_transversal, "strictly f-degenerate transversal of a cover"),
    "find-config": (cmd_find_config, "induced configuration search"),
    "k5mm": (cmd_k5mm, "K5-minus subgraph test"),
    "cycles": (cmd_cycles, "find a cycle of length k"),
    "embed-check": (cmd_embed_check, "faces and genus of a rotation system"),
    "discharge": (cmd_discharge, "run the discharging rules"),
    "lemma-scan": (cmd_lemma_scan, "local structure detectors"),
    "theorem-check": (cmd_theorem_check, "structure theorem outcome"),
    "verify-trace": (cmd_verify_trace, "replay a weak degeneracy trace"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toruscolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", help="edge list file ('n m' then 'u v' lines) or graph6")
        p.add_argument("--graph6", action="store_true", help="read --graph as graph6")
        p.add_argument("--embedding", help="rotation system JSON")
        p.add_argument("--cover", help="cover JSON")
        p.add_argument("--trace", help="trace JSON")
        p.add_argument("--orientation", help="orientation file, one 'u > v' per line")
        p.add_argument("--config", choices=[c.value for c in ConfigurationId])
        p.add_argument("--k", type=int)
        p.add_argument("--bound", type=int, help="override the search bound")
        p.add_argument("--json", action="store_true", help="indented JSON output")
        p.add_argument("--epsilon", type=_fraction)
        p.add_argument("--eta", type=_fraction)
        p.add_argument("--rho", type=_fraction)
        p.add_argument("--no-hypotheses", action="store_true", help="lemma-scan: skip the hypothesis checks")
    return parser


def _emit(report, pretty: bool) -> None:
    if pretty:
        print(io.dumps(report))
    else:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn, _ = COMMANDS[args.command]
    try:
        report, code = fn(args)
    except HypothesisViolation as exc:
        report, code = {"error": "hypothesis", "name": exc.name, "detail": exc.detail}, EXIT_VIOLATION
    except SearchBoundExceeded as exc:
        report, code = {"error": "bound", "what": exc.what, "size": exc.size, "bound": exc.bound}, EXIT_BOUND
    except InputError as exc:
        report, code = {"error": "input", "message": str(exc)}, EXIT_INPUT
    _emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
