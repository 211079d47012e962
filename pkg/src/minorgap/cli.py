"""Command-line front end.

All subcommands are randomless and produce byte-identical output for
identical invocations.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import classify_connected
from .cache import SpectrumCache, default_cache_dir
from .canon import canonical_form
from .errors import BadParams, MalformedGraph6, MinorgapError
from .families import (
    ConstructionRecipe,
    build_family,
    certify,
    k5_witnesses_14,
)
from .graph import Graph, named_graph
from .graph6 import graph6_decode, graph6_encode
from .minor import ForbiddenSet, find_minor_model, verify_model
from .spectrum import edge_spectrum, enumerate_free
from .version import __version__


def parse_graph_spec(spec: str) -> Graph:
    """A named graph (k5, claw, wagner, ...) or raw graph6."""
    try:
        return named_graph(spec)
    except MinorgapError:
        pass
    try:
        return graph6_decode(spec)
    except MalformedGraph6:
        raise BadParams(
            f"{spec!r} is neither a known graph name nor valid graph6"
        ) from None


def parse_forbidden(spec: str) -> ForbiddenSet:
    return ForbiddenSet(parse_graph_spec(p) for p in spec.split(",") if p)


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        for part in item.split(","):
            if not part:
                continue
            if "=" not in part:
                raise MinorgapError(f"bad param {part!r}, expected name=value")
            k, v = part.split("=", 1)
            params[k] = int(v) if v.lstrip("-").isdigit() else v
    return params


def _cache(args):
    root = getattr(args, "cache", None) or default_cache_dir()
    return SpectrumCache(root) if root else None


def _spectrum(args, out):
    f = parse_forbidden(args.forbid)
    sp = edge_spectrum(
        args.n, f, force=args.force, jobs=args.jobs, cache=_cache(args)
    )
    if args.json:
        out.write(json.dumps(sp.to_json_obj(), indent=2, sort_keys=True) + "\n")
    else:
        body = ", ".join(str(e) for e in sp.spectrum)
        out.write(f"E = {{{body}}}, gap = {sp.gap}\n")
    return 0


def _gap(args, out):
    f = parse_forbidden(args.forbid)
    sp = edge_spectrum(
        args.n, f, force=args.force, jobs=args.jobs, cache=_cache(args)
    )
    out.write(f"{sp.gap}\n")
    return 0


def _enumerate(args, out):
    f = parse_forbidden(args.forbid)
    graphs = enumerate_free(args.n, f, force=args.force, jobs=args.jobs)
    for form in sorted(canonical_form(g) for g in graphs):
        out.write(form.decode("ascii") + "\n")
    return 0


def _construct(args, out):
    recipe = ConstructionRecipe(args.family, _parse_params(args.params))
    g, predicted = build_family(recipe)
    out.write(graph6_encode(g).decode("ascii") + "\n")
    out.write(f"vertices = {g.n}, edges = {g.num_edges}, predicted = {predicted}\n")
    return 0


def _certify(args, out):
    if args.family:
        g, predicted = build_family(
            ConstructionRecipe(args.family, _parse_params(args.params))
        )
    else:
        if not args.graph:
            raise MinorgapError("need --graph or --family")
        g = parse_graph_spec(args.graph)
        predicted = g.num_edges
    if args.predicted is not None:
        predicted = args.predicted
    f = parse_forbidden(args.forbid)
    cert = certify(g, f, predicted, force=args.force)
    out.write(json.dumps(cert.to_json_obj(), indent=2, sort_keys=True) + "\n")
    return 0


def _classify(args, out):
    verdict = classify_connected(parse_graph_spec(args.minor))
    line = verdict.verdict
    if verdict.known_gap is not None:
        line += f", gap = {verdict.known_gap}"
    if verdict.limp_lower_bound is not None:
        line += f", limp >= {verdict.limp_lower_bound}"
    out.write(line + "\n")
    out.write(f"basis: {verdict.basis}\n")
    return 0


def _minor(args, out):
    g = parse_graph_spec(args.graph)
    h = parse_graph_spec(args.minor)
    model = find_minor_model(g, h)
    if model is None:
        out.write("no minor\n")
    else:
        out.write("minor found\n")
        out.write(json.dumps(model.to_json_obj(g, h), sort_keys=True) + "\n")
    return 0


def _verify_battery(args, out):
    """Golden-value battery over the built-in known results."""
    failures = 0

    def check(label, got, want):
        nonlocal failures
        ok = got == want
        if not ok:
            failures += 1
        out.write(f"{'ok  ' if ok else 'FAIL'} {label}: {got!r}"
                  + ("" if ok else f" (expected {want!r})") + "\n")

    cache = _cache(args)
    k5 = ForbiddenSet([named_graph("k5")])
    sp = edge_spectrum(8, k5, jobs=args.jobs, cache=cache)
    check("k5 spectrum at n=8", sp.spectrum, (12, 18))
    for name in ("k2", "k3", "k4", "p3"):
        f = ForbiddenSet([named_graph(name)])
        gaps = [edge_spectrum(n, f, cache=cache).gap for n in range(2, 8)]
        check(f"{name} gaps n=2..7", gaps, [0] * 6)
    for name in ("claw", "pan"):
        f = ForbiddenSet([named_graph(name)])
        gaps = [edge_spectrum(n, f, cache=cache).gap for n in range(4, 8)]
        check(f"{name} gaps n=4..7", gaps, [1] * 4)
    f = ForbiddenSet([named_graph("h2")])
    rows = [edge_spectrum(n, f, cache=cache) for n in range(6, 9)]
    check("h2 gaps n=6..8", [sp.gap for sp in rows], [n - 3 for n in range(6, 9)])
    check("h2 extremes n=6..8",
          [(sp.m_minus, sp.m_plus) for sp in rows],
          [(n, 2 * n - 3) for n in range(6, 9)])
    witnesses = k5_witnesses_14()
    check("14-vertex k5 witness edge counts", sorted(witnesses),
          [23, 24, 25, 26, 27, 28, 29, 36])
    g, e = build_family(ConstructionRecipe("F2", {"k": 2}))
    cert = certify(g, k5, e)
    ok = all(
        verify_model(_with_edge(g, uv), k5.minors[idx], model)
        for uv, idx, model in cert.maximality
    )
    check("wagner chain k=2 certificate models", ok, True)
    out.write(("all checks passed" if not failures else
               f"{failures} check(s) failed") + "\n")
    return 1 if failures else 0


def _with_edge(g: Graph, uv) -> Graph:
    u, v = uv
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minorgap",
        description="Edge-maximal minor-free graphs: spectra, constructions, "
        "certification.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, forbid=True):
        if forbid:
            p.add_argument("--forbid", required=True,
                           help="comma-separated graph names or graph6")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        p.add_argument("--force", action="store_true",
                       help="override size guards")
        p.add_argument("--cache", help="cache directory "
                       "(default: $MINORGAP_CACHE_DIR)")

    p = sub.add_parser("spectrum", help="edge spectrum of maximal free graphs")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=_spectrum)

    p = sub.add_parser("gap", help="max minus min of the edge spectrum")
    p.add_argument("-n", type=int, required=True)
    common(p)
    p.set_defaults(func=_gap)

    p = sub.add_parser("enumerate", help="all free graphs, one per class")
    p.add_argument("-n", type=int, required=True)
    common(p)
    p.set_defaults(func=_enumerate)

    p = sub.add_parser("construct", help="build a parametric family member")
    p.add_argument("--family", required=True)
    p.add_argument("--params", action="append", default=[],
                   help="name=value[,name=value...]")
    p.set_defaults(func=_construct)

    p = sub.add_parser("certify", help="certify edge-maximal freeness")
    p.add_argument("--graph", "-g", help="graph name or graph6")
    p.add_argument("--family")
    p.add_argument("--params", action="append", default=[])
    p.add_argument("--predicted", type=int)
    common(p)
    p.set_defaults(func=_certify)

    p = sub.add_parser("classify", help="purity verdict for a connected minor")
    p.add_argument("--minor", required=True)
    p.set_defaults(func=_classify)

    p = sub.add_parser("verify-paper",
                       help="run the built-in golden-value battery")
    common(p, forbid=False)
    p.set_defaults(func=_verify_battery)

    p = sub.add_parser("minor", add_help=False,
                       help="test minor containment")
    p.add_argument("--help", action="help")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-h", "--minor", required=True)
    p.set_defaults(func=_minor)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except BadParams as ex:
        print(f"usage error: {ex}", file=sys.stderr)
        return 2
    except MinorgapError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
