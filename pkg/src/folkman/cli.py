"""Command line interface: ``folkman <subcommand> ...``.

Exit status is 0 on success (or PASS), 1 when a verification fails and 2 on
usage or input errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .arrowing import (ArrowSpec, ArrowTuple, arrows, arrows_uni, reduced_tuples_for, tuples_for,
                       witness_classes)
from .canon import canonical_certificate
from .graph import (EXACT_CHI_CAP, Graph, bits, chromatic_number, clique_number, complement,
                    cycle_graph, complete_graph, independence_number)
from .graph6 import decode_graph6, encode_graph6, read_stage_file, write_stage_file
from .oracles import base_enumerate, brute_force_folkman
from .pipeline import (Manifest, load_expected, load_schedule, report_main_theorem, run_schedule,
                       verify_tables)
from .search import (AT_MOST_TWO, EXACTLY_TWO, UNRESTRICTED, ExtensionJob, edge_removal_closure,
                     extend_independent, is_plus_kt, maximal_ktfree_subsets)


def describe(g: Graph) -> str:
    """Short name for a few recognizable graphs, else its graph6 string."""
    cert = canonical_certificate(g)
    if cert == canonical_certificate(complete_graph(g.n)):
        return f"K{g.n}"
    if g.n >= 3:
        if cert == canonical_certificate(cycle_graph(g.n)):
            return f"C{g.n}"
        if cert == canonical_certificate(complement(cycle_graph(g.n))):
            return f"K{g.n}-C{g.n}"
    return encode_graph6(g)


def _pair(text: str) -> tuple[int, int]:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return parts[0], parts[1]


def _tuple(text: str) -> ArrowTuple:
    try:
        return ArrowTuple.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _read(path: str, lenient: bool) -> list[Graph]:
    if path == "-":
        return [decode_graph6(line, strict=not lenient) for line in sys.stdin if line.strip()]
    return read_stage_file(path, strict=not lenient)


def _emit(graphs: list[Graph], out: str | None) -> None:
    if out:
        write_stage_file(out, graphs)
        print(f"{len(graphs)} graphs written to {out}")
    else:
        for g in graphs:
            print(encode_graph6(g))
        print(f"# {len(graphs)} graphs", file=sys.stderr)


def cmd_props(args) -> int:
    for g in _read(args.file, args.lenient):
        chi = chromatic_number(g, args.chi_cap)
        print(f"{encode_graph6(g)} n={g.n} edges={g.num_edges()} omega={clique_number(g)} "
              f"alpha={independence_number(g)} chi={chi if chi is not None else 'unavailable'}")
    return 0


def cmd_arrow(args) -> int:
    if (args.tuple is None) == (args.uni is None):
        print("arrow: give exactly one of --tuple or --uni", file=sys.stderr)
        return 2
    for g in _read(args.file, args.lenient):
        if args.tuple is not None:
            flag, witness = arrows(g, args.tuple, chi_prune=args.chi_prune)
            line = f"{encode_graph6(g)} {str(flag).lower()}"
            if witness is not None:
                line += " witness " + " | ".join(
                    "{" + ",".join(map(str, cls)) + "}" for cls in witness_classes(witness))
        else:
            m, p = args.uni
            flag = arrows_uni(g, ArrowSpec(m, p), full_tuples=args.full_tuples)
            line = f"{encode_graph6(g)} {str(flag).lower()}"
        print(line)
    return 0


def cmd_tuples(args) -> int:
    m, p = args.uni
    for t in (tuples_for(m, p) if args.full else reduced_tuples_for(m, p)):
        print(t)
    return 0


def cmd_subsets(args) -> int:
    for g in _read(args.file, args.lenient):
        family = maximal_ktfree_subsets(g, args.t)
        print(f"{encode_graph6(g)} {len(family)} maximal K{args.t}-free subsets")
        for s in family:
            print("  {" + ",".join(map(str, bits(s))) + "}")
    return 0


def cmd_plus_kt(args) -> int:
    for g in _read(args.file, args.lenient):
        print(f"{encode_graph6(g)} {str(is_plus_kt(g, args.t)).lower()}")
    return 0


def _alpha_mode(args) -> str:
    if getattr(args, "alpha_le2", False):
        return AT_MOST_TWO
    return EXACTLY_TWO if args.alpha2 else UNRESTRICTED


def cmd_extend(args) -> int:
    seeds = _read(args.input, args.lenient)
    job = ExtensionJob(seeds, args.k, ArrowSpec(args.m, args.p), args.q, _alpha_mode(args))
    _emit(extend_independent(job, full_tuples=args.full_tuples), args.out)
    return 0


def cmd_closure(args) -> int:
    maximal = _read(args.input, args.lenient)
    plus_t = args.plus_t if args.plus_t else args.q - 1
    _emit(edge_removal_closure(maximal, ArrowSpec(args.m, args.p), args.q, plus_t,
                               _alpha_mode(args), full_tuples=args.full_tuples), args.out)
    return 0


def cmd_base(args) -> int:
    _emit(base_enumerate(ArrowSpec(args.m, args.p), args.q, args.n, args.plus_t,
                         _alpha_mode(args), full_tuples=args.full_tuples), args.out)
    return 0


def cmd_run(args) -> int:
    schedule = load_schedule(args.schedule)
    out = args.out or f"runs/{Path(args.schedule).stem}"
    manifest = run_schedule(schedule, out, resume=args.resume, until=args.until or (),
                            include_extended=args.extended, full_tuples=args.audit_full_tuples)
    for rec in manifest.records.values():
        s = rec.stage
        print(f"{s.id:14s} {s.kind:8s} {s.label:22s} {s.alpha_filter:4s} {rec.count:>9d}  {rec.seconds:8.1f}s")
    print(f"manifest: {manifest.path}")
    return 0


def cmd_verify(args) -> int:
    manifest = Manifest.load(args.manifest)
    report = verify_tables(manifest, load_expected(args.expected), strict=args.strict)
    print(report.text())
    return 0 if report.ok else 1


def cmd_brute(args) -> int:
    value, graphs = brute_force_folkman(args.tuple, args.q, args.nmax)
    if value is None:
        print(f"not found <= {args.nmax}")
        return 0
    names = ", ".join(describe(g) for g in graphs)
    noun = "graph" if len(graphs) == 1 else "graphs"
    print(f"value={value}, extremal={len(graphs)} {noun} ({names})")
    return 0


def cmd_report(args) -> int:
    manifests = [Manifest.load(p) for p in args.manifests]
    witness = _read(args.witness, args.lenient)[0] if args.witness else None
    rep = report_main_theorem(manifests, witness)
    print(rep.text() if rep.lines else "no emptiness results in the given manifests; no claims")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="folkman", description=__doc__)
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="graph6 file, one graph per line ('-' for stdin)")
        p.add_argument("--lenient", action="store_true", help="accept nonzero graph6 padding")
        p.set_defaults(fn=fn)
        return p

    p = with_file("props", cmd_props, "clique, independence and chromatic numbers")
    p.add_argument("--chi-cap", type=int, default=EXACT_CHI_CAP)

    p = with_file("arrow", cmd_arrow, "decide G -> (a_1,...,a_s) or G -> m|p")
    p.add_argument("--tuple", type=_tuple, help="e.g. 6,3")
    p.add_argument("--uni", type=_pair, help="m,p")
    p.add_argument("--full-tuples", action="store_true", help="check every tuple, not only merge-maximal ones")
    p.add_argument("--chi-prune", action="store_true")

    p = sub.add_parser("tuples", help="list the tuples behind m|p")
    p.add_argument("--uni", type=_pair, required=True, help="m,p")
    p.add_argument("--full", action="store_true")
    p.set_defaults(fn=cmd_tuples)

    p = with_file("subsets", cmd_subsets, "maximal K_t-free vertex subsets")
    p.add_argument("--t", type=int, required=True)

    p = with_file("plus-kt", cmd_plus_kt, "test the (+K_t) property")
    p.add_argument("--t", type=int, required=True)

    def class_args(p, need_n=False):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--alpha2", action="store_true", help="independence number exactly 2")
        p.add_argument("--full-tuples", action="store_true")
        p.add_argument("--out", help="write a canonical stage file instead of printing")

    p = sub.add_parser("extend", help="add k independent vertices to (+K_{q-1}) seeds")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lenient", action="store_true")
    class_args(p)
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("closure", help="(+K_t)-graphs below the given maximal graphs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--plus-t", type=int, default=0, help="defaults to q - 1")
    p.add_argument("--lenient", action="store_true")
    class_args(p)
    p.set_defaults(fn=cmd_closure)

    p = sub.add_parser("base", help="exhaustive (+K_t)-graphs of a small class")
    class_args(p, need_n=True)
    p.add_argument("--plus-t", type=int, required=True)
    p.add_argument("--alpha-le2", action="store_true", help="independence number at most 2")
    p.set_defaults(fn=cmd_base)

    p = sub.add_parser("run", help="run a stage schedule")
    p.add_argument("--schedule", required=True, help="schedule file or bundled name (sec4.cfg, sec5_m9.cfg, ...)")
    p.add_argument("--out", help="output directory (default runs/<schedule>)")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--until", action="append", help="class label or stage id; may repeat")
    p.add_argument("--extended", action="store_true", help="include stages marked extended")
    p.add_argument("--audit-full-tuples", action="store_true")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("verify", help="compare a manifest with expected counts")
    p.add_argument("--manifest", required=True)
    p.add_argument("--expected", required=True, help="table file or bundled name (table1.tbl, ...)")
    p.add_argument("--strict", action="store_true", help="rows that were not run are errors")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("brute", help="exhaustive F_v(a_1..a_s; q) for tiny orders")
    p.add_argument("--tuple", type=_tuple, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(fn=cmd_brute)

    p = sub.add_parser("report", help="chain of results behind wFv(m|6; m-1) = m + 10")
    p.add_argument("--manifests", nargs="*", default=[])
    p.add_argument("--witness", help="graph6 file whose first graph is an 18-vertex witness")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(fn=cmd_report)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(asctime)s %(name)s %(message)s")
    try:
        return args.fn(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"folkman {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
