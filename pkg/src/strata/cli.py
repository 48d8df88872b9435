"""Command line interface.

One subcommand per capability: ``solve`` (labelings), ``stratify``
(stratified labelings), ``zrank`` (ranking table / tolerance partition),
``induce`` (world-level framework), ``bridge`` (ranking vs. peeling
check), ``check`` (ranking postulates), ``enforce`` (edit cost), ``dot``
(rank-colored graph), and ``report`` (CSV plus figure).

Exit codes: 0 on success, 1 when a bridge or property check fails, 2 on
usage, format, or input errors. ``--json`` switches any subcommand to a
stable JSON document with top-level keys command, input, and result.
The ``STRATA_BUDGET`` environment variable overrides the default ceiling
on enumerated stratified labelings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import stratified as stratified_mod
from .enforce import characteristic, conjecture_scan
from .errors import StrataError
from .formats import parse_af, parse_kb, print_af, to_dot
from .framework import ArgumentationFramework, Semantics, labelings
from .ordsem import PropertyTag, check_property
from .ranks import rank_json, rank_str
from .report import write_report
from .stratified import grounded_stratified, stratified_labelings
from .systemz import KnowledgeBase, bridge_check, induced_framework, z_partition, z_ranking

_SEMANTICS_CHOICES = [
    "complete", "grounded", "preferred", "stable", "semi-stable",
    "c", "gr", "p", "s", "ss",
]
_AF_FORMATS = ("apx", "tgf")


def _budget() -> int:
    raw = os.environ.get("STRATA_BUDGET")
    return int(raw) if raw else stratified_mod.DEFAULT_LIMIT


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _detect_format(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower().lstrip(".")
    if suffix in ("apx", "tgf", "kb"):
        return suffix
    raise StrataError(
        f"cannot tell the format of {path!r} from its extension; pass --format"
    )


def _load_af(args: argparse.Namespace) -> ArgumentationFramework:
    fmt = _detect_format(args.file, args.format)
    if fmt not in _AF_FORMATS:
        raise StrataError(f"{args.file!r} is not a framework file (format {fmt!r})")
    return parse_af(_read_input(args.file), fmt)


def _load_kb(args: argparse.Namespace) -> KnowledgeBase:
    fmt = _detect_format(args.file, args.format)
    if fmt != "kb":
        raise StrataError(f"{args.file!r} is not a knowledge base file (format {fmt!r})")
    return parse_kb(_read_input(args.file))


def _emit(args: argparse.Namespace, command: str, result: dict, text: str) -> None:
    if args.json:
        document = {"command": command, "input": args.file, "result": result}
        print(json.dumps(document, indent=2, sort_keys=True))
    elif text:
        print(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    af = _load_af(args)
    semantics = Semantics.from_string(args.sem)
    found = labelings(af, semantics)
    result = {
        "semantics": str(semantics),
        "labelings": [{a: str(l) for a, l in lab.items()} for lab in found],
    }
    _emit(args, "solve", result, "\n".join(str(lab) for lab in found))
    return 0


def _cmd_stratify(args: argparse.Namespace) -> int:
    af = _load_af(args)
    semantics = Semantics.from_string(args.sem)
    found = stratified_labelings(af, semantics, limit=_budget())
    result = {
        "semantics": str(semantics),
        "labelings": [{a: rank_json(r) for a, r in s.items()} for s in found],
    }
    _emit(args, "stratify", result, "\n".join(str(s) for s in found))
    return 0


def _cmd_zrank(args: argparse.Namespace) -> int:
    kb = _load_kb(args)
    partition = z_partition(kb)
    kappa = z_ranking(kb)
    result = {
        "ranks": [[w.name(), rank_json(r)] for w, r in kappa.items()],
        "partition": [[str(c) for c in stratum] for stratum in partition.strata],
    }
    if args.partition:
        text = "\n".join(
            f"{i}: " + " ".join(str(c) for c in stratum)
            for i, stratum in enumerate(partition.strata)
        )
    else:
        text = "\n".join(f"{w.name()}:{rank_str(r)}" for w, r in kappa.items())
    _emit(args, "zrank", result, text)
    return 0


def _cmd_induce(args: argparse.Namespace) -> int:
    kb = _load_kb(args)
    af = induced_framework(kb)
    result = {
        "arguments": sorted(af.arguments),
        "attacks": [list(pair) for pair in sorted(af.attacks)],
    }
    if args.out == "dot":
        kappa = z_ranking(kb)
        ranks = {w.name(): r for w, r in kappa.items()}
        text = to_dot(af, ranks).rstrip("\n")
    else:
        text = print_af(af, args.out).rstrip("\n")
    _emit(args, "induce", result, text)
    return 0


def _cmd_bridge(args: argparse.Namespace) -> int:
    kb = _load_kb(args)
    report = bridge_check(kb)
    result = {
        "holds": report.holds,
        "mismatches": [[name, rank_json(k), rank_json(s)] for name, k, s in report.mismatches],
        "worlds": len(report.world_ranks),
    }
    _emit(args, "bridge", result, str(report))
    return 0 if report.holds else 1


def _cmd_check(args: argparse.Namespace) -> int:
    af = _load_af(args)
    semantics = Semantics.from_string(args.sem)
    prop = PropertyTag(args.prop)
    report = check_property(
        af, semantics, prop, trials=args.trials, seed=args.seed, limit=_budget()
    )
    result = {
        "property": str(prop),
        "semantics": str(semantics),
        "holds": report.holds,
        "witness_pairs": [list(p) for p in report.witness_pairs()],
        "witnesses": [str(w) for w in report.witnesses],
    }
    _emit(args, "check", result, str(report))
    return 0 if report.holds else 1


def _cmd_enforce(args: argparse.Namespace) -> int:
    af = _load_af(args)
    semantics = Semantics.from_string(args.sem)
    targets = [t.strip() for t in args.target.split(",") if t.strip()]
    outcome = characteristic(af, semantics, targets, args.budget)
    result = {
        "targets": sorted(targets),
        "value": outcome.value,
        "budget": outcome.budget,
        "witness_edits": None
        if outcome.witness_edits is None
        else [list(pair) for pair in sorted(outcome.witness_edits)],
    }
    text = f"N({{{', '.join(sorted(targets))}}}) = {outcome}"
    if args.scan:
        pairs = conjecture_scan(af, semantics, args.budget, limit=_budget())
        result["scan"] = [list(p) for p in pairs]
        text += "\nscan: " + (
            " ".join(f"({a},{b})" for a, b in pairs) if pairs else "no pairs"
        )
    _emit(args, "enforce", result, text)
    return 0


def _cmd_dot(args: argparse.Namespace) -> int:
    af = _load_af(args)
    semantics = Semantics.from_string(args.sem)
    found = stratified_labelings(af, semantics, limit=_budget())
    if not found:
        raise StrataError(f"no stratified labelings under {semantics}; nothing to color")
    ranks = dict(found[0].items())
    text = to_dot(af, ranks).rstrip("\n")
    result = {"dot": text, "semantics": str(semantics)}
    _emit(args, "dot", result, text)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    fmt = _detect_format(args.file, args.format)
    semantics = Semantics.from_string(args.sem)
    if fmt == "kb":
        kb = parse_kb(_read_input(args.file))
        af = induced_framework(kb)
    else:
        af = parse_af(_read_input(args.file), fmt)
    if semantics is Semantics.GROUNDED:
        ranking = grounded_stratified(af)
    else:
        found = stratified_labelings(af, semantics, limit=_budget())
        if not found:
            raise StrataError(f"no stratified labelings under {semantics}; nothing to report")
        ranking = found[0]
    stem = Path(args.file).stem if args.file != "-" else "stdin"
    outdir = args.outdir or "."
    title = f"{stem} ({semantics})"
    csv_path, png_path = write_report(outdir, stem, af, ranking, title=title)
    result = {"csv": str(csv_path), "figure": str(png_path)}
    _emit(args, "report", result, f"wrote {csv_path}\nwrote {png_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strata",
        description="Labelings, stratified ranks, conditional ranking bridge, and enforcement costs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, *, sem: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--format", choices=("apx", "tgf", "kb"), help="override extension detection")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        if sem:
            p.add_argument("--sem", default="grounded", choices=_SEMANTICS_CHOICES, metavar="SEM",
                           help="semantics (complete|grounded|preferred|stable|semi-stable)")
        p.set_defaults(handler=handler)
        return p

    add("solve", _cmd_solve, "enumerate labelings", sem=True)
    add("stratify", _cmd_stratify, "enumerate stratified labelings", sem=True)

    p = add("zrank", _cmd_zrank, "ranking table of a knowledge base")
    p.add_argument("--partition", action="store_true", help="print the tolerance partition instead")

    p = add("induce", _cmd_induce, "world-level framework of a knowledge base")
    p.add_argument("--out", default="apx", choices=("apx", "tgf", "dot"), help="output format")

    add("bridge", _cmd_bridge, "check ranking against stratified peeling")

    p = add("check", _cmd_check, "check a ranking postulate", sem=True)
    p.add_argument("--prop", required=True, choices=[t.value for t in PropertyTag],
                   help="postulate tag")
    p.add_argument("--trials", type=int, default=50, help="renaming trials for ab")
    p.add_argument("--seed", type=int, default=0, help="random seed")

    p = add("enforce", _cmd_enforce, "minimal attack edits to accept targets", sem=True)
    p.add_argument("--target", required=True, help="comma-separated argument names")
    p.add_argument("--budget", type=int, default=3, help="edit search ceiling")
    p.add_argument("--scan", action="store_true",
                   help="also list cost/rank order disagreements over all argument pairs")

    add("dot", _cmd_dot, "rank-colored DOT graph", sem=True)

    p = add("report", _cmd_report, "write rank CSV and layered figure", sem=True)
    p.add_argument("--outdir", help="output directory (default: current)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse handles --help and usage errors
        return int(exit_.code or 0)
    try:
        return args.handler(args)
    except StrataError as err:
        print(f"strata: error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"strata: error: {err}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
