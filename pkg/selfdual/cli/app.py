#!/usr/bin/env python3
"""
Command-line front door for the self-dual polytope toolkit.

Examples:
    selfdual construct p-of-t --tuple 6,6
    selfdual construct s --x 7 --y 5 --format graph6
    selfdual verify --self-dual --file m.json
    selfdual verify --lemma-leaf --tuple 6,5,6
    selfdual enumerate --sequence 4,4,3,3,3,3 --self-dual
    selfdual fingerprint gp --p 9 --h3
    selfdual suite --quick
"""

import argparse
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, Field
from rich.console import Console
from rich.table import Table

from selfdual.cli.families import Built, Family, build_family
from selfdual.cli.suite import run_suite
from selfdual.config import settings
from selfdual.errors import ExitCode, InvalidParameter, NotPolyhedral, SelfDualError
from selfdual.log import configure_logger
from selfdual.planar_map import DegreeMode, DegreeSequence, is_polyhedral_map, radial
from selfdual.planar_map.io import map_from_json, map_from_text, map_to_json, map_to_text, to_dot, to_graph6
from selfdual.verify import (
    EnumerationQuery,
    check_lemma_leaf,
    check_phi,
    degree_fingerprint,
    enumerate_realizations,
    self_dual_witness,
)

console = Console()
err_console = Console(stderr=True)

FORMATS = ("json-map", "graph6", "dot", "text")


class CommandReport(BaseModel):
    command: str = Field(..., description="Subcommand that produced the report")
    ok: bool = Field(..., description="Whether every requested check passed")
    exit_code: int = Field(..., description="Process exit status")
    details: dict[str, Any] = Field(default_factory=dict, description="Command-specific results")


# ---------------------------------------------------------------------- parser


def _family_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("family", nargs=None if required else "?", choices=[f.value for f in Family], help="family")
    parser.add_argument("--tuple", dest="tuple_text", help="degree tuple for p-of-t, e.g. 6,5,6")
    parser.add_argument("--x", type=int, help="x for s / q")
    parser.add_argument("--y", type=int, help="y for s / q")
    parser.add_argument("--p", type=int, help="order for gp")
    parser.add_argument("--n", type=int, help="n for pprime")
    parser.add_argument("--k", type=int, help="k for pprime")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfdual",
        description="Self-dual 3-polytopes with prescribed degree sequences",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--seed", type=int, default=None, help=f"seed for randomised checks (default: {settings.SELFDUAL_SEED})")
    parser.add_argument("--report", type=Path, help="write a JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a polyhedron from one of the families")
    _family_arguments(construct, required=True)
    construct.add_argument("--format", choices=FORMATS, default="json-map", help="output format (default: json-map)")
    construct.add_argument("--output", type=Path, help="write to a file instead of stdout")

    verify = sub.add_parser("verify", help="check properties of a constructed or loaded map")
    _family_arguments(verify, required=False)
    verify.add_argument("--file", type=Path, help="json-map (.json) or text map to load")
    verify.add_argument("--self-dual", action="store_true", help="self-duality, printing the witnessing bijection")
    verify.add_argument("--polyhedral", action="store_true", help="simple and 3-connected")
    verify.add_argument("--lemma-leaf", action="store_true", help="adjacency of the high-degree vertices of P(T)")
    verify.add_argument("--phi", action="store_true", help="v_i -> f_i is an isomorphism on the radial of P(T)")

    enumerate_ = sub.add_parser("enumerate", help="all realisations of a degree sequence")
    enumerate_.add_argument("--sequence", required=True, help="degree sequence, e.g. 4,4,3,3,3,3 or 4^2,3^4")
    enumerate_.add_argument("--planar", action="store_true")
    enumerate_.add_argument("--three-connected", action="store_true")
    enumerate_.add_argument("--self-dual", action="store_true")
    enumerate_.add_argument("--limit", type=int, help="stop after this many classes")
    enumerate_.add_argument("--order-cap", type=int, help=f"largest order (default: {settings.SELFDUAL_ORDER_CAP})")
    enumerate_.add_argument("--workers", type=int, help="worker processes")

    fingerprint = sub.add_parser("fingerprint", help="components of H3 or H+")
    _family_arguments(fingerprint, required=False)
    fingerprint.add_argument("--file", type=Path, help="json-map (.json) or text map to load")
    mode = fingerprint.add_mutually_exclusive_group(required=True)
    mode.add_argument("--h3", action="store_true", help="vertices of degree exactly 3")
    mode.add_argument("--hplus", action="store_true", help="vertices of degree at least 4")
    fingerprint.add_argument("--radial", action="store_true", help="take the subgraph of the radial graph")

    suite = sub.add_parser("suite", help="run the acceptance criteria")
    suite.add_argument("--quick", action="store_true", help="smaller exhaustive ranges")
    suite.add_argument("--only", type=int, action="append", help="run only this criterion (repeatable)")
    return parser


# ---------------------------------------------------------------------- commands


def _load(args: argparse.Namespace) -> Built:
    if getattr(args, "file", None) is not None:
        if not args.file.is_file():
            raise InvalidParameter(f"no such map file: {args.file}")
        text = args.file.read_text(encoding="utf-8")
        m = map_from_json(text) if args.file.suffix == ".json" else map_from_text(text)
        return Built(args.file.name, m)
    family = args.family
    if family is None and args.tuple_text is not None:
        family = Family.P_OF_T
    if family is None:
        raise SelfDualError("give a family, --tuple or --file")
    return build_family(family, args.tuple_text, args.x, args.y, args.p, args.n, args.k)


def _render(built: Built, fmt: str) -> str:
    if fmt == "json-map":
        return map_to_json(built.map, built.name) + "\n"
    if fmt == "graph6":
        return to_graph6(built.map.underlying()) + "\n"
    if fmt == "dot":
        return to_dot(built.map.underlying(), built.name)
    return map_to_text(built.map)


def cmd_construct(args: argparse.Namespace) -> CommandReport:
    built = _load(args)
    artifact = _render(built, args.format)
    if args.output is not None:
        args.output.write_text(artifact, encoding="utf-8")
        err_console.print(f"[green]wrote {built.name} to {args.output}[/green]")
    else:
        sys.stdout.write(artifact)
    details = {"name": built.name, "vertices": built.map.num_vertices, "edges": built.map.num_edges}
    return CommandReport(command="construct", ok=True, exit_code=ExitCode.OK, details=details)


def cmd_verify(args: argparse.Namespace) -> CommandReport:
    if not (args.self_dual or args.polyhedral or args.lemma_leaf or args.phi):
        args.self_dual = True
    built = _load(args)
    table = Table(title=f"verify {built.name}")
    table.add_column("check", style="cyan")
    table.add_column("result", style="magenta")
    results: dict[str, Any] = {}

    if args.polyhedral:
        results["polyhedral"] = is_polyhedral_map(built.map)
    if args.self_dual:
        try:
            witness = self_dual_witness(built.map)
        except NotPolyhedral:
            results["polyhedral"] = False
            witness = None
        results["self_dual"] = witness is not None
        if witness is not None:
            dual_names = {f: f"f{f + 1}" for f in witness.values()}
            results["bijection"] = {built.map.label(v): dual_names[f] for v, f in sorted(witness.items())}
    if args.lemma_leaf or args.phi:
        if built.degree_tuple is None or built.radial is None:
            raise SelfDualError("--lemma-leaf and --phi need the p-of-t family with --tuple")
        if args.lemma_leaf:
            results["lemma_leaf"] = check_lemma_leaf(built.degree_tuple, built.map)
        if args.phi:
            results["phi"] = check_phi(built.radial)

    verdicts = {name: value for name, value in results.items() if isinstance(value, bool)}
    for name, value in verdicts.items():
        table.add_row(name, "[green]pass[/green]" if value else "[red]fail[/red]")
    console.print(table)
    if "bijection" in results:
        console.print("bijection: " + ", ".join(f"{v}->{f}" for v, f in results["bijection"].items()))
    ok = all(verdicts.values())
    code = ExitCode.OK if ok else ExitCode.VERIFICATION_FAILED
    return CommandReport(command="verify", ok=ok, exit_code=code, details={"name": built.name, **results})


def cmd_enumerate(args: argparse.Namespace) -> CommandReport:
    query = EnumerationQuery.of(
        DegreeSequence.parse(args.sequence),
        planar=args.planar,
        three_connected=args.three_connected,
        self_dual=args.self_dual,
        limit=args.limit,
    )
    found = enumerate_realizations(query, order_cap=args.order_cap, workers=args.workers)
    for canon in found:
        sys.stdout.write(canon.decode("ascii") + "\n")
    console.print(f"[bold]{len(found)}[/bold] classes for {query.describe()}", highlight=False)
    details = {"query": query.model_dump(), "count": len(found), "graph6": [c.decode("ascii") for c in found]}
    return CommandReport(command="enumerate", ok=True, exit_code=ExitCode.OK, details=details)


def cmd_fingerprint(args: argparse.Namespace) -> CommandReport:
    built = _load(args)
    mode = DegreeMode.EXACTLY_3 if args.h3 else DegreeMode.AT_LEAST_4
    target = built.map
    if args.radial:
        target = radial(built.map).map
    fp = degree_fingerprint(target, mode)
    table = Table(title=f"{'H3' if args.h3 else 'H+'}{' of the radial' if args.radial else ''} of {built.name}")
    for column in ("component", "order", "size", "degrees", "end vertices"):
        table.add_column(column)
    for c in fp.components:
        table.add_row(c.name(), str(c.order), str(c.size), ",".join(map(str, c.degrees)), str(c.end_vertices))
    console.print(table)
    console.print(f"fingerprint: {fp.describe()}", highlight=False)
    details = {"name": built.name, "mode": mode.value, "radial": args.radial, "fingerprint": fp.describe()}
    return CommandReport(command="fingerprint", ok=True, exit_code=ExitCode.OK, details=details)


def cmd_suite(args: argparse.Namespace) -> CommandReport:
    results = run_suite(quick=args.quick, seed=args.seed, only=args.only)
    table = Table(title="acceptance suite" + (" (quick)" if args.quick else ""))
    table.add_column("#", style="cyan")
    table.add_column("criterion")
    table.add_column("result")
    table.add_column("detail", style="dim")
    table.add_column("seconds", justify="right")
    for r in results:
        verdict = "[green]pass[/green]" if r.passed else "[red]FAIL[/red]"
        table.add_row(str(r.number), r.title, verdict, r.detail, f"{r.seconds:.2f}")
    console.print(table)
    ok = all(r.passed for r in results)
    details = {"criteria": [asdict(r) for r in results]}
    code = ExitCode.OK if ok else ExitCode.VERIFICATION_FAILED
    return CommandReport(command="suite", ok=ok, exit_code=code, details=details)


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "fingerprint": cmd_fingerprint,
    "suite": cmd_suite,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCode.OK if exc.code == 0 else ExitCode.BAD_ARGUMENTS

    configure_logger(level="DEBUG" if args.verbose else None)
    try:
        settings.validate_all()
        report = COMMANDS[args.command](args)
    except (SelfDualError, ValueError, OSError) as exc:
        err_console.print(f"[red]{type(exc).__name__}: {exc}[/red]")
        logger.debug("command {} rejected its arguments", args.command)
        report = CommandReport(
            command=args.command, ok=False, exit_code=ExitCode.BAD_ARGUMENTS, details={"error": str(exc)}
        )

    if args.report is not None:
        args.report.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    return report.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
