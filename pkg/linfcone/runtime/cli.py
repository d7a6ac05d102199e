# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/runtime/cli.py
"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a report has
violations, 2 for malformed input or failed preconditions, 3 when a
truncation would be exceeded, 4 for any other failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from linfcone.core.algebra import DGLAMorphism, check_dgla
from linfcone.core.artin import ArtinAlgebra, check_artin, truncated_polynomial
from linfcone.core.cone import bernoulli, cone_linfty
from linfcone.core.deformation import PairDeformations
from linfcone.core.errors import ArgumentError, LinfconeError
from linfcone.core.fixtures import FIXTURES, fixture
from linfcone.core.formats import (
    artin_from_dict,
    brackets_from_dict,
    brackets_to_dict,
    dgla_from_dict,
    dump_document,
    error_to_dict,
    load_document,
    morphism_from_dict,
    morphism_to_dict,
    pair_from_dict,
    pair_to_dict,
    path_to_dict,
    reports_document,
    witness_from_dict,
    witness_to_dict,
)
from linfcone.core.graded import format_scalar
from linfcone.core.linfty import LInftyStructure, check_linfty, compare_structures
from linfcone.core.reports import Report, fingerprint
from linfcone.core.transfer import transfer_recursive, tree_sum_structure
from linfcone.runtime.config import (
    CLI_THEME,
    LOG_LEVELS,
    OUTPUT_FORMATS,
    Settings,
    configure_logging,
)

logger = logging.getLogger(__name__)

console = Console(theme=CLI_THEME, highlight=False)

MAX_ROWS = 20
EXIT_INTERNAL = 4


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _format_report_table(report: Report) -> Table:
    """First violations of a report as a Rich table."""
    table = Table(show_header=True, header_style="header", border_style="prompt")
    table.add_column("Kind", style="info", no_wrap=True)
    table.add_column("Witness", no_wrap=False, overflow="fold")
    table.add_column("Residual", style="dim", overflow="fold")
    for v in report.violations[:MAX_ROWS]:
        residual = v.to_dict()["residual"]
        table.add_row(v.kind, " ".join(v.witness), "" if residual is None else str(residual))
    return table


def _emit_reports(settings: Settings, reports: Sequence[Report], extra: Optional[Dict] = None) -> int:
    ok = all(r.ok for r in reports)
    if settings.output_format == "json":
        doc = reports_document(reports)
        if extra:
            doc = {**extra, **doc}
        sys.stdout.write(dump_document(doc))
    else:
        for report in reports:
            style = "success" if report.ok else "error"
            verdict = "ok" if report.ok else f"{len(report)} violations"
            console.print(
                f"[header]{report.check}[/header]: [{style}]{verdict}[/{style}] "
                f"([number]{report.checked}[/number] checked, digest {report.to_dict()['digest']})"
            )
            if not report.ok:
                console.print(_format_report_table(report))
    return 0 if ok else 1


def _format_brackets_table(doc: Dict[str, Any]) -> Table:
    table = Table(show_header=True, header_style="header", border_style="prompt")
    table.add_column("k", style="number", justify="right")
    table.add_column("Inputs", style="info", overflow="fold")
    table.add_column("Output", overflow="fold")
    for k, entries in doc["brackets"].items():
        for entry in entries:
            output = " + ".join(f"{c}*{n}" for n, c in entry["output"].items())
            table.add_row(k, " ".join(entry["inputs"]), output)
    return table


def _emit_document(settings: Settings, doc: Dict[str, Any], render: Callable[[], None]) -> None:
    if settings.output_format == "json":
        sys.stdout.write(dump_document(doc))
    else:
        render()


# ---------------------------------------------------------------------------
# Input resolution
# ---------------------------------------------------------------------------


def _load_morphism(args: argparse.Namespace) -> DGLAMorphism:
    if getattr(args, "fixture", None):
        return fixture(args.fixture)
    if getattr(args, "input", None):
        return morphism_from_dict(load_document(args.input))
    raise ArgumentError("give --fixture NAME or --input FILE")


def _load_artin(args: argparse.Namespace) -> ArtinAlgebra:
    if getattr(args, "artin", None):
        artin = artin_from_dict(load_document(args.artin))
        report = check_artin(artin)
        if not report.ok:
            raise ArgumentError(f"Artin table is inconsistent: {report.kinds()}")
        return artin
    return truncated_polynomial(args.truncated)


def _deformations(args: argparse.Namespace) -> PairDeformations:
    return PairDeformations(_load_morphism(args), _load_artin(args))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def handle_check_dgla(args: argparse.Namespace, settings: Settings) -> int:
    doc = load_document(args.file)
    if isinstance(doc, dict) and "map" in doc:
        chi = morphism_from_dict(doc)
        reports = [check_dgla(chi.source), check_dgla(chi.target), chi.check()]
    else:
        reports = [check_dgla(dgla_from_dict(doc))]
    return _emit_reports(settings, reports)


def handle_cone(args: argparse.Namespace, settings: Settings) -> int:
    chi = _load_morphism(args)
    structure = cone_linfty(chi, settings.max_arity)
    doc = brackets_to_dict(structure)

    def render() -> None:
        console.print(
            f"[header]cone[/header] dims {structure.space.dims()} "
            f"max arity [number]{settings.max_arity}[/number]"
        )
        console.print(_format_brackets_table(doc))
        console.print(f"digest {doc['digest']}")

    _emit_document(settings, doc, render)
    return 0


def handle_compare_transfer(args: argparse.Namespace, settings: Settings) -> int:
    chi = _load_morphism(args)
    n = settings.max_arity
    cap = n + settings.cap_slack
    closed = cone_linfty(chi, max(n, 2))
    recursive = transfer_recursive(chi, max(n, 2), cap).structure
    trees = tree_sum_structure(chi, max(n, 2), cap)
    reports = [
        compare_structures(closed, recursive, n),
        compare_structures(closed, trees, n),
    ]
    status = _emit_reports(settings, reports)
    if settings.output_format == "text" and status == 0:
        console.print("[success]all brackets agree[/success]")
    logger.info("compare-transfer: status %d", status)
    return status


def handle_check_linfty(args: argparse.Namespace, settings: Settings) -> int:
    up_to = settings.up_to
    structure: LInftyStructure
    if args.brackets:
        structure = brackets_from_dict(load_document(args.brackets))
        up_to = min(up_to, structure.max_arity)
    else:
        structure = cone_linfty(_load_morphism(args), max(up_to, 2))
    return _emit_reports(settings, [check_linfty(structure, up_to)])


def handle_bernoulli(args: argparse.Namespace, settings: Settings) -> int:
    table = bernoulli(args.n)
    rows = []
    for k in range(1, table.size + 1):
        rows.append(
            {
                "n": k,
                "B": format_scalar(table.B[k]),
                "B/n!": format_scalar(-table.I[k]),
            }
        )
    doc = {"bernoulli": rows}
    doc["digest"] = fingerprint(doc)

    def render() -> None:
        out = Table(show_header=True, header_style="header", border_style="prompt")
        out.add_column("n", style="number", justify="right")
        out.add_column("B_n", justify="right")
        out.add_column("B_n/n!", justify="right")
        for row in rows:
            out.add_row(str(row["n"]), row["B"], row["B/n!"])
        console.print(out)

    _emit_document(settings, doc, render)
    return 0


def handle_mc_check(args: argparse.Namespace, settings: Settings) -> int:
    deformations = _deformations(args)
    pair = pair_from_dict(deformations, load_document(args.pair))
    residue = deformations.closed_residue(pair)
    ok = deformations.mc_pair_check(pair)
    report = Report("mc_pair", checked=1)
    if not ok:
        report.add("residue", tuple(residue.to_dict()), residue)
    return _emit_reports(settings, [report], {"pair": pair_to_dict(deformations, pair)})


def handle_gauge_check(args: argparse.Namespace, settings: Settings) -> int:
    deformations = _deformations(args)
    p0 = pair_from_dict(deformations, load_document(args.pair0))
    p1 = pair_from_dict(deformations, load_document(args.pair1))
    w = witness_from_dict(deformations, load_document(args.witness))
    report = Report("gauge", checked=1)
    if not deformations.gauge_equiv_check(p0, p1, w):
        image = deformations.gauge_pair_act(w, p0)
        report.add("image", ("x", "a"), pair_to_dict(deformations, image))
    return _emit_reports(settings, [report])


def handle_homotopy_build(args: argparse.Namespace, settings: Settings) -> int:
    deformations = _deformations(args)
    p0 = pair_from_dict(deformations, load_document(args.pair))
    w = witness_from_dict(deformations, load_document(args.witness))
    path = deformations.homotopy_from_gauge(p0, w, args.cap)
    report = Report("homotopy", checked=3)
    if not deformations.path_is_mc(path):
        report.add("path_residue", ("l", "m"))
    end = path.at(1)
    if end != deformations.gauge_pair_act(w, p0):
        report.add("endpoint", ("1",), pair_to_dict(deformations, end))
    recovered = deformations.gauge_from_homotopy(path) if report.ok else None
    if recovered is not None and not deformations.gauge_equiv_check(p0, end, recovered):
        report.add("recovered_witness", ("a", "b"), witness_to_dict(deformations, recovered))
    extra: Dict[str, Any] = {"path": path_to_dict(deformations, path)}
    if recovered is not None:
        extra["recovered"] = witness_to_dict(deformations, recovered)
    return _emit_reports(settings, [report], extra)


def handle_fixtures(args: argparse.Namespace, settings: Settings) -> int:
    if args.name:
        doc = morphism_to_dict(fixture(args.name))
        sys.stdout.write(dump_document(doc))
        return 0
    if settings.output_format == "json":
        doc = {"fixtures": [{"name": f.name, "description": f.description} for f in FIXTURES.values()]}
        sys.stdout.write(dump_document(doc))
        return 0
    table = Table(show_header=True, header_style="header", border_style="prompt")
    table.add_column("Name", style="info", no_wrap=True)
    table.add_column("Description")
    for f in FIXTURES.values():
        table.add_row(f.name, f.description)
    console.print(table)
    return 0


HANDLERS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "check-dgla": handle_check_dgla,
    "cone": handle_cone,
    "compare-transfer": handle_compare_transfer,
    "check-linfty": handle_check_linfty,
    "bernoulli": handle_bernoulli,
    "mc-check": handle_mc_check,
    "gauge-check": handle_gauge_check,
    "homotopy-build": handle_homotopy_build,
    "fixtures": handle_fixtures,
}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS)
    parser.add_argument(
        "--log-level", dest="log_level", type=str.upper, choices=LOG_LEVELS
    )


def _add_morphism(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--fixture", choices=sorted(FIXTURES), help="named DGLA pair")
    source.add_argument("--input", help="morphism document (JSON)")


def _add_artin(parser: argparse.ArgumentParser) -> None:
    ring = parser.add_mutually_exclusive_group()
    ring.add_argument("--artin", help="Artin ring document (JSON)")
    ring.add_argument(
        "--truncated", type=int, default=2, help="use K[e]/(e^K) (default 2)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linfcone",
        description="L-infinity structures on mapping cones of DGLA morphisms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-dgla", help="verify the DGLA axioms of a document")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("cone", help="closed-form cone brackets")
    _add_morphism(p)
    p.add_argument("--max-arity", dest="max_arity", type=int)
    _add_common(p)

    p = sub.add_parser("compare-transfer", help="closed form vs recursive transfer vs trees")
    _add_morphism(p)
    p.add_argument("--max-arity", dest="max_arity", type=int)
    p.add_argument("--cap-slack", dest="cap_slack", type=int)
    _add_common(p)

    p = sub.add_parser("check-linfty", help="L-infinity relations up to an arity")
    _add_morphism(p)
    p.add_argument("--brackets", help="bracket document (JSON)")
    p.add_argument("--up-to", dest="up_to", type=int)
    _add_common(p)

    p = sub.add_parser("bernoulli", help="Bernoulli numbers from the integral recursion")
    p.add_argument("--n", type=int, default=8)
    _add_common(p)

    p = sub.add_parser("mc-check", help="Maurer-Cartan test for a pair (x, a)")
    _add_morphism(p)
    _add_artin(p)
    p.add_argument("--pair", required=True)
    _add_common(p)

    p = sub.add_parser("gauge-check", help="test a gauge witness between two pairs")
    _add_morphism(p)
    _add_artin(p)
    p.add_argument("--pair0", required=True)
    p.add_argument("--pair1", required=True)
    p.add_argument("--witness", required=True)
    _add_common(p)

    p = sub.add_parser("homotopy-build", help="homotopy path from a gauge witness")
    _add_morphism(p)
    _add_artin(p)
    p.add_argument("--pair", required=True)
    p.add_argument("--witness", required=True)
    p.add_argument("--cap", type=int)
    _add_common(p)

    p = sub.add_parser("fixtures", help="list fixtures or export one")
    p.add_argument("--name", choices=sorted(FIXTURES))
    _add_common(p)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        settings = Settings.from_args(args)
        configure_logging(settings.log_level)
        logger.debug("command %s with %s", args.command, settings)
        return HANDLERS[args.command](args, settings)
    except LinfconeError as exc:
        if getattr(args, "output_format", None) == "json":
            sys.stdout.write(dump_document(error_to_dict(exc)))
        else:
            console.print(f"[error]{type(exc).__name__}[/error]: {escape(str(exc))}")
        return exc.exit_code
    except Exception as exc:
        logger.debug("unexpected failure in %s", args.command, exc_info=True)
        if getattr(args, "output_format", None) == "json":
            sys.stdout.write(dump_document({"error": type(exc).__name__, "message": str(exc)}))
        else:
            console.print(f"[error]Internal error ({type(exc).__name__}): {escape(str(exc))}[/error]")
        return EXIT_INTERNAL


def main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(run())
