"""Command-line entry point."""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from config.settings import get_settings
from graphs.loader import parse_graph_file, write_graph_file
from harness.ensembles import EnsembleMember, discrete_ensemble, metric_ensemble
from harness.families import FAMILY_KINDS, FamilySpec, generate_family
from harness.scan import SCAN_COLUMNS, parse_range, parse_values, scan_dumbbell
from orchestrator.campaign import CampaignOrchestrator, verify_discrete, verify_metric
from quantum.cheeger import metric_cheeger
from quantum.fem import lambda1_metric
from reports.aggregator import ReportAggregator
from reports.writer import ReportWriter
from spectral.cheeger import discrete_cheeger
from spectral.laplacian import fiedler_value
from utils.digest import file_digest
from utils.exceptions import CheegerError, ValidationError
from utils.logger import configure_logging, get_logger, set_graph_context

logger = get_logger()

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _emit(payload: dict) -> None:
    print(ReportWriter().dumps(payload))


def _single_record_exit(record) -> int:
    if record.assertable_violations:
        logger.warning(f"Assertable violations: {[r.inequality for r in record.assertable_violations]}")
        return EXIT_VIOLATION
    return EXIT_OK


def discrete_command(args) -> int:
    """cheeger | lambda1 | verify for a discrete graph file."""
    g = parse_graph_file(args.input, kind="discrete")
    set_graph_context(g.name)

    if args.action == "cheeger":
        _emit(discrete_cheeger(g).to_dict())
        return EXIT_OK
    if args.action == "lambda1":
        _emit({"lambda1": fiedler_value(g)})
        return EXIT_OK

    record = verify_discrete(g)
    return _write_single(record, args)


def metric_command(args) -> int:
    """cheeger | lambda1 | verify for a metric graph file."""
    g = parse_graph_file(args.input, kind="metric")
    set_graph_context(g.name)

    if args.action == "cheeger":
        _emit(metric_cheeger(g, args.max_cuts).to_dict())
        return EXIT_OK
    if args.action == "lambda1":
        _emit(lambda1_metric(g, args.tol).to_dict())
        return EXIT_OK

    record = verify_metric(g, max_cuts_per_edge=args.max_cuts, target_rel_tol=args.tol)
    return _write_single(record, args)


def _write_single(record, args) -> int:
    writer = ReportWriter()
    summary = ReportAggregator().aggregate([record])
    meta = {"input": str(args.input), "input_digest": file_digest(args.input)}
    if args.out:
        writer.write_json(Path(args.out), [record], summary, meta)
    else:
        _emit(writer.document([record], summary, meta))
    if args.csv:
        writer.write_csv(Path(args.csv), [record])
    return _single_record_exit(record)


def _parse_params(pairs: List[str]) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValidationError(f"Expected key=value, got '{pair}'")
        params[key] = value
    return params


def family_command(args) -> int:
    spec = FamilySpec.from_params(args.kind, _parse_params(args.params or []))
    g = generate_family(spec)
    write_graph_file(g, Path(args.out))
    logger.info(f"Wrote {spec.label()} to {args.out}")
    return EXIT_OK


def scan_command(args) -> int:
    rows = scan_dumbbell(parse_range(args.m), args.length, parse_values(args.handle))
    ReportWriter().write_table(Path(args.out), SCAN_COLUMNS, [row.to_dict() for row in rows])
    return EXIT_OK


def verify_command(args) -> int:
    """Bound campaign over ensembles and/or input files."""
    settings = get_settings()
    members: List[EnsembleMember] = []

    if args.ensemble in ("discrete", "both"):
        count = args.count if args.count is not None else settings.discrete_count
        members += discrete_ensemble(count, args.seed)
    if args.ensemble in ("metric", "both"):
        count = args.count if args.count is not None else settings.metric_count
        members += metric_ensemble(count, args.seed)
    for path in args.input or []:
        members.append(
            EnsembleMember(0, parse_graph_file(path, kind="metric"), {"input": str(path), "input_digest": file_digest(path)})
        )

    if not members:
        raise ValidationError("Nothing to verify: give --ensemble and/or --input")
    # renumber so indices are unique across ensembles and files
    members = [EnsembleMember(i, m.graph, m.parameters) for i, m in enumerate(members)]

    orchestrator = CampaignOrchestrator(max_workers=args.workers, max_cuts_per_edge=args.max_cuts)
    result = orchestrator.run(members)

    meta = {"ensemble": args.ensemble, "count": args.count, "seed": args.seed}
    writer = ReportWriter()
    writer.write_json(Path(args.out), result.records, result.summary, meta)
    if args.csv:
        writer.write_csv(Path(args.csv), result.records)

    summary = result.summary
    logger.info(
        f"Campaign complete: {summary.graph_count} graphs, {len(summary.violations)} assertable violations, "
        f"{len(summary.informational_violations)} informational, {summary.failed_count} failed"
    )
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cheeger",
        description="Cheeger constants and spectral gaps of discrete and metric graphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    discrete = sub.add_parser("discrete", help="Discrete graph computations")
    discrete.add_argument("action", choices=["cheeger", "lambda1", "verify"])
    discrete.add_argument("--input", required=True, type=Path, help="Graph JSON file")
    discrete.add_argument("--out", help="Write the verify report to this JSON file")
    discrete.add_argument("--csv", help="Also write verify rows as CSV")
    discrete.set_defaults(handler=discrete_command)

    metric = sub.add_parser("metric", help="Metric graph computations")
    metric.add_argument("action", choices=["cheeger", "lambda1", "verify"])
    metric.add_argument("--input", required=True, type=Path, help="Graph JSON file")
    metric.add_argument("--tol", type=float, help="Relative tolerance for lambda_1 refinement")
    metric.add_argument("--max-cuts", type=int, dest="max_cuts", help="Cut points allowed per edge")
    metric.add_argument("--out", help="Write the verify report to this JSON file")
    metric.add_argument("--csv", help="Also write verify rows as CSV")
    metric.set_defaults(handler=metric_command)

    family = sub.add_parser("family", help="Write a named graph family to a file")
    family.add_argument("kind", choices=FAMILY_KINDS)
    family.add_argument("--params", nargs="*", metavar="KEY=VALUE", help="e.g. n=5 L=2 eps=0.001")
    family.add_argument("--out", required=True)
    family.set_defaults(handler=family_command)

    scan = sub.add_parser("scan", help="Parameter scans")
    scan.add_argument("target", choices=["dumbbell"])
    scan.add_argument("--m", required=True, help="Petal range A..B")
    scan.add_argument("--length", type=float, default=2.0, help="Total length (default 2)")
    scan.add_argument("--handle", required=True, help="Comma separated handle lengths")
    scan.add_argument("--out", required=True, help="CSV output")
    scan.set_defaults(handler=scan_command)

    verify = sub.add_parser("verify", help="Bound-verification campaign")
    verify.add_argument("--ensemble", choices=["discrete", "metric", "both", "none"], default="none")
    verify.add_argument("--count", type=int, help="Graphs per ensemble (default from config)")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--input", nargs="*", type=Path, help="Additional metric graph files")
    verify.add_argument("--out", required=True, help="JSON report")
    verify.add_argument("--csv", help="CSV report rows")
    verify.add_argument("--workers", type=int, help="Worker threads (default from config)")
    verify.add_argument("--max-cuts", type=int, dest="max_cuts")
    verify.set_defaults(handler=verify_command)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings()
        configure_logging(
            settings.log_level,
            settings.log_file or None,
            settings.log_max_file_size_mb,
            settings.log_backup_count
        )
        return args.handler(args)
    except CheegerError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        logger.info("Received keyboard interrupt")
        return 130
    finally:
        set_graph_context(None)


if __name__ == "__main__":
    sys.exit(main())
