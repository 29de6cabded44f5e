"""Command-line interface for galdescent"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from .groups import CATALOG_LISTING, catalog_listing
from .pipeline import EXIT_INVALID, EXIT_OK, EXIT_THEOREM, ScenarioRunner, Verifier, exit_code_for
from .pipeline.verifier import verification_report
from .utils import ConfigManager, EngineError, StructuredLogger, dump_document, setup_logging

logger = logging.getLogger(__name__)


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--preset", type=str, default="default", help="Configuration preset name (default: default)"
    )
    parser.add_argument("--presets-dir", type=str, default="presets", help=argparse.SUPPRESS)
    parser.add_argument("--max-total-order", type=int, help="Largest group order any task may build")
    parser.add_argument("--max-hom-search", type=int, help="Largest homomorphism search space")
    parser.add_argument("--max-sections", type=int, help="Sections checked per extension by verify")
    parser.add_argument("--timings", action="store_true", help="Embed elapsed times in the report")
    parser.add_argument("--output-dir", type=str, help="Also save the report and a CSV timing summary here")
    parser.add_argument("--run-name", type=str, help="Optional name for the saved run")
    parser.add_argument(
        "--log-level",
        type=str,
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: WARNING)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galdescent",
        description="galdescent - finite-level descent of Galois covers and twisting",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Execute a scenario file")
    run.add_argument("scenario", type=str, help="Scenario file (JSON)")
    run.add_argument("--parallel", action="store_true", help="Run tasks concurrently (report order is kept)")
    _add_budget_flags(run)

    catalog = commands.add_parser("catalog", help="List the named groups")
    catalog.add_argument("--json", action="store_true", help="Print the listing as JSON")
    catalog.add_argument(
        "--log-level", type=str, default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"]
    )

    verify = commands.add_parser("verify", help="Run every property suite over the catalog sweep")
    verify.add_argument("--abelian-only", action="store_true", help="Restrict the sweep to abelian kernels")
    _add_budget_flags(verify)

    return parser


def load_config(args: argparse.Namespace) -> dict[str, Any]:
    """Preset merged over the defaults, then command-line overrides."""
    config_manager = ConfigManager(args.presets_dir)
    config = config_manager.load_preset(args.preset)
    if not config:
        logger.warning(
            f"Preset '{args.preset}' unavailable (known: {config_manager.list_presets()}), using defaults"
        )
        config = config_manager.get_default_config()

    overrides = {
        "budgets": {
            "max_total_order": args.max_total_order,
            "max_hom_search": args.max_hom_search,
            "max_sections": args.max_sections,
        },
        "report": {"include_timings": True if args.timings else None},
        "sweep": {"abelian_only": True if getattr(args, "abelian_only", False) else None},
    }
    return config_manager.apply_overrides(config, overrides)


def _emit(report: Any, config: dict[str, Any] | None = None) -> None:
    indent = int(((config or {}).get("report", {}) or {}).get("indent", 2))
    sys.stdout.write(dump_document(report, indent=indent))
    sys.stdout.flush()


def _error_report(error: EngineError) -> dict[str, Any]:
    return {"status": "error", "error": {"type": type(error).__name__, "message": str(error)}}


def command_run(args: argparse.Namespace) -> int:
    config = load_config(args)
    structured_logger = StructuredLogger(args.output_dir) if args.output_dir else None
    runner = ScenarioRunner(config, structured_logger)
    try:
        result = runner.run_scenario(Path(args.scenario), parallel=args.parallel, run_name=args.run_name)
    except EngineError as e:
        logger.error(f"Scenario rejected: {e}")
        _emit(_error_report(e), config)
        return exit_code_for(e)
    _emit(result.report, config)
    return result.exit_code


def command_catalog(args: argparse.Namespace) -> int:
    entries = catalog_listing(CATALOG_LISTING)
    if args.json:
        _emit({"groups": entries})
        return EXIT_OK

    lines = [f"{'name':<10} {'order':>5} {'abelian':>8} {'|Z|':>5} {'|Aut|':>6}"]
    for entry in entries:
        lines.append(
            f"{entry['name']:<10} {entry['order']:>5} {str(entry['abelian']).lower():>8} "
            f"{entry['center_order']:>5} {entry['aut_order']:>6}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def command_verify(args: argparse.Namespace) -> int:
    config = load_config(args)
    include_timings = bool(config.get("report", {}).get("include_timings", False))
    try:
        results = Verifier(config).run()
    except EngineError as e:
        logger.error(f"Verification aborted: {e}")
        _emit(_error_report(e), config)
        return exit_code_for(e)

    report = verification_report(results, include_timings)
    if args.output_dir:
        structured_logger = StructuredLogger(args.output_dir)
        run_dir = structured_logger.create_run_directory(args.run_name)
        structured_logger.save_manifest(run_dir, "verify", report)
        rows = [
            {
                "index": i,
                "kind": r.name,
                "status": "pass" if r.passed else "fail",
                "elapsed_ms": round(r.elapsed_ms, 3),
            }
            for i, r in enumerate(results)
        ]
        structured_logger.create_csv_summary(run_dir, rows)
    _emit(report, config)
    return EXIT_OK if report["status"] == "pass" else EXIT_THEOREM


COMMANDS = {"run": command_run, "catalog": command_catalog, "verify": command_verify}


def main(argv: list[str] | None = None) -> int:
    """CLI main function"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors, which is reserved for theorem failures
        return EXIT_OK if e.code == 0 else EXIT_INVALID

    setup_logging(args.log_level)
    logger.info(f"galdescent {args.command}")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
