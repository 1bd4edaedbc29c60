"""
Main entry point for acbm, the almost contact B-metric toolkit
Validates, classifies and verifies structures on Lie algebras from spec files or built-in fixtures
"""
import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict

from config.settings import settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def setup_logging(verbose: bool = False):
    """Configure logging to stderr, plus a file under LOGS_DIR when enabled"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.LOG_TO_FILE:
        settings.create_directories()
        handlers.append(logging.FileHandler(settings.LOGS_DIR / settings.LOG_FILE))
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def parse_params(text: str) -> Dict[str, Fraction]:
    """Parse 'k=v,k=v' with rational values"""
    values: Dict[str, Fraction] = {}
    if not text:
        return values
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ValueError(f"malformed parameter assignment '{item}'")
        values[key.strip()] = Fraction(value.strip())
    return values


def load_pipeline(source: str, params: Dict[str, Fraction]):
    """Pipeline for a built-in fixture name or a spec file path"""
    from src.fixtures import FIXTURES, five_dim_family
    from src.ingestion import parse_spec_file
    from src.pipeline import GeometryPipeline

    if source == "family":
        return GeometryPipeline.from_fixture(five_dim_family(params))
    if source in FIXTURES:
        pipeline = GeometryPipeline.from_fixture(FIXTURES[source]())
    else:
        pipeline = GeometryPipeline.from_fixture(parse_spec_file(source))
    unknown = [name for name in params if name not in pipeline.alg.params]
    if unknown:
        raise KeyError(f"unknown parameters: {unknown}")
    return pipeline.specialize(params) if params else pipeline


def validate_command(args) -> int:
    from src.verify import render_validation

    pipeline = load_pipeline(args.source, args.params)
    print(render_validation(pipeline, args.format), end="")
    return EXIT_OK if pipeline.jacobi.passed and pipeline.validation.passed else EXIT_INPUT_ERROR


def classify_command(args) -> int:
    from src.verify import render_classification

    pipeline = load_pipeline(args.source, args.params)
    print(render_classification(pipeline, args.format), end="")
    return EXIT_OK


def connection_command(args) -> int:
    from src.verify import render_connection

    pipeline = load_pipeline(args.source, args.params)
    print(render_connection(pipeline, args.format), end="")
    return EXIT_OK


def curvature_command(args) -> int:
    from src.verify import render_curvature

    pipeline = load_pipeline(args.source, args.params)
    print(render_curvature(pipeline, args.format), end="")
    return EXIT_OK


def verify_command(args) -> int:
    from src.verify import render_report, run_suite

    pipeline = load_pipeline(args.source, args.params)
    report = run_suite(pipeline)
    print(render_report(report, args.format), end="")
    return EXIT_CHECK_FAILED if report.any_failed else EXIT_OK


def family_example_command(args) -> int:
    """Tables and the full check suite for the five-dimensional family"""
    from src.verify import render_connection, render_curvature, render_report, run_suite

    pipeline = load_pipeline("family", args.params)
    report = run_suite(pipeline)
    print(render_connection(pipeline, args.format), end="")
    print(render_curvature(pipeline, args.format), end="")
    print(render_report(report, args.format), end="")
    return EXIT_CHECK_FAILED if report.any_failed else EXIT_OK


def export_command(args) -> int:
    from src.fixtures import FIXTURES, five_dim_family
    from src.ingestion import export_spec

    if args.fixture not in FIXTURES:
        raise KeyError(f"unknown fixture '{args.fixture}', choose from {sorted(FIXTURES)}")
    fixture = five_dim_family(args.params) if args.fixture == "family" else FIXTURES[args.fixture]()
    path = export_spec(fixture, args.path)
    print(f"✓ Exported {args.fixture} to {path}")
    return EXIT_OK


def main(argv=None) -> int:
    """Main entry point"""
    parser = argparse.ArgumentParser(
        prog="acbm",
        description="Almost contact B-metric structures on Lie algebras: exact connections, classes and curvature",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  Validate a spec file:
    python main.py validate specs/heisenberg.acbm

  Classify the family at a parameter point:
    python main.py classify family --params l1=1,m1=1

  Run every check on a built-in fixture:
    python main.py verify fixc --format machine

  Tables and checks for the five-dimensional family:
    python main.py family-example

  Export a fixture as a spec file:
    python main.py export abelian abelian.acbm

Sources are spec file paths or the fixtures family, abelian, fixc, einstein.
Exit codes: 0 ok, 1 a check failed, 2 input, validation or class-gate error.
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", type=parse_params, default={}, help="Parameter values k=v,... (rationals)")
    common.add_argument("--format", choices=["text", "machine"], default=settings.OUTPUT_FORMAT,
                        help="Report format")
    common.add_argument("--verbose", action="store_true", help="Debug logging")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    commands = {
        "validate": (validate_command, "Check the Jacobi identity and the structure relations"),
        "classify": (classify_command, "Class membership, bracket conditions and the Nijenhuis tensor"),
        "connection": (connection_command, "Levi-Civita and φKT-connection tables with the torsion"),
        "curvature": (curvature_command, "Curvature, Ricci and scalar curvature of ∇ and D"),
        "verify": (verify_command, "Run every registered check"),
    }
    for name, (handler, help_text) in commands.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("source", help="Spec file path or fixture name")
        sub.set_defaults(handler=handler)

    family_parser = subparsers.add_parser("family-example", parents=[common],
                                         help="Tables and checks for the five-dimensional family")
    family_parser.set_defaults(handler=family_example_command)

    export_parser = subparsers.add_parser("export", parents=[common], help="Write a fixture as a spec file")
    export_parser.add_argument("fixture", help="family, abelian, fixc or einstein")
    export_parser.add_argument("path", type=Path, help="Output file")
    export_parser.set_defaults(handler=export_command)

    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_INPUT_ERROR

    setup_logging(args.verbose)
    from src.exceptions import GeometryError

    try:
        return args.handler(args)
    except (GeometryError, KeyError, ValueError, FileNotFoundError) as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
