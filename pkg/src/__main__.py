"""Main entry point for the q-Whittaker toolkit."""
import argparse
import json
import logging
import sys

from src.characters.whittaker import METHODS
from src.commands import COMMANDS
from src.core.config import ConfigError, resolve_config
from src.core.errors import QWhittakerError, SearchBudgetExceeded, StabilizationError
from src.lattice.render import FORMATS as RENDER_FORMATS

logger = logging.getLogger(__name__)

EXIT_IDENTITY_FAILED = 1
EXIT_BAD_INPUT = 2


def _add_shape(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--shape",
        required=required,
        default="",
        help="Partition as comma separated parts, e.g. 2,1 (empty for the empty partition)",
    )
    parser.add_argument("--n", type=int, required=True, help="Alphabet size n")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        required=True,
        help="Filling or POP JSON: a file path, '-' for stdin, or inline JSON",
    )


def parse_args(args: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments.

    Args:
        args: Command line arguments (defaults to sys.argv[1:])

    Returns:
        Parsed arguments namespace
    """
    parser = argparse.ArgumentParser(
        prog="python -m src",
        description="q-Whittaker toolkit - exact expansions, bijections and identity checks",
    )

    parser.add_argument(
        "-c", "--config",
        default=None,
        help="Path to configuration file (default: config/default.yaml, or built-in defaults if absent)",
    )

    parser.add_argument(
        "-l", "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (default: WARNING)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="Expand W_λ, s_λ or H̃_λ")
    _add_shape(expand)
    expand.add_argument("--method", choices=[*METHODS, "schur", "macdonald"], default="fermionic")
    expand.add_argument("--stat", choices=["inv", "quinv"], default="quinv", help="Statistic for --method macdonald")
    expand.add_argument("--format", choices=["text", "json", "latex"], default="text")

    bijection = sub.add_parser("bijection", help="Apply ψ_stat, its inverse, or Ω")
    _add_input(bijection)
    bijection.add_argument("--stat", choices=["inv", "quinv"], default="quinv")
    bijection.add_argument("--dir", choices=["forward", "inverse", "omega"], default="forward")
    bijection.add_argument("--format", choices=["json", "text"], default="json")

    dsplice = sub.add_parser("dsplice", help="Branch a CSF down to n-1")
    _add_input(dsplice)
    dsplice.add_argument("--trace", action="store_true", help="Print every intermediate splice")
    dsplice.add_argument("--format", choices=["json", "text"], default="json")

    clword = sub.add_parser("clword", help="Print the Chari-Loktev words b_inv / b_quinv")
    _add_input(clword)
    clword.add_argument("--stat", choices=["inv", "quinv", "both"], default="both")
    clword.add_argument("--format", choices=["text", "json"], default="text")

    render = sub.add_parser("render", help="Draw the lattice-path ensemble of a CSF")
    _add_input(render)
    render.add_argument("--format", choices=list(RENDER_FORMATS), default="svg")
    render.add_argument("--circles", action="store_true", help="Mark solid and open circles")
    render.add_argument("--out", default=None, help="Output file (default: stdout)")

    limit = sub.add_parser("limit", help="Truncated vacuum character from the theta/eta, CSF and Whittaker sides")
    _add_shape(limit, required=False)
    limit.add_argument("--qmax", type=int, default=None, help="Truncation degree D")
    limit.add_argument("--kmax", type=int, default=None, help="Fixed K (default: stabilize)")
    limit.add_argument("--format", choices=["text", "json"], default="text")

    verify = sub.add_parser("verify", help="Run identity suites, stopping at the first counterexample")
    verify.add_argument("--suite", default="all", help="Suite name, or 'all' for every enabled suite")
    verify.add_argument("--max-cells", type=int, default=None)
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--qmax", type=int, default=None)

    golden = sub.add_parser("golden", help="Write or check the golden file of W_λ")
    _add_shape(golden)
    golden.add_argument("--check", action="store_true")

    tabulate = sub.add_parser("tabulate", help="Export per-CSF statistics as Parquet")
    _add_shape(tabulate)
    tabulate.add_argument("--out", default=None, help="Parquet path (default: the data store's tables/)")

    return parser.parse_args(args)


def setup_logging(level: str) -> None:
    """Configure logging for the application.

    Records go to stderr; stdout carries command output.

    Args:
        level: Logging level string (DEBUG, INFO, etc.)
    """
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    logging.basicConfig(
        level=getattr(logging, level),
        format=log_format,
        handlers=[
            logging.StreamHandler(sys.stderr),
        ],
        force=True,
    )


def main(args: list[str] | None = None) -> int:
    """Main entry point.

    Args:
        args: Command line arguments (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 identity failure, 2 malformed input)
    """
    parsed_args = parse_args(args)

    setup_logging(parsed_args.log_level)
    logger.info(f"Command: {parsed_args.command}")

    try:
        config = resolve_config(parsed_args.config)
        return COMMANDS[parsed_args.command](parsed_args, config)

    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        sys.stderr.write(json.dumps({"error": "config", "message": str(e)}, ensure_ascii=False) + "\n")
        return EXIT_BAD_INPUT

    except (StabilizationError, SearchBudgetExceeded) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}, ensure_ascii=False) + "\n")
        return EXIT_IDENTITY_FAILED

    except QWhittakerError as e:
        logger.error(f"Invalid input: {e}")
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}, ensure_ascii=False) + "\n")
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
