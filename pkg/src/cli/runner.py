"""
Top-level argument parsing and dispatch

run() never raises for input problems: errors become a report with exit code
2, unexpected faults exit code 1.
"""

import argparse
from typing import List, Optional

from ..core.config import VALID_OUTPUT_FORMATS, ToolkitConfig, create_config
from ..core.exceptions import ErrorHandler, ToolkitError, format_error_message
from ..nonassoc.models import CommandReport
from ..utils.logger import get_logger, setup_logger
from .algebra_commands import add_algebra_parsers
from .config_commands import add_config_parser
from .homlie_commands import add_homlie_parser
from .identity_commands import add_identity_parsers
from .operad_commands import add_operad_parser
from .solve_commands import add_solve_parser
from .super_commands import add_super_parser

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    from .. import __version__

    parser = argparse.ArgumentParser(
        prog="nonassoc-toolkit",
        description="Exact depolarization calculus for degree-3 nonassociative identities",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  nonassoc-toolkit solve poisson
  nonassoc-toolkit implies family.id target.id
  nonassoc-toolkit operad dim3 tp1.id tp2.id tp3.id
  nonassoc-toolkit --format json verify algebra.alg jacobi.id
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", dest="output_format", choices=VALID_OUTPUT_FORMATS, default=None, help="report format")
    parser.add_argument("--env-file", default=None, help="env file, .env by default")

    subparsers = parser.add_subparsers(dest="command", help="available commands")
    add_identity_parsers(subparsers)
    add_solve_parser(subparsers)
    add_operad_parser(subparsers)
    add_algebra_parsers(subparsers)
    add_super_parser(subparsers)
    add_homlie_parser(subparsers)
    add_config_parser(subparsers)
    return parser


def _error_report(command: str, error: Exception, exit_code: int) -> CommandReport:
    if isinstance(error, ToolkitError):
        message = format_error_message(error)
        payload = error.to_dict()
    else:
        message = str(error)
        payload = {"error": True, "error_code": type(error).__name__, "message": message}
    return CommandReport(command=command, result=payload, lines=[f"❌ {message}"], exit_code=exit_code)


def run(argv: Optional[List[str]] = None, config: Optional[ToolkitConfig] = None) -> CommandReport:
    """
    Parse argv and run one command

    Args:
        argv: arguments without the program name, sys.argv by default
        config: configuration; when omitted it is read from the env file and
            the logger is set up from it

    Returns:
        CommandReport; NoSolution and failing checks still exit 0
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 2
        return CommandReport(command="", exit_code=code)

    if not args.command:
        parser.print_help()
        return CommandReport(command="", exit_code=0)

    handler = ErrorHandler()
    output_format = args.output_format or "text"
    try:
        if config is None:
            config = create_config(args.env_file)
            setup_logger(config.log_level, config.log_file)
        output_format = args.output_format or config.output_format
        report = args.handler(args, config)
    except Exception as e:
        exit_code = handler.handle_error(e)
        if exit_code == 1:
            logger.exception(f"command {args.command} failed")
        report = _error_report(args.command, e, exit_code)
    return report.model_copy(update={"output_format": output_format})
