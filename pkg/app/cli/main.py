"""
`dlc` command-line entry point.
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional

from app import __version__
from app.cli.audit import AuditCommand
from app.cli.base import BaseCommand
from app.cli.evaluate import EvalCommand
from app.cli.gradient import GradCommand
from app.cli.train import TrainCommand
from app.core.config import settings
from app.core.exceptions import ConfigError
from app.core.logging_setup import configure_logging
from app.schemas import OracleMode, OutputFormat, SemanticsId

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, BaseCommand] = {
    "eval": EvalCommand(),
    "grad": GradCommand(),
    "audit": AuditCommand(),
    "train": TrainCommand(),
}


class CliParser(argparse.ArgumentParser):
    """Argument errors are configuration errors (exit 3), not usage exits."""

    def error(self, message: str) -> None:
        raise ConfigError(message)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--semantics", choices=[s.value for s in SemanticsId], default=None,
                        help="differentiable logic (default: dl2)")
    common.add_argument("--xi", type=float, default=None, help=f"DL2 != constant (default {settings.DEFAULT_XI})")
    common.add_argument("--p", type=float, default=None, help=f"Yager exponent (default {settings.DEFAULT_P})")
    common.add_argument("--nu", type=float, default=None, help=f"STL scale (default {settings.DEFAULT_NU})")
    common.add_argument("--stl-literal", action="store_true",
                        help="use the STL positive branch with A_min in the numerator")
    common.add_argument("--oracle", choices=[m.value for m in OracleMode], default=None,
                        help="atom oracle (default depends on the semantics)")
    common.add_argument("--scale", type=float, default=None, help="graded oracle scale")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--report-dir", dest="report_dir", default=None,
                        help=f"where reports are written (default {settings.REPORT_DIR})")
    common.add_argument("--log-level", dest="log_level", default=None)
    return common


def _formula_flags(parser: argparse.ArgumentParser, env: bool = True) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("-f", "--formula", help="constraint file")
    source.add_argument("--expr", help="constraint text")
    if env:
        parser.add_argument("-e", "--env", help="JSON object of variable values")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="dlc", description="Differentiable-logic constraint compiler")
    parser.add_argument("--version", action="version", version=f"dlc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)
    common = _common_flags()

    eval_parser = sub.add_parser("eval", parents=[common], help="evaluate a constraint")
    _formula_flags(eval_parser)
    eval_parser.add_argument("--trace", action="store_true", help="show every STL conjunction")

    grad_parser = sub.add_parser("grad", parents=[common], help="gradient of a constraint loss")
    _formula_flags(grad_parser)
    grad_parser.add_argument("--fd", action="store_true", help="add a central-difference column")

    audit_parser = sub.add_parser("audit", parents=[common], help="audit the conjunction properties")
    audit_parser.add_argument("--trials", type=int, default=None,
                              help=f"trials per cell (default {settings.AUDIT_TRIALS})")
    audit_parser.add_argument("--tol", type=float, default=None, help="tolerance for every cell")
    audit_parser.add_argument("--workers", type=int, default=None, help="processes for the audit")

    train_parser = sub.add_parser("train", parents=[common], help="constraint-augmented training")
    _formula_flags(train_parser, env=False)
    train_parser.add_argument("--config", help="JSON file with training settings")
    train_parser.add_argument("--alpha", type=float, default=None)
    train_parser.add_argument("--beta", type=float, default=None)
    train_parser.add_argument("--lr", type=float, default=None)
    train_parser.add_argument("--epochs", type=int, default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    configure_logging(args.log_level)
    result = COMMANDS[args.command].execute(args)
    if result.text:
        print(result.text)
    if result.error:
        print(f"error: {result.error}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
