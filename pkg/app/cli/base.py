"""
Base command class for all CLI subcommands.
"""
import argparse
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import ConfigError, DLCError
from app.logic.env import Env, load_env
from app.logic.formula import Formula
from app.logic.parser import load_formula, parse_formula
from app.schemas import AtomOracle, CommandName, CommandResult, RunConfig, SemanticsParams
from app.semantics.registry import default_oracle

logger = logging.getLogger(__name__)


def validation_message(e: ValidationError) -> str:
    return "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())


class BaseCommand(ABC):
    """Base class for all commands."""

    def __init__(self, name: CommandName):
        self.name = name

    def run_config(self, args: argparse.Namespace) -> RunConfig:
        """Validate the flags into a RunConfig."""
        try:
            params = SemanticsParams(
                xi=args.xi if args.xi is not None else settings.DEFAULT_XI,
                p=args.p if args.p is not None else settings.DEFAULT_P,
                nu=args.nu if args.nu is not None else settings.DEFAULT_NU,
                stl_literal=args.stl_literal,
            )
            fields: Dict[str, Any] = {
                "command": self.name,
                "params": params,
                "oracle": args.oracle,
                "formula_path": getattr(args, "formula", None),
                "expr": getattr(args, "expr", None),
                "env_path": getattr(args, "env", None),
                "config_path": getattr(args, "config", None),
                "out": args.out,
                "fd": getattr(args, "fd", False),
                "trace": getattr(args, "trace", False),
            }
            for name in ("semantics", "scale", "seed", "trials", "tol", "workers", "report_dir"):
                value = getattr(args, name, None)
                if value is not None:
                    fields[name] = value
            return RunConfig(**fields)
        except ValidationError as e:
            raise ConfigError(f"Invalid flags: {validation_message(e)}") from e

    @staticmethod
    def atom_oracle(cfg: RunConfig) -> AtomOracle:
        mode = cfg.oracle or default_oracle(cfg.semantics).mode
        return AtomOracle(mode=mode, scale=cfg.scale)

    @staticmethod
    def load_formula(cfg: RunConfig, default: Optional[str] = None) -> Formula:
        if cfg.expr is not None:
            return parse_formula(cfg.expr)
        if cfg.formula_path is not None:
            return load_formula(cfg.formula_path)
        if default is not None:
            return parse_formula(default)
        raise ConfigError("A formula is required: pass -f FILE or --expr TEXT")

    @staticmethod
    def load_env(cfg: RunConfig) -> Env:
        return load_env(cfg.env_path) if cfg.env_path else {}

    @staticmethod
    def write_report(cfg: RunConfig, filename: str, content: str) -> Path:
        directory = Path(cfg.report_dir)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / filename
            path.write_text(content, encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Cannot write report {filename} to {directory}: {e}") from e
        logger.info(f"Wrote {path}")
        return path

    @abstractmethod
    def _execute(self, cfg: RunConfig, args: argparse.Namespace) -> CommandResult:
        """Execute the command logic. Must be implemented by subclasses."""
        pass

    def execute(self, args: argparse.Namespace) -> CommandResult:
        """
        Validate flags and run the command.
        This is the main entry point for all commands.
        """
        try:
            cfg = self.run_config(args)
            logger.info(f"Executing {self.name.value} with semantics={cfg.semantics.value}")
            return self._execute(cfg, args)
        except DLCError as e:
            logger.error(f"Error executing {self.name.value}: {e}")
            return CommandResult(success=False, exit_code=e.exit_code, error=str(e))
        except ValidationError as e:
            logger.error(f"Invalid configuration for {self.name.value}: {e}")
            return CommandResult(success=False, exit_code=ConfigError.exit_code, error=validation_message(e))
