"""
`dlc train`: one constraint-augmented training run with JSON and CSV reports.
"""
import argparse
import json
import logging
from pathlib import Path
from typing import Any, Dict

from app.cli.base import BaseCommand
from app.cli.evaluate import render
from app.core.exceptions import ConfigError, DivergenceError, ParseError
from app.logic.formula import pretty_print
from app.schemas import CommandName, CommandResult, OutputFormat, RunConfig
from app.schemas.training import AugmentedLossConfig, TrainReport
from app.trainer.export import report_to_csv, report_to_json
from app.trainer.train import train

logger = logging.getLogger(__name__)

# Flags that override the config file when given explicitly.
TRAIN_FLAGS = ("alpha", "beta", "lr", "epochs", "seed")


def load_train_config(path: str) -> Dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"Config file {path} is not valid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(raw, dict):
        raise ConfigError(f"Config file {path} must contain a JSON object")
    return raw


class TrainCommand(BaseCommand):
    def __init__(self):
        super().__init__(CommandName.TRAIN)

    def build_config(self, cfg: RunConfig, args: argparse.Namespace) -> AugmentedLossConfig:
        fields = load_train_config(cfg.config_path) if cfg.config_path else {}
        if args.semantics is not None or "semantics" not in fields:
            fields["semantics"] = cfg.semantics
        if any(getattr(args, name) is not None for name in ("xi", "p", "nu")) or args.stl_literal \
                or "params" not in fields:
            fields["params"] = cfg.params
        if args.oracle is not None or args.scale is not None:
            fields["oracle"] = self.atom_oracle(cfg)
        if cfg.expr is not None or cfg.formula_path is not None:
            fields["constraint"] = pretty_print(self.load_formula(cfg))
        for name in TRAIN_FLAGS:
            value = getattr(args, name, None)
            if value is not None:
                fields[name] = value
        return AugmentedLossConfig(**fields)

    def _report_name(self, report: TrainReport) -> str:
        c = report.config
        return f"train_{c.semantics.value}_a{c.alpha:g}_b{c.beta:g}_s{c.seed}"

    def _write(self, cfg: RunConfig, report: TrainReport) -> None:
        name = self._report_name(report)
        self.write_report(cfg, f"{name}.json", report_to_json(report))
        self.write_report(cfg, f"{name}.csv", report_to_csv(report))

    def _execute(self, cfg: RunConfig, args: argparse.Namespace) -> CommandResult:
        train_cfg = self.build_config(cfg, args)
        try:
            report = train(train_cfg)
        except DivergenceError as e:
            if e.report is not None:
                self._write(cfg, e.report)
            raise

        self._write(cfg, report)
        final = report.final
        data: Dict[str, Any] = {
            "semantics": train_cfg.semantics.value,
            "constraint": train_cfg.constraint,
            "alpha": train_cfg.alpha,
            "beta": train_cfg.beta,
            "epochs": len(report.epochs),
            "baseline_satisfaction": report.baseline_satisfaction,
            "final_accuracy": final.accuracy,
            "final_satisfaction_rate": final.satisfaction_rate,
            "final_constraint_loss": final.constraint_loss,
            "weights_checksum": report.weights_checksum,
        }
        if cfg.out is OutputFormat.JSON:
            text = report_to_json(report)
        else:
            text = render(data, cfg.out)
        return CommandResult(success=True, data=data, text=text)
