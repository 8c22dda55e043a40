"""
`dlc eval`: loss value, truth-region membership and classical truth side by side.
"""
import argparse
import csv
import io
import json
import logging
from typing import Any, Dict

from app.cli.base import BaseCommand
from app.logic.interpret import interpret_bool
from app.schemas import CommandName, CommandResult, OutputFormat, RunConfig
from app.semantics.compiler import compile_loss, eval_loss, stl_trace
from app.semantics.registry import domain_true

logger = logging.getLogger(__name__)


def render(data: Dict[str, Any], out: OutputFormat) -> str:
    """Render a flat result record; nested values only appear in JSON."""
    if out is OutputFormat.JSON:
        return json.dumps(data, indent=2)
    flat = {k: v for k, v in data.items() if not isinstance(v, (list, dict))}
    if out is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(flat), lineterminator="\n")
        writer.writeheader()
        writer.writerow(flat)
        return buffer.getvalue().rstrip("\n")
    return "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in flat.items())


class EvalCommand(BaseCommand):
    def __init__(self):
        super().__init__(CommandName.EVAL)

    def _execute(self, cfg: RunConfig, args: argparse.Namespace) -> CommandResult:
        formula = self.load_formula(cfg)
        env = self.load_env(cfg)
        loss = compile_loss(formula, cfg.semantics, cfg.params, self.atom_oracle(cfg))

        value = eval_loss(loss, env)
        in_true_region = domain_true(cfg.semantics, value)
        truth = interpret_bool(formula, env)
        data: Dict[str, Any] = {
            "semantics": cfg.semantics.value,
            "oracle": loss.oracle.mode.value,
            "value": value,
            "domain_true": in_true_region,
            "interpret_bool": truth,
            "sound": in_true_region == truth,
        }
        if cfg.trace:
            data["stl_trace"] = [
                {
                    "conjunct_values": list(t.conjunct_values),
                    "a_min": t.a_min,
                    "a_tilde": list(t.a_tilde),
                    "branch": t.branch.value,
                    "clamped": t.clamped,
                }
                for t in stl_trace(loss, env)
            ]

        text = render(data, cfg.out)
        if cfg.trace and cfg.out is OutputFormat.TEXT:
            for i, t in enumerate(data["stl_trace"]):
                text += f"\nconj[{i}]: branch={t['branch']} a_min={t['a_min']} a_tilde={t['a_tilde']}"
        return CommandResult(success=True, data=data, text=text)
