"""
`dlc grad`: exact partial derivatives, optionally next to central differences.
"""
import argparse
import logging
import math
from typing import Any, Dict, List

from app.autodiff.gradient import finite_diff_grad, grad, kink_margin
from app.cli.base import BaseCommand
from app.cli.evaluate import render
from app.core.config import settings
from app.schemas import CommandName, CommandResult, OutputFormat, RunConfig
from app.semantics.compiler import compile_loss

logger = logging.getLogger(__name__)


class GradCommand(BaseCommand):
    def __init__(self):
        super().__init__(CommandName.GRAD)

    def _execute(self, cfg: RunConfig, args: argparse.Namespace) -> CommandResult:
        formula = self.load_formula(cfg)
        env = self.load_env(cfg)
        loss = compile_loss(formula, cfg.semantics, cfg.params, self.atom_oracle(cfg))

        value, gradient = grad(loss, env)
        margin = kink_margin(loss, env)
        near_kink = margin < settings.FD_STEP
        if near_kink:
            logger.warning(f"Point is {margin} from a kink; derivatives follow the first-argument tie-break")

        rows: List[Dict[str, Any]] = [{"variable": name, "grad": g} for name, g in gradient.items()]
        data: Dict[str, Any] = {
            "semantics": cfg.semantics.value,
            "value": value,
            "kink_margin": margin if math.isfinite(margin) else None,
            "kink_warning": near_kink,
            "gradient": gradient,
        }
        if cfg.fd:
            fd = finite_diff_grad(loss, env, settings.FD_STEP)
            deviations = [abs(gradient[n] - fd[n]) / (1.0 + abs(gradient[n])) for n in gradient]
            for row in rows:
                row["fd"] = fd[row["variable"]]
            data["finite_difference"] = fd
            data["max_rel_deviation"] = max(deviations, default=0.0)

        if cfg.out is OutputFormat.TEXT:
            text = self._table(data, rows)
        else:
            text = render(data, cfg.out)
        return CommandResult(success=True, data=data, text=text)

    @staticmethod
    def _table(data: Dict[str, Any], rows: List[Dict[str, Any]]) -> str:
        lines = [f"value: {data['value']}"]
        header = ["variable", "grad"] + (["fd"] if "finite_difference" in data else [])
        lines.append("  ".join(f"{h:>16}" for h in header))
        for row in rows:
            lines.append("  ".join(f"{row[h]:>16}" if h == "variable" else f"{row[h]:>16.10g}" for h in header))
        if "max_rel_deviation" in data:
            lines.append(f"max_rel_deviation: {data['max_rel_deviation']:.3e}")
        if data["kink_warning"]:
            lines.append(f"warning: kink within {data['kink_margin']:.3g} of this point")
        return "\n".join(lines)
