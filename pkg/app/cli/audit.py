"""
`dlc audit`: reproduce the property table and write the matrix reports.
"""
import argparse
import logging
from typing import List

from app.auditor.export import matrix_to_csv, matrix_to_dict, matrix_to_json
from app.auditor.matrix import audit_all, compare_to_expected
from app.auditor.smoothness import weak_smoothness_probe
from app.cli.base import BaseCommand
from app.schemas import CommandName, CommandResult, OutputFormat, RunConfig, SemanticsId
from app.schemas.audit import TABLE_PROPERTIES, AuditMatrix, CellMismatch

logger = logging.getLogger(__name__)

PROBE_TRIALS = 1000


def render_grid(m: AuditMatrix, mismatches: List[CellMismatch]) -> str:
    """Properties by semantics; each cell shows observed yes/no and a check against the table."""
    width = 13
    lines = [f"{'':<18}" + "".join(f"{s.value:>{width}}" for s in SemanticsId)]
    for prop in TABLE_PROPERTIES:
        cells = []
        for s in SemanticsId:
            verdict = m.cell(s, prop)
            mark = "✓" if verdict.holds == m.expected[s][prop] else "✗"
            cells.append(f"{('yes' if verdict.holds else 'no') + ' ' + mark:>{width}}")
        lines.append(f"{prop.value:<18}" + "".join(cells))

    total = len(m.cells)
    matched = total - len(mismatches)
    lines.append("")
    lines.append(f"{matched}/{total} cells match the expected table")
    for mismatch in mismatches:
        kind = "documented erratum" if mismatch.erratum else "MISMATCH"
        detail = f": {mismatch.note}" if mismatch.note else ""
        lines.append(f"  {kind} at ({mismatch.semantics.value}, {mismatch.property.value}){detail}")
    return "\n".join(lines)


class AuditCommand(BaseCommand):
    def __init__(self):
        super().__init__(CommandName.AUDIT)

    def _execute(self, cfg: RunConfig, args: argparse.Namespace) -> CommandResult:
        matrix = audit_all(cfg.trials, cfg.seed, cfg.tol, cfg.workers, cfg.params)
        probes = [
            weak_smoothness_probe(s, min(cfg.trials, PROBE_TRIALS), cfg.seed, cfg.params)
            for s in SemanticsId
        ]
        mismatches = compare_to_expected(matrix)

        self.write_report(cfg, "audit.json", matrix_to_json(matrix, probes))
        self.write_report(cfg, "audit.csv", matrix_to_csv(matrix))

        undocumented = [mm for mm in mismatches if not mm.erratum]
        exit_code = 1 if undocumented else 0
        if cfg.out is OutputFormat.JSON:
            text = matrix_to_json(matrix, probes)
        elif cfg.out is OutputFormat.CSV:
            text = matrix_to_csv(matrix).rstrip("\n")
        else:
            text = render_grid(matrix, mismatches)

        data = matrix_to_dict(matrix, probes)
        data["mismatches"] = [mm.model_dump(mode="json") for mm in mismatches]
        return CommandResult(
            success=exit_code == 0,
            exit_code=exit_code,
            data=data,
            text=text,
            error=f"{len(undocumented)} cell(s) disagree with the expected table" if undocumented else None,
        )
