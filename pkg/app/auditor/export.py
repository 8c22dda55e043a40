"""
Audit report serialization: JSON with one record per cell, CSV shaped like the property table.
"""
import csv
import io
import json
from typing import Any, Dict, List, Optional

from app.auditor.matrix import erratum_note
from app.schemas import SemanticsId
from app.schemas.audit import TABLE_PROPERTIES, AuditMatrix, SmoothnessProbeReport


def _mark(observed: bool) -> str:
    return "yes" if observed else "no"


def matrix_to_dict(m: AuditMatrix, probes: Optional[List[SmoothnessProbeReport]] = None) -> Dict[str, Any]:
    cells = []
    for verdict in m.cells:
        expected = m.expected[verdict.semantics][verdict.property]
        cells.append({
            "semantics": verdict.semantics.value,
            "property": verdict.property.value,
            "verdict": verdict.verdict.value,
            "trials": verdict.trials,
            "effective_trials": verdict.effective_trials,
            "skipped": verdict.skipped,
            "low_confidence": verdict.low_confidence,
            "tolerance": verdict.tolerance,
            "witness": verdict.witness.model_dump() if verdict.witness else None,
            "expected": expected,
            "match": verdict.holds == expected,
            "erratum": erratum_note(verdict) if verdict.holds != expected else None,
        })

    return {
        "tool_version": m.tool_version,
        "table_hash": m.table_hash,
        "seed": m.seed,
        "trials": m.trials,
        "params": m.params.model_dump(),
        "notes": m.notes,
        "cells": cells,
        "weak_smoothness_probe": [p.model_dump(mode="json") for p in probes or []],
    }


def matrix_to_json(m: AuditMatrix, probes: Optional[List[SmoothnessProbeReport]] = None) -> str:
    return json.dumps(matrix_to_dict(m, probes), indent=2)


def matrix_to_csv(m: AuditMatrix) -> str:
    """Rows are properties, columns semantics; each cell reads observed/expected."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["property"] + [s.value for s in SemanticsId])
    for prop in TABLE_PROPERTIES:
        row = [prop.value]
        for s in SemanticsId:
            observed = m.cell(s, prop).holds
            row.append(f"{_mark(observed)}/{_mark(m.expected[s][prop])}")
        writer.writerow(row)
    return buffer.getvalue()
