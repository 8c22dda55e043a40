"""
Training report serialization.
"""
import csv
import io

from app.schemas.training import TrainReport

CSV_COLUMNS = ["epoch", "ce_loss", "constraint_loss", "augmented_loss", "accuracy", "satisfaction_rate"]


def report_to_json(report: TrainReport) -> str:
    return report.model_dump_json(indent=2)


def report_to_csv(report: TrainReport) -> str:
    """One row per epoch."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in report.epochs:
        writer.writerow(record.model_dump())
    return buffer.getvalue()
