# services/harness/report.py
from __future__ import annotations

import json
from pathlib import Path
from typing import BinaryIO, Union

from loguru import logger

from services.harness.models import AuditReport, CheckReport

Report = Union[CheckReport, AuditReport]


def report_bytes(report: Report) -> bytes:
    """Canonical JSON: sorted keys, compact separators, scalars already strings."""
    data = report.model_dump(mode="json")
    text = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def emit_report(report: Report, destination: Union[str, Path, BinaryIO, None] = None) -> bytes:
    payload = report_bytes(report)
    if destination is None:
        return payload
    if isinstance(destination, (str, Path)):
        path = Path(destination)
        path.write_bytes(payload)
        logger.info(f"report written to {path}")
    else:
        destination.write(payload)
    return payload
