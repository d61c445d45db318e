# services/harness/__init__.py
from services.harness.models import AuditEntry, AuditReport, CheckReport, Counterexample, SuiteConfig
from services.harness.report import emit_report, report_bytes

__all__ = [
    "AuditEntry",
    "AuditReport",
    "CheckReport",
    "Counterexample",
    "SuiteConfig",
    "emit_report",
    "report_bytes",
]
