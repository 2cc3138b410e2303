"""
Serialize verification reports.
JSON: sorted keys, two-space indent, Fractions as "p/q" strings.
CSV: one row per check, structured cells JSON-encoded.
"""

import json

import pandas as pd

from core.state import VerificationReport


def report_to_json(report: VerificationReport, timings: bool = False) -> str:
    """Byte-identical across runs with the same configuration unless timings are included."""
    return json.dumps(report.to_dict(timings), indent=2, sort_keys=True) + "\n"


def report_to_frame(report: VerificationReport, timings: bool = False) -> pd.DataFrame:
    rows = []
    for check in report.checks:
        record = check.to_dict(timings)
        for key in ("inputs", "expected", "computed"):
            record[key] = json.dumps(record[key], sort_keys=True)
        rows.append({"suite": report.suite, **record})
    columns = ["suite", "name", "inputs", "expected", "computed", "exact", "passed"]
    if timings:
        columns.append("runtime_s")
    return pd.DataFrame(rows, columns=columns)


def report_to_csv(report: VerificationReport, timings: bool = False) -> str:
    return report_to_frame(report, timings).to_csv(index=False, float_format="%.17g")
