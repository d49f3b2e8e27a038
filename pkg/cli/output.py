"""
Rendering of report envelopes as JSON, CSV or text.
"""
import math
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np
import pandas as pd

from cli.models import OutputFormat, ReportEnvelope

FLOAT_FORMAT = "%.17g"


def to_plain(value: Any) -> Any:
    """Recursively convert numpy scalars, fractions, enums and tuples to JSON-ready values."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def _text_value(value: Any) -> str:
    if isinstance(value, float):
        if math.isinf(value) or math.isnan(value):
            return str(value)
        return FLOAT_FORMAT % value
    if isinstance(value, (list, dict)):
        text = str(value)
        return text if len(text) <= 120 else text[:117] + "..."
    return str(value)


def emit_report(envelope: ReportEnvelope, fmt: OutputFormat) -> bytes:
    """
    Serialize a report.

    JSON is the full envelope. CSV is the command's table with its fixed
    columns. Text is a short header followed by the payload and the table.

    Args:
        envelope (ReportEnvelope): The report
        fmt (OutputFormat): Output format

    Returns:
        bytes: UTF-8 encoded output, newline terminated
    """
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return (envelope.model_dump_json(indent=2) + "\n").encode("utf-8")

    frame = pd.DataFrame(envelope.table, columns=envelope.columns or None)
    if fmt == OutputFormat.CSV:
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT).encode("utf-8")

    lines = [f"command: {envelope.command}", f"version: {envelope.version}"]
    if envelope.condition:
        lines.append(f"condition: {envelope.condition}")
    if envelope.verdict:
        lines.append(f"verdict: {envelope.verdict}")
    for key, value in envelope.payload.items():
        if key in ("rows", "terms"):
            continue
        lines.append(f"{key}: {_text_value(value)}")
    if not frame.empty:
        lines.append("")
        lines.append(frame.to_string(index=False, float_format=lambda v: FLOAT_FORMAT % v))
    return ("\n".join(lines) + "\n").encode("utf-8")
