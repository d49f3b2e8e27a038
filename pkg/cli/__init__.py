"""
Command-line surface of gaugelab.
"""
from cli.commands import COMMANDS, CommandContext, run_command
from cli.models import CommandRequest, OutputFormat, ReportEnvelope
from cli.output import emit_report
from cli.parser import build_parser, parse_request

__all__ = [
    "COMMANDS",
    "CommandContext",
    "CommandRequest",
    "OutputFormat",
    "ReportEnvelope",
    "build_parser",
    "emit_report",
    "parse_request",
    "run_command",
]
