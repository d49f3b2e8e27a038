"""
Request and report models of the command line.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

import config

# Verdict strings and the exit status they map to
EXIT_CODES = {
    "holds-on-evidence": 0,
    "converges-certified": 0,
    "violated": 1,
    "diverges-evidence": 1,
    "inconclusive": 2,
}
EXIT_USAGE = 3
EXIT_ERROR = 4
EXIT_UNEXPECTED = 5


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class CommandRequest(BaseModel):
    """
    A parsed command line.

    Attributes:
        subcommand (str): Command name
        group (str): Group spec string
        generators (str): Generating set, "std" or inline elements
        scales (list): Scale spec strings in flag order
        params (dict): Numeric and text parameters by long flag name
        seed (int): Random seed
        format (OutputFormat): Output format
    """
    model_config = ConfigDict(extra="forbid")

    subcommand: str
    group: Optional[str] = None
    generators: Optional[str] = None
    scales: List[str] = Field(default_factory=list)
    params: Dict[str, Any] = Field(default_factory=dict)
    seed: int = 0
    format: OutputFormat = OutputFormat.JSON


class ReportEnvelope(BaseModel):
    """
    What a command produced, ready to serialize.

    `verdict` is None for plain computations. `table` holds the rows of the
    CSV output; its columns are fixed per command.
    """
    command: str
    request: CommandRequest
    version: str = config.VERSION
    verdict: Optional[str] = None
    condition: Optional[str] = None
    payload: Dict[str, Any] = Field(default_factory=dict)
    columns: List[str] = Field(default_factory=list)
    table: List[Dict[str, Any]] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def exit_code(self) -> int:
        if self.verdict is None:
            return 0
        return EXIT_CODES.get(self.verdict, EXIT_ERROR)
