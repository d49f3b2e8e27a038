"""
Data manager for scale tables, function literals and saved reports.
"""
import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import config
from utils.errors import DomainError, GroupSpecError
from utils.logdomain import log_of
from utils.logger import get_logger

logger = get_logger("data_manager")


def _data_lines(text: str):
    """Non-empty lines with '#' comments stripped, numbered from 1."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield number, line


class DataManager:
    """
    Manages file I/O for gaugelab.

    Relative paths are looked up in the working directory first, then under
    config.DATA_DIR. Loaded files are cached by resolved path.
    """

    def __init__(self, data_dir: Optional[str] = None):
        """
        Initialize the data manager.

        Args:
            data_dir (str): Root of the data files, config.DATA_DIR by default
        """
        self.data_dir = data_dir or config.DATA_DIR
        self.reports_dir = os.path.join(self.data_dir, "reports")
        os.makedirs(self.reports_dir, exist_ok=True)

        self._cache = {
            'scale_tables': {},
            'functions': {},
            'reports': {}
        }

        logger.info("DataManager initialized")

    def load_scale_table(self, path: str) -> Dict[str, float]:
        """
        Load a custom scale: lines of `<element> <value>` with value > 0.

        Args:
            path (str): Table file

        Returns:
            dict: Element text -> log σ
        """
        file_path = self._resolve(path)
        cached = self._cache['scale_tables'].get(file_path)
        if cached is not None:
            logger.debug(f"Returning cached scale table {file_path}")
            return cached

        table: Dict[str, float] = {}
        for number, line in _data_lines(self._read(file_path)):
            parts = line.rsplit(None, 1)
            if len(parts) != 2:
                raise GroupSpecError(f"{file_path}:{number}: expected '<element> <value>', got {line!r}")
            element, value = parts
            try:
                number_value = Fraction(value)
            except (ValueError, ZeroDivisionError):
                raise GroupSpecError(f"{file_path}:{number}: bad value {value!r}")
            if number_value <= 0:
                raise DomainError(f"{file_path}:{number}: scale values must be positive, got {value}")
            table[element] = log_of(number_value)

        logger.info(f"Loaded {len(table)} scale values from {file_path}")
        self._cache['scale_tables'][file_path] = table
        return table

    def load_function_literal(self, path: str) -> List[Tuple[str, str]]:
        """
        Load a finitely supported function: lines of `<element> <numerator>/<denominator>`.

        Args:
            path (str): Literal file

        Returns:
            list: (element text, coefficient text) pairs, in file order
        """
        file_path = self._resolve(path)
        cached = self._cache['functions'].get(file_path)
        if cached is not None:
            logger.debug(f"Returning cached function literal {file_path}")
            return cached

        pairs = self.parse_function_literal(self._read(file_path), source=file_path)
        logger.info(f"Loaded a function with {len(pairs)} terms from {file_path}")
        self._cache['functions'][file_path] = pairs
        return pairs

    @staticmethod
    def parse_function_literal(text: str, source: str = "<literal>") -> List[Tuple[str, str]]:
        """
        Parse function literal text; ';' separates terms as well as newlines.

        Args:
            text (str): e.g. "0 1; 1 1/2"
            source (str): Name used in error messages

        Returns:
            list: (element text, coefficient text) pairs
        """
        pairs = []
        for number, line in _data_lines(text.replace(";", "\n")):
            parts = line.rsplit(None, 1)
            if len(parts) != 2:
                raise GroupSpecError(f"{source}:{number}: expected '<element> <coefficient>', got {line!r}")
            pairs.append((parts[0], parts[1]))
        return pairs

    def save_report(self, name: str, report: Dict[str, Any]) -> Optional[str]:
        """
        Save a report as JSON under the reports directory.

        Args:
            name (str): Report name, without extension
            report (dict): JSON-ready payload

        Returns:
            str or None: The file written, None on failure
        """
        file_path = self._report_path(name)
        try:
            with open(file_path, 'w', encoding='utf-8') as f:
                json.dump(report, f, ensure_ascii=False, indent=4)

            logger.info(f"Saved report {name} to {file_path}")
            self._cache['reports'][name] = report
            return file_path

        except (OSError, TypeError, ValueError) as e:
            logger.error(f"Error saving report to {file_path}: {str(e)}")
            return None

    def load_report(self, name: str) -> Optional[Dict[str, Any]]:
        """
        Load a saved report.

        Args:
            name (str): Report name, without extension

        Returns:
            dict or None: The report if found
        """
        if self._cache['reports'].get(name) is not None:
            logger.debug(f"Returning cached report {name}")
            return self._cache['reports'][name]

        file_path = self._report_path(name)
        if not os.path.exists(file_path):
            logger.warning(f"Report file does not exist: {file_path}")
            return None
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                report = json.load(f)
        except (OSError, ValueError) as e:
            logger.error(f"Error loading report from {file_path}: {str(e)}")
            return None

        self._cache['reports'][name] = report
        return report

    def clear_cache(self):
        """
        Clear the data cache.
        """
        self._cache = {
            'scale_tables': {},
            'functions': {},
            'reports': {}
        }
        logger.info("Data cache cleared")

    def _report_path(self, name: str) -> str:
        if not name or os.sep in name or name.startswith("."):
            raise DomainError(f"Bad report name {name!r}")
        return os.path.join(self.reports_dir, f"{name}.json")

    def _resolve(self, path: str) -> str:
        if os.path.isabs(path) or os.path.exists(path):
            return os.path.abspath(path)
        return os.path.join(self.data_dir, path)

    def _read(self, file_path: str) -> str:
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            logger.error(f"Error reading {file_path}: {str(e)}")
            raise DomainError(f"Cannot read {file_path}: {e.strerror or e}")
