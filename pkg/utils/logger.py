"""
Logging configuration for gaugelab.

Reports are written to stdout, so every log line goes to stderr or the log
file. With progress bars on, console lines are routed through tqdm.write
so they do not tear the bars.
"""
import sys

from loguru import logger
from tqdm import tqdm

import config

CONSOLE_FORMAT = ("<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
                  "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>")
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} - {message}"


def _progress_safe_sink(message):
    tqdm.write(message, end="", file=sys.stderr)


logger.remove()
logger.configure(extra={"name": "gaugelab"})

logger.add(
    _progress_safe_sink if config.PROGRESS else sys.stderr,
    format=CONSOLE_FORMAT,
    level=config.LOG_LEVEL,
    colorize=sys.stderr.isatty(),
)

logger.add(
    config.LOG_FILE,
    rotation="10 MB",
    retention="30 days",
    format=FILE_FORMAT,
    level="DEBUG",
    backtrace=True,
    diagnose=False,
)


def get_logger(name: str):
    """
    Get a logger bound to a module name.

    Args:
        name (str): Name of the module

    Returns:
        logger: Configured logger instance
    """
    return logger.bind(name=name)
