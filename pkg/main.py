"""
Main entry point for gaugelab.
"""
import signal
import sys
from typing import Optional, Sequence

from cli.commands import CommandContext, run_command
from cli.models import EXIT_ERROR, EXIT_UNEXPECTED, EXIT_USAGE
from cli.output import emit_report
from cli.parser import parse_request
from utils.errors import CommandError, GaugeLabError
from utils.logger import get_logger

logger = get_logger("main")


def handle_sigterm(signum, frame):
    """
    Handle SIGTERM signal (graceful shutdown).
    """
    logger.info("Received SIGTERM signal. Shutting down...")
    sys.exit(EXIT_UNEXPECTED)


def run(argv: Sequence[str], context: Optional[CommandContext] = None, stdout=None) -> int:
    """
    Parse, run and print one command.

    Args:
        argv (Sequence[str]): Arguments without the program name
        context (CommandContext): Shared state, a fresh one by default
        stdout: Binary stream for the report, sys.stdout.buffer by default

    Returns:
        int: Exit status
    """
    stdout = stdout or sys.stdout.buffer
    try:
        request, save = parse_request(argv)
        context = context or CommandContext()
        envelope = run_command(request, context)
        stdout.write(emit_report(envelope, request.format))
        stdout.flush()
        if save:
            context.data_manager.save_report(save, envelope.model_dump(mode="json"))
        return envelope.exit_code
    except CommandError as e:
        logger.error(f"Usage error: {str(e)}")
        return EXIT_USAGE
    except GaugeLabError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        return EXIT_ERROR
    except Exception as e:
        logger.exception(f"Unexpected error: {str(e)}")
        return EXIT_UNEXPECTED


def main():
    """
    Main entry point for the application.
    """
    signal.signal(signal.SIGTERM, handle_sigterm)
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
