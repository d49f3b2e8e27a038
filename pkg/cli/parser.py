"""
Command-line parsing: argparse subparsers built from the command table.
"""
import argparse
from typing import Any, Dict, List, Optional, Sequence, Tuple

from dotenv import dotenv_values

import config
from cli.commands import COMMANDS, Command, Flag, REQUEST_FIELDS
from cli.models import CommandRequest, OutputFormat
from utils.errors import CommandError

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}
# Flags every subcommand accepts and that are not part of the request
COMMON = {"format", "config", "save", "seed"}


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises CommandError instead of exiting on bad input."""

    def error(self, message):
        raise CommandError(f"{self.prog}: {message}")


def _switch(text: Any) -> bool:
    if isinstance(text, bool):
        return text
    value = str(text).strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise CommandError(f"Expected a boolean, got {text!r}")


def _add_flag(parser: argparse.ArgumentParser, flag: Flag) -> None:
    if flag.switch:
        parser.add_argument(f"--{flag.name}", dest=flag.dest, action="store_true", help=flag.help)
        return
    help_text = flag.help + (" (required)" if flag.required else "")
    parser.add_argument(f"--{flag.name}", dest=flag.dest, type=flag.type, default=flag.default,
                        choices=flag.choices, help=help_text or None)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value,
                        help="output format")
    parser.add_argument("--config", help="dotenv-style file of flag defaults; flags on the command line win")
    parser.add_argument("--save", help="also save the JSON report under this name in the reports directory")
    parser.add_argument("--seed", type=int, default=0, help="random seed")


def build_parser() -> CommandParser:
    """
    Build the top-level parser, one subparser per command.

    Returns:
        CommandParser: The parser
    """
    parser = CommandParser(prog="gaugelab", description="Scales, weights and growth on groups")
    parser.add_argument("--version", action="version", version=f"gaugelab {config.VERSION}")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    parser.command_parsers = {}
    for command in COMMANDS.values():
        description = command.help + (f"\n\ncondition: {command.condition}" if command.condition else "")
        sub = subparsers.add_parser(command.name, help=command.help, description=description,
                                    formatter_class=argparse.RawDescriptionHelpFormatter)
        for flag in command.flags:
            _add_flag(sub, flag)
        _add_common(sub)
        parser.command_parsers[command.name] = sub
    return parser


def _config_defaults(command: Command, path: str) -> Dict[str, Any]:
    """
    Read flag defaults from a dotenv-style file.

    Keys are long flag names, with '-' or '_', in any case.

    Args:
        command (Command): The command being configured
        path (str): The file

    Returns:
        dict: Converted values by destination name
    """
    values = dotenv_values(path)
    if not values:
        raise CommandError(f"No settings read from config file {path}")
    flags = {flag.dest: flag for flag in command.flags}
    defaults: Dict[str, Any] = {}
    for key, raw in values.items():
        dest = key.strip().replace("-", "_")
        if dest not in flags:
            dest = dest.lower()
        if dest == "seed":
            defaults["seed"] = _convert(int, raw, key)
            continue
        flag = flags.get(dest)
        if flag is None:
            raise CommandError(f"{path}: {command.name} has no flag --{key}")
        if flag.switch:
            defaults[dest] = _switch(raw)
        else:
            value = _convert(flag.type, raw, key)
            if flag.choices and value not in flag.choices:
                raise CommandError(f"{path}: {key} must be one of {', '.join(flag.choices)}")
            defaults[dest] = value
    return defaults


def _convert(kind, raw: Optional[str], key: str) -> Any:
    if raw is None:
        raise CommandError(f"Config key {key} has no value")
    try:
        return kind(raw)
    except (TypeError, ValueError):
        raise CommandError(f"Config key {key}: cannot read {raw!r}")


def _find_config(argv: Sequence[str]) -> Optional[str]:
    for i, arg in enumerate(argv):
        if arg == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def parse_request(argv: Sequence[str]) -> Tuple[CommandRequest, Optional[str]]:
    """
    Parse a command line into a request.

    Args:
        argv (Sequence[str]): Arguments without the program name

    Returns:
        Tuple[CommandRequest, Optional[str]]: The request and the --save name
    """
    argv = list(argv)
    parser = build_parser()
    if not argv or argv[0].startswith("-") and argv[0] not in ("-h", "--help", "--version"):
        raise CommandError(f"Expected a command, one of {', '.join(COMMANDS)}")

    command = COMMANDS.get(argv[0])
    config_path = _find_config(argv[1:])
    if command is not None and config_path:
        parser.command_parsers[command.name].set_defaults(**_config_defaults(command, config_path))

    args = vars(parser.parse_args(argv))
    name = args.pop("command")
    if name is None:
        raise CommandError(f"Expected a command, one of {', '.join(COMMANDS)}")
    command = COMMANDS[name]
    fmt = args.pop("format")
    save = args.pop("save")
    args.pop("config")
    seed = args.pop("seed")

    scales: List[str] = [s for s in (args.pop("scale", None), args.pop("scale2", None)) if s is not None]
    request = CommandRequest(
        subcommand=command.name,
        group=args.pop("group", None),
        generators=args.pop("generators", None),
        scales=scales,
        params={k: v for k, v in args.items() if k not in REQUEST_FIELDS | COMMON},
        seed=seed,
        format=OutputFormat(fmt),
    )
    return request, save
