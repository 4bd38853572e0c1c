"""Command-line front end.

Exit codes: 0 success, 1 usage or config error, 2 one or more rows failed.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .config import FORMATS, SCHEMES, ConfigError, format_config, parse_config
from .runner import emit, run

PRESETS = ("fig2", "fig4", "qfig", "ring_params", "meissner")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ROW_ERRORS = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def preset_text(name: str) -> str:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset '{name}'")
    return resources.files("magnetomech.presets").joinpath(f"{name}.cfg").read_text("utf-8")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, help="output file (default: stdout)")
    p.add_argument("--format", choices=FORMATS, help="output format (default csv)")
    p.add_argument("--threads", type=int, default=1, help="worker threads for sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="magnetomech", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for scheme in SCHEMES:
        p = sub.add_parser(scheme, help=f"evaluate the {scheme} model")
        p.add_argument("--config", type=Path, help="config file (key = value lines)")
        p.add_argument(
            "--set",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="extra config line, may repeat",
        )
        p.add_argument("--echo-config", action="store_true", help="print the effective config and exit")
        _add_run_flags(p)
    p = sub.add_parser("preset", help="write a shipped preset config, or run it with --run")
    p.add_argument("name", choices=PRESETS)
    p.add_argument("--run", action="store_true", help="evaluate the preset instead of printing it")
    _add_run_flags(p)
    return parser


def _write(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        out.write_bytes(data)


def _overrides(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects KEY=VALUE, got '{item}'")
        out[key.strip()] = value
    return out


def _execute(text: str, scheme: str | None, args) -> int:
    cfg = parse_config(text, scheme, _overrides(getattr(args, "set", [])))
    if getattr(args, "echo_config", False):
        _write(format_config(cfg).encode("utf-8"), args.out)
        return EXIT_OK
    fmt = args.format or cfg.format
    out = args.out or (Path(cfg.output) if cfg.output else None)
    result = run(cfg, threads=max(1, args.threads))
    _write(emit(result, fmt), out)
    return EXIT_OK if result.ok else EXIT_ROW_ERRORS


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "preset":
            text = preset_text(args.name)
            if not args.run:
                _write(text.encode("utf-8"), args.out)
                return EXIT_OK
            return _execute(text, None, args)
        text = args.config.read_text("utf-8") if args.config else ""
        return _execute(text, args.command, args)
    except (ConfigError, OSError) as exc:
        print(f"magnetomech: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
