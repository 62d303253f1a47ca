"""Command-line entry point: ``betacop run`` and ``betacop tables``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .experiments import ConfigError, ExperimentConfig, run_experiments, emit_report, with_overrides
from .presets import SCALES, TABLES, table_configs

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _overrides(p):
    p.add_argument("--seed", type=int, help="master seed")
    p.add_argument("--runs", type=int, help="Monte Carlo runs M")
    p.add_argument("--boot", type=int, help="bootstrap replications B")
    p.add_argument("--threads", type=int,
                   help="worker processes (default: $BETACOP_THREADS or 1)")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="betacop", description="Empirical beta copula Monte Carlo harness")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", help="run one experiment described by a config file")
    run.add_argument("--config", required=True, type=Path)
    run.add_argument("--out", required=True, type=Path)
    _overrides(run)
    tab = sub.add_parser("tables", help="run the preset reproducing a published table")
    tab.add_argument("--paper-table", required=True, type=int, choices=TABLES)
    tab.add_argument("--scale", default="desk", choices=SCALES)
    tab.add_argument("--out", type=Path)
    tab.add_argument("--emit-config", type=Path, metavar="DIR",
                     help="write the preset configs as INI files to DIR instead of running")
    _overrides(tab)
    return parser


def _threads(value):
    if value is not None:
        return value
    env = os.environ.get("BETACOP_THREADS")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"BETACOP_THREADS must be an integer, got {env!r}") from None


def _apply(cfg, args):
    out = with_overrides(cfg, seed=args.seed, M=args.runs, B=args.boot,
                         threads=_threads(args.threads))
    out.validate()
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            try:
                cfg = ExperimentConfig.from_file(args.config)
            except OSError as exc:
                print(f"betacop: cannot read config {args.config}: {exc.strerror}", file=sys.stderr)
                return EXIT_IO
            configs = [_apply(cfg, args)]
        else:
            configs = [_apply(c, args) for c in table_configs(args.paper_table, args.scale)]
            if args.emit_config is not None:
                args.emit_config.mkdir(parents=True, exist_ok=True)
                for c in configs:
                    (args.emit_config / f"{c.name}.ini").write_text(c.to_ini())
                return EXIT_OK
            if args.out is None:
                raise ConfigError("--out is required unless --emit-config is given")
        _check_writable(args.out)
        report = run_experiments(configs, progress=not args.quiet)
        emit_report(report, args.out)
    except ConfigError as exc:
        print(f"betacop: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"betacop: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _check_writable(path: Path):
    """Fail before any computation if the output cannot be created."""
    parent = path.parent if str(path.parent) else Path(".")
    if not parent.is_dir():
        raise OSError(f"cannot write report to {path}: directory {parent} does not exist")
    if path.is_dir():
        raise OSError(f"cannot write report to {path}: is a directory")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
