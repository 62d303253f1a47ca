"""Run a table preset and print each result next to its published value.

Usage: python3 scripts/run_table.py TABLE [--scale desk|full] [--out report.csv]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from betacop.experiments import emit_report, run_experiments, with_overrides
from betacop.presets import SCALES, TABLES, reference_value, table_configs


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("table", type=int, choices=TABLES)
    p.add_argument("--scale", default="desk", choices=SCALES)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", type=Path)
    args = p.parse_args(argv)
    configs = [with_overrides(c, threads=args.threads) for c in table_configs(args.table, args.scale)]
    report = run_experiments(configs)
    if args.out is not None:
        emit_report(report, args.out)
    print(f"{'family':<13}{'param':>9} {'scheme':<9}{'n':>5} {'metric':<28}{'value':>9}{'mc_se':>9}{'ref':>9}")
    for row in report.rows:
        ref = reference_value(args.table, row)
        delta = "" if row.delta is None else f"/{row.delta:g}"
        print(f"{row.family:<13}{row.theta:>9.4g}{delta} {row.scheme:<9}{row.n:>5} {row.metric:<28}"
              f"{row.value:>9.4f}{row.mc_se:>9.4f}{'' if ref is None else f'{ref:>9.4f}'}")
    print(f"wall time {report.wall_seconds:.0f}s")


if __name__ == "__main__":
    main()
