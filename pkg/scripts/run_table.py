"""Run a bundled schedule and compare it with its result table.

Without --until only the default (non-extended) stages run; each extra
--until label pulls in that class and everything it depends on.

    python3 scripts/run_table.py sec4.cfg table1.tbl
    python3 scripts/run_table.py sec4.cfg table1.tbl --until 'wHn(6)(6)(7)(12)' --out runs/mid
"""
import argparse
import logging
import sys

from folkman.pipeline import load_expected, load_schedule, run_schedule, verify_tables


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("schedule")
    ap.add_argument("table")
    ap.add_argument("--out", default=None)
    ap.add_argument("--until", action="append", default=[])
    ap.add_argument("--extended", action="store_true", help="run every stage, however long")
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(asctime)s %(message)s")

    schedule = load_schedule(args.schedule)
    out = args.out or f"runs/{schedule.name.replace(' ', '_') or 'schedule'}"
    manifest = run_schedule(schedule, out, resume=True, until=args.until,
                            include_extended=args.extended)
    report = verify_tables(manifest, load_expected(args.table))
    print(report.text())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
