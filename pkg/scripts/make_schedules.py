"""Regenerate the bundled stage schedules from the two-branch template.

    python3 scripts/make_schedules.py            # rewrite src/folkman/data/*.cfg
    python3 scripts/make_schedules.py --check    # exit 1 if any file is stale
"""
import argparse
import sys
from pathlib import Path

from folkman.pipeline import BUNDLED, format_schedule, staged_schedule

DATA = Path(__file__).resolve().parents[1] / "src" / "folkman" / "data"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = []
    for name, m in BUNDLED.items():
        text = format_schedule(staged_schedule(m))
        path = DATA / name
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
            print(f"wrote {path} ({len(staged_schedule(m).stages)} stages)")
    if stale:
        print("stale:", ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
