"""Validate the bundled helix periods and write their quivers as DOT files."""

import sys
from pathlib import Path

from e8grading.delpezzo import load_helix, quiver, validate_helix_period

DATA = Path(__file__).resolve().parent.parent / "data"


def main(out_dir="."):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for path in sorted(DATA.glob("helix_*.json")):
        period = load_helix(path)
        report = validate_helix_period(period)
        print(f"{path.name}: dP_{period.label}, N={period.N}, valid={report.valid}")
        if not report.valid:
            continue
        q = quiver(period)
        for layer in q.layers():
            mults = sorted(k for *_, k in layer)
            print(f"  {len(layer)} arrows, multiplicities {mults}")
        target = out / (path.stem + ".dot")
        target.write_text(q.to_dot())
        print(f"  wrote {target}")


if __name__ == "__main__":
    main(*sys.argv[1:])
