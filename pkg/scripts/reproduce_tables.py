"""Regenerate both reference tables and diff them against the committed CSVs.

    python3 scripts/reproduce_tables.py --n-max 15 --out-dir out/
"""
import argparse
import difflib
import pathlib
import sys

from hookparts.export import golden_csv
from hookparts.sequences import a_table, delta_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=15)
    ap.add_argument("--out-dir", type=pathlib.Path, default=None)
    args = ap.parse_args()
    status = 0
    for name, table in (("table1.csv", a_table(args.n_max)), ("table2.csv", delta_table(args.n_max))):
        text = table.to_csv()
        if args.out_dir:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            (args.out_dir / name).write_text(text)
        golden = golden_csv(name)
        k = min(len(golden.splitlines()), len(text.splitlines()))
        diff = list(difflib.unified_diff(golden.splitlines()[:k], text.splitlines()[:k], lineterm=""))
        print(f"{name}: {'identical' if not diff else 'DIFFERS'} on the first {k - 1} rows")
        if diff:
            print("\n".join(diff))
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
