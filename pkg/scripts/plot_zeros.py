"""Write the zero cloud of F_2..F_N as SVG and CSV.

    python3 scripts/plot_zeros.py --n-max 100 --out-dir out/
"""
import argparse
import pathlib

from hookparts.export import zeros_csv, zeros_svg
from hookparts.rootgeom import f_roots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=100)
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("out"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    sets = [f_roots(n, certify=None) for n in range(2, args.n_max + 1)]
    (args.out_dir / "zeros.csv").write_text(zeros_csv(sets))
    points = [z for zs in sets for z in zs.points]
    (args.out_dir / "zeros.svg").write_text(zeros_svg(points, f"zeros of F_n, 2 <= n <= {args.n_max}"))
    worst = max(abs(abs(z - 1) - 2) for z in points)
    print(f"{len(points)} zeros written to {args.out_dir}; max ||z-1|-2| = {worst:.2e}")


if __name__ == "__main__":
    main()
