"""Largest angular gap of the accumulated zeros on the left arc, per cutoff.

    python3 scripts/density_scan.py --n-max 300 --step 25
"""
import argparse
import math

from hookparts.rootgeom import arc_density


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--step", type=int, default=25)
    args = ap.parse_args()
    cutoffs = sorted({*range(args.step, args.n_max + 1, args.step), args.n_max})
    stats = arc_density(args.n_max, cutoffs)
    print("cutoff,max_gap,gap_times_cutoff")
    for c, g in zip(stats.cutoffs, stats.gaps):
        print(f"{c},{g:.6f},{g * c:.4f}")
    print(f"# angle range [{stats.min_angle / math.pi:.6f} pi, {stats.max_angle / math.pi:.6f} pi], "
          f"off-arc roots: {stats.outside}")


if __name__ == "__main__":
    main()
