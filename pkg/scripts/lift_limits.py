"""Compare exact limits of zeros with the numerical zeros of one type-(1,1) family.

    python3 scripts/lift_limits.py 2 1 -1 3 --n 120
"""
import argparse
import math
from fractions import Fraction

from hookparts.limits import wz_limits
from hookparts.poly import Poly
from hookparts.rootgeom import ThreeTermFamily, find_roots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name in "abcd":
        ap.add_argument(name, type=Fraction)
    ap.add_argument("--n", type=int, default=100)
    args = ap.parse_args()
    a, b, c, d = args.a, args.b, args.c, args.d
    r = wz_limits(a, b, c, d)
    print(f"discriminant {r.discriminant}")
    for cand in r.candidates:
        print(f"candidate {cand.point}: {'isolated' if cand.passes else 'rejected'}")
    print("arc endpoints", *map(str, r.arc_endpoints), "through", r.through_point)

    step, tail = Poly([b, a]), Poly([d, c])
    polys = [Poly([1]), Poly([0, 1])]
    for _ in range(2, args.n + 1):
        polys.append(step * polys[-1] + tail * polys[-2])
    family = ThreeTermFamily("P", Poly([1]), Poly([0, 1]), step, tail)
    zs = find_roots(polys[-1], evaluator=family.evaluator(args.n), certify=False)
    centre, radius2 = r.arc_circle()
    radius = math.sqrt(radius2)
    for z in r.isolated:
        print(f"nearest zero to {complex(z):.6f}: {min(abs(w - complex(z)) for w in zs.points):.2e}")
    devs = sorted(abs(abs(w - float(centre)) - radius) for w in zs.points)
    print(f"circle |z - {centre}| = {radius:.6f}; median deviation of P_{args.n} zeros {devs[len(devs) // 2]:.2e}")


if __name__ == "__main__":
    main()
