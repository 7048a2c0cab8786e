"""Involutes of a rectifiable curve and the round trip back through the evolute."""

import argparse
from fractions import Fraction

from rectifiable import evolute_of_radical, involutes, load_curve_spec
from rectifiable.corpus import FIXTURES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("spec", nargs="?", help="curve-spec file (default: semicubic fixture)")
    ap.add_argument("--c0", default="0", help="additive constant of the arc length")
    args = ap.parse_args()
    spec = load_curve_spec(args.spec) if args.spec else FIXTURES["semicubic"].spec
    curve = spec.to_curve()
    inv = involutes(curve, Fraction(args.c0))
    print("involute X =", inv.X)
    print("involute Y =", inv.Y)
    back = evolute_of_radical(inv)
    print("evolute of involute equals curve:", back.X.a == curve.x and back.Y.a == curve.y
          and back.X.is_rational and back.Y.is_rational)
    for t in (0.5, 1.0, 2.0):
        print(f"t={t}: involute point {inv.to_float(t)}")


if __name__ == "__main__":
    main()
