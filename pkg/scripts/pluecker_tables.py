"""Print Plücker and evolute count tables for a range of degrees."""

import argparse
from dataclasses import astuple, fields

from rectifiable.pluecker import EvoluteCounts, PlueckerRecord, evolute_counts, pluecker


def table(rows, cls):
    names = [f.name for f in fields(cls)]
    print("  ".join(f"{n:>16s}" for n in names))
    for row in rows:
        print("  ".join(f"{'-' if v is None else v!s:>16s}" for v in astuple(row)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    degrees = range(2, args.max_degree + 1)
    for variant in ("rational", "generic"):
        print(f"\n{variant} curves")
        table([pluecker(d, variant) for d in degrees], PlueckerRecord)
        print(f"\n{variant} evolutes")
        table([evolute_counts(d, variant) for d in degrees], EvoluteCounts)


if __name__ == "__main__":
    main()
