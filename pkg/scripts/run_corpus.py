"""Analyse every bundled fixture and print strata, verdicts and mismatches."""

import argparse
import sys

from rectifiable.corpus import run_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    summary = run_corpus(workers=args.workers)
    for r in summary.results:
        rep = r.report
        affine = rep.affine.get("stratum", rep.affine.get("error"))
        print(f"{r.name:18s} q {str(rep.euclidean_stratum):32s} "
              f"{rep.rectification['verdict']:10s} cubic {affine}")
    for r in summary.results:
        for note in r.notes:
            print("note:", note)
    for m in summary.mismatches:
        print("MISMATCH", m)
    return 0 if summary.ok else 3


if __name__ == "__main__":
    sys.exit(main())
