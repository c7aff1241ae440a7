#!/usr/bin/env python3
"""Check the even-m closed forms for T, O and A(k) against group sums, printed vs corrected constants."""
import argparse
from collections import Counter

from dunkl_sym.reps import (CORRECTED_FORMS, PRINTED_FORMS, build_rep, compatible_specs,
                            even_closed_form_check, sample_kappas)


def tally(m: int, N_max: int, kappa, forms: dict) -> Counter:
    out = Counter()
    for spec in compatible_specs(m, N_max, kappa):
        res = even_closed_form_check(build_rep(spec, strict=False), **forms)
        out["cells"] += 1
        for name, ok in res.items():
            out[name] += not ok
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[2, 4, 6])
    ap.add_argument("--N-max", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    for m in args.m:
        if m % 2:
            raise SystemExit("closed forms only exist for even m")
        kappa = sample_kappas(m, 1, args.seed)[0]
        for label, forms in (("printed", PRINTED_FORMS), ("corrected", CORRECTED_FORMS)):
            t = tally(m, args.N_max, kappa, forms)
            fails = {k: v for k, v in sorted(t.items()) if k != "cells" and v}
            print(f"m={m} kappa={tuple(map(str, kappa))} {label:9s} cells={t['cells']} mismatches={fails or 'none'}")


if __name__ == "__main__":
    main()
