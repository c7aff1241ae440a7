#!/usr/bin/env python3
"""Compare table verdicts with the exact oracle and tally disagreements by case.

    python3 scripts/scan_oracle.py --m 3 --N-max 2 --grid-size 4 --critical
"""
import argparse
import json
from collections import Counter

from dunkl_sym.reps import classify, classify_summary, sample_kappas


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--N-max", type=int, default=2)
    ap.add_argument("--grid-size", type=int, default=4)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--critical", action="store_true", help="also evaluate critical hyperplane points")
    args = ap.parse_args()

    generic = sample_kappas(args.m, args.grid_size, args.seed)
    recs = classify(args.m, args.N_max, generic, excluded=True, critical=args.critical)
    by_case = Counter()
    bad = Counter()
    unit = Counter()
    for r in recs:
        case = r["spec"]["case"]
        by_case[case] += 1
        if not r["agree"]:
            bad[(case, r["point"].split(":")[0], r["table_irreducible"], r["oracle"]["irreducible"])] += 1
        if not r["unitary_consistent"]:
            unit[case] += 1
    print(json.dumps({"summary": classify_summary(recs)}, sort_keys=True))
    for case in sorted(by_case):
        print(json.dumps({"case": case, "evaluations": by_case[case], "unitary_inconsistent": unit[case]}))
    for (case, kind, table, oracle), n in sorted(bad.items()):
        print(json.dumps({"disagree": {"case": case, "point": kind, "table_irreducible": table,
                                       "oracle_irreducible": oracle, "count": n}}))


if __name__ == "__main__":
    main()
