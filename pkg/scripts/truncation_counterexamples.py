"""Compare the three ways of finding a_D on every highest weight pipe dream in S_n.

For each component the slid diagram (d_tilde), the bottom-up lift and the
crystal's own extremal weight are computed; rows where they disagree are
printed, followed by a tally.

    python3 scripts/truncation_counterexamples.py 5
    python3 scripts/truncation_counterexamples.py 6 --json out.json
"""

import argparse
import json
import time

from pdcrystal.crystal import decompose
from pdcrystal.keylab import algorithm_d_tilde, crystal_truncation, insertion_tableau, lift
from pdcrystal.perm import all_permutations
from pdcrystal.rfc import phi


def compare(n):
    rows = []
    for w in all_permutations(n):
        for c in decompose(w):
            D = c.highest
            rows.append({
                "permutation": list(w.window),
                "crosses": [list(x) for x in D.key()],
                "lambda": list(c.lam),
                "d_tilde": list(algorithm_d_tilde(D).weight(n)),
                "lift_top_down": list(lift(insertion_tableau(phi(D).reading_word())).weight(n)),
                "lift_bottom_up": list(lift(insertion_tableau(phi(D).reading_word()), "bottom-up").weight(n)),
                "crystal": list(crystal_truncation(c.members, n)),
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--json", help="write every row to this file")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = compare(args.n)
    methods = ("d_tilde", "lift_top_down", "lift_bottom_up")
    for r in rows:
        if any(r[m] != r["crystal"] for m in methods):
            w = "".join(map(str, r["permutation"]))
            print(f"[{w}] lambda={r['lambda']} crystal={r['crystal']} d_tilde={r['d_tilde']} "
                  f"bottom_up={r['lift_bottom_up']} crosses={r['crosses']}")
    print(f"n={args.n}: {len(rows)} components in {time.perf_counter() - t0:.1f}s")
    for m in methods:
        bad = sum(r[m] != r["crystal"] for r in rows)
        print(f"  {m:15s} disagrees with the crystal on {bad}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
