"""Check the key expansion of every Schubert polynomial in S_1, ..., S_n.

    python3 scripts/key_expansion_sweep.py 5 --truncation crystal
"""

import argparse
import time

from pdcrystal.keylab import TRUNCATIONS, decompose_schubert
from pdcrystal.perm import all_permutations


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("--truncation", choices=TRUNCATIONS, default="d_tilde")
    ap.add_argument("--crystal-oracle", action="store_true", help="also compare with tableau Demazure crystals")
    args = ap.parse_args()

    t0 = time.perf_counter()
    for n in range(1, args.n + 1):
        perms = comps = 0
        failed = []
        for w in all_permutations(n):
            report = decompose_schubert(w, check=False, crystal_oracle=args.crystal_oracle, truncation=args.truncation)
            perms += 1
            comps += len(report.components)
            if not report.verified:
                failed.append(str(w))
        print(f"n={n}: {perms} permutations, {comps} components, {len(failed)} failures"
              + (f" ({', '.join(failed[:8])}{' ...' if len(failed) > 8 else ''})" if failed else ""))
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
