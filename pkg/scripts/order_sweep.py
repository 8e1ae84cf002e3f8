"""Which monomial orders make the minor set a Groebner basis?

Prints one row per (n, d): minor count, and for each order whether the
Buchberger check passes and whether the leading monomials cover every
monomial of degree n-d+1.

    python scripts/order_sweep.py --max-n 7
"""

import argparse
import time

from shiftbasis.circulant import ShiftShape
from shiftbasis.groebner import check_buchberger
from shiftbasis.poly import ORDER_KINDS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    header = f"{'n':>3} {'d':>3} {'minors':>7} " + " ".join(f"{k:>14}" for k in ORDER_KINDS)
    print(header)
    print("-" * len(header))
    t0 = time.perf_counter()
    for n in range(1, args.max_n + 1):
        for d in range(1, n + 1):
            shape = ShiftShape(n, d)
            cells = []
            for kind in ORDER_KINDS:
                r = check_buchberger(shape, kind)
                cells.append(f"{'GB' if not r.failures else 'no'}/{'full' if r.lm_set_complete else 'gap'}"
                             f"({len(r.failures)})")
            print(f"{n:>3} {d:>3} {shape.minor_count:>7} " + " ".join(f"{c:>14}" for c in cells))
    print(f"\nGB = all S-pairs reduce to 0; full/gap = leading monomials cover degree n-d+1;"
          f" (k) = failing pairs.  {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
