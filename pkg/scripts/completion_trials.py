"""Random-search basis completion against the Schwartz-Zippel bound.

For each shape, draws random rank-(d-1) integer matrices F, runs the random
strategy, and compares the observed per-draw failure rate with the bound
(n-d+1)/|S|.  The grid strategy is run on the same F as a control.

    python scripts/completion_trials.py --trials 200 --seed 1
"""

import argparse
import random
from fractions import Fraction

from shiftbasis.circulant import ShiftShape
from shiftbasis.completion import GRID, RANDOM, ProblemInstance, sample_bound, solve, verify
from shiftbasis.field import FieldSpec
from shiftbasis.linalg import ScalarMatrix, scalar_rank

SHAPES = [(4, 2), (5, 3), (6, 4), (7, 3), (8, 5)]


def random_instance(rng, shape, field):
    while True:
        rows = [[rng.randint(-5, 5) for _ in range(shape.n)] for _ in range(shape.d - 1)]
        F = ScalarMatrix.from_rows(rows, field, cols=shape.n)
        if scalar_rank(F) == shape.d - 1:
            return ProblemInstance(shape, F)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--field", default="q")
    args = ap.parse_args()
    field = FieldSpec.parse(args.field)
    rng = random.Random(args.seed)

    print(f"{'n':>3} {'d':>3} {'bound':>7} {'fail/draw':>10} {'mean draws':>11} {'grid mean':>10} {'verified':>9}")
    for n, d in SHAPES:
        shape = ShiftShape(n, d)
        draws = grid_draws = ok = 0
        for _ in range(args.trials):
            inst = random_instance(rng, shape, field)
            r = solve(inst, RANDOM, seed=rng.randrange(2**32))
            g = solve(inst, GRID)
            draws += r.attempts
            grid_draws += g.attempts
            ok += verify(inst, [v.value for v in r.x]) and verify(inst, [v.value for v in g.x])
        fail_rate = Fraction(draws - args.trials, draws)
        print(f"{n:>3} {d:>3} {float(sample_bound(shape)):>7.3f} {float(fail_rate):>10.3f} "
              f"{draws / args.trials:>11.2f} {grid_draws / args.trials:>10.2f} {ok:>5}/{args.trials}")


if __name__ == "__main__":
    main()
