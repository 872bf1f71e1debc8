#!/usr/bin/env python3
"""Compare the closed-form count against the character-sum oracle.

The oracle walks all q field elements, the closed form is a handful of
exponentiations, so the gap widens as 3^d. The oracle column stops at the
enumeration cap.

Usage: python scripts/benchmark_counting.py [--d-max 10] [--repeat 5]
"""

import argparse
import random
import time

from ss3 import count_supersingular, make_context, naive_count, oracle_cap, random_supersingular_curve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d-max", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'d':>3} {'q':>16} {'closed-form':>13} {'oracle':>13} {'speedup':>10}")
    for d in range(1, args.d_max + 1):
        ctx = make_context(d)
        curves = [random_supersingular_curve(ctx, rng) for _ in range(args.repeat)]

        start = time.perf_counter()
        orders = [count_supersingular(e).order for e in curves]
        closed = (time.perf_counter() - start) / args.repeat

        if ctx.q <= oracle_cap():
            start = time.perf_counter()
            oracle_orders = [naive_count(e) for e in curves]
            oracle = (time.perf_counter() - start) / args.repeat
            assert orders == oracle_orders
            ratio = f"{oracle / closed:10.1f}" if closed else "inf"
            print(f"{d:>3} {ctx.q:>16} {closed * 1e3:>11.3f}ms {oracle * 1e3:>11.3f}ms {ratio}")
        else:
            print(f"{d:>3} {ctx.q:>16} {closed * 1e3:>11.3f}ms {'(capped)':>13}")


if __name__ == "__main__":
    main()
