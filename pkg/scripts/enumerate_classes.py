#!/usr/bin/env python3
"""Print the isomorphism-class census for a range of extension degrees.

Usage: python scripts/enumerate_classes.py [--d-min 1] [--d-max 8]
"""

import argparse

from ss3 import list_classes, make_context


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d-min", type=int, default=1)
    parser.add_argument("--d-max", type=int, default=8)
    args = parser.parse_args()

    for d in range(args.d_min, args.d_max + 1):
        ctx = make_context(d)
        entries = list_classes(ctx)
        print(f"\nGF(3^{d})  q={ctx.q}  beta={ctx.beta}  classes={len(entries)}")
        for entry in entries:
            inv = entry.cls.invariant if entry.cls.invariant is not None else "-"
            print(
                f"  {entry.cls.ctype.value:<4} inv={inv:<7} "
                f"a4={entry.rep.a4} a6={entry.rep.a6} "
                f"order={entry.result.order} trace={entry.result.frobenius_trace}"
            )


if __name__ == "__main__":
    main()
