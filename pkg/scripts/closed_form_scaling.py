"""Closed-form cost for ranks far beyond the reach of the Weyl sum.

The number of summands is the number of (signed) partitions of n, so the
closed forms stay cheap long after |W| = 2^n n! is out of reach.  Also reports
the Poincare polynomial at t = 1, i.e. the total Betti number.

    python3 scripts/closed_form_scaling.py --family Sp --n-max 14 --r 2
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from mhpoly.hodge import compute, poincare, weyl_order
from mhpoly.partitions import enumerate_even_signed_partitions, enumerate_partitions, enumerate_signed_partitions


@dataclass(frozen=True)
class ScalingConfig:
    family: str = "Sp"
    n_max: int = 12
    r: int = 2


def summands(family: str, n: int) -> int:
    if family == "GL":
        return len(enumerate_partitions(n))
    if family == "SO_even":
        return len(enumerate_even_signed_partitions(n))
    return len(enumerate_signed_partitions(n))


def main() -> None:
    ap = argparse.ArgumentParser(description="closed-form scaling in n")
    ap.add_argument("--family", default=ScalingConfig.family, choices=("GL", "Sp", "SO_odd", "SO_even"))
    ap.add_argument("--n-max", type=int, default=ScalingConfig.n_max)
    ap.add_argument("--r", type=int, default=ScalingConfig.r)
    args = ap.parse_args()
    cfg = ScalingConfig(args.family, args.n_max, args.r)

    first = 2 if cfg.family == "SO_even" else 1
    print(f"{'n':>3} {'terms':>7} {'|W|':>14} {'seconds':>8}  total Betti")
    for n in range(first, cfg.n_max + 1):
        t0 = time.perf_counter()
        m = compute(cfg.family, n, cfg.r)
        dt = time.perf_counter() - t0
        betti = poincare(m)(1)
        print(f"{n:>3} {summands(cfg.family, n):>7} {weyl_order(cfg.family, n):>14} {dt:>8.3f}  {betti}")


if __name__ == "__main__":
    main()
