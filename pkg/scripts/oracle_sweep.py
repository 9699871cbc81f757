"""Time every closed form against its Weyl-group average.

    python3 scripts/oracle_sweep.py --n-max 5 --r-max 4 --workers 1
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from mhpoly.hodge import closed_form, det_distribution, weyl_average, weyl_matrix_presets

FAMILIES = ("GL", "Sp", "SO_odd", "SO_even")


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 5
    r_max: int = 4
    workers: int = 1


def sweep(cfg: SweepConfig):
    for family in FAMILIES:
        first = 2 if family == "SO_even" else 1
        for n in range(first, cfg.n_max + 1):
            t0 = time.perf_counter()
            group = weyl_matrix_presets(family, n)
            dist = det_distribution(group, workers=cfg.workers)
            t_oracle = time.perf_counter() - t0
            ok = True
            t0 = time.perf_counter()
            for r in range(1, cfg.r_max + 1):
                ok &= closed_form(family, n, r) == weyl_average(dist, r)
            t_closed = time.perf_counter() - t0
            yield family, n, len(group), len(dist), ok, t_oracle, t_closed


def main() -> None:
    ap = argparse.ArgumentParser(description="closed form vs Weyl average timings")
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    ap.add_argument("--r-max", type=int, default=SweepConfig.r_max)
    ap.add_argument("--workers", type=int, default=SweepConfig.workers)
    args = ap.parse_args()
    cfg = SweepConfig(args.n_max, args.r_max, args.workers)
    print(f"{'family':8} {'n':>2} {'|W|':>6} {'dets':>5} {'match':>5} {'oracle s':>9} {'closed s':>9}")
    for family, n, order, distinct, ok, t_o, t_c in sweep(cfg):
        print(f"{family:8} {n:>2} {order:>6} {distinct:>5} {str(ok):>5} {t_o:>9.3f} {t_c:>9.3f}")


if __name__ == "__main__":
    main()
