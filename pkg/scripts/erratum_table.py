"""Compare the as-printed and corrected SO(2n) sums against the Weyl average.

Prints one row per (n, r) with the three polynomials and a flag marking rows
where the as-printed sum disagrees with the Weyl average.  Disagreements occur
exactly for even n, where split classes are present.

    python3 scripts/erratum_table.py --n-max 5 --r-max 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from mhpoly.hodge import det_distribution, mhp_so_even, weyl_average, weyl_matrix_presets
from mhpoly.partitions import enumerate_even_signed_partitions, is_split_class


@dataclass(frozen=True)
class Config:
    n_max: int = 5
    r_max: int = 3


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in range(2, cfg.n_max + 1):
        dist = det_distribution(weyl_matrix_presets("SO_even", n))
        split = sum(is_split_class(lam) for lam in enumerate_even_signed_partitions(n))
        for r in range(1, cfg.r_max + 1):
            oracle = weyl_average(dist, r)
            printed = mhp_so_even(n, r, "as_printed")
            rows.append(
                dict(
                    n=n,
                    r=r,
                    split_labels=split,
                    oracle=oracle.format(),
                    corrected_ok=mhp_so_even(n, r, "corrected") == oracle,
                    as_printed=printed.format(),
                    as_printed_ok=printed == oracle,
                )
            )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--r-max", type=int, default=Config.r_max)
    args = ap.parse_args()
    cfg = Config(args.n_max, args.r_max)
    for row in run(cfg):
        flag = "ok" if row["as_printed_ok"] else "MISMATCH"
        print(f"n={row['n']} r={row['r']} split={row['split_labels']} corrected_ok={row['corrected_ok']} as_printed={flag}")
        if not row["as_printed_ok"]:
            print(f"    weyl average : {row['oracle']}")
            print(f"    as printed   : {row['as_printed']}")


if __name__ == "__main__":
    main()
