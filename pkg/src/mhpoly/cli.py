"""Command-line interface.

    mhpoly compute  --group sp --n 2 --r 3 [--format text|json|latex]
    mhpoly verify   --group so-even --n-max 4 --r-max 3
    mhpoly classes  --type dn --n 4
    mhpoly general  --matrices group.json --r 2     (or --preset sl --n 3)

Exit codes: 0 success, 1 failed verification or non-integral Weyl average,
2 usage / input error (including a non-group matrix file), 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import hodge
from .config import DEFAULT_LIMITS
from .errors import ClosureError, IntegralityError, ResourceCapError
from .hodge import MatrixGroup, MHPResult
from .partitions import (
    BAR,
    centralizer_order_bn,
    centralizer_order_dn,
    enumerate_even_signed_partitions,
    enumerate_signed_partitions,
    is_split_class,
)
from .serialize import SPECIALIZATIONS, ResultDocument, coeff_strings, render
from .signedperm import SignedPerm, centralizer_order_bruteforce, conjugate, group_order, standard_representative

log = logging.getLogger("mhpoly")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CLOSED_GROUPS = ("gl", "sp", "so-odd", "so-even")


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# compute


def _cache_path(cache_dir: str, family: str, n: int, r: int, mode: str | None) -> Path:
    return Path(cache_dir) / f"{family}-n{n}-r{r}-{mode or 'na'}.json"


def cmd_compute(args) -> int:
    family = hodge.normalize_family(args.group)
    if family == "SO_even" and args.n < 2:
        raise UsageError("so-even needs --n >= 2")
    if args.n < 1 or args.r < 1:
        raise UsageError("--n and --r must be positive")
    mode = hodge.normalize_mode(args.mode) if family == "SO_even" else None

    doc = None
    path = None
    if args.cache_dir:
        path = _cache_path(args.cache_dir, family, args.n, args.r, mode)
        if path.exists():
            log.info("cache hit %s", path)
            doc = ResultDocument.from_json(path.read_text(encoding="utf-8"))
    if doc is None:
        doc = ResultDocument.from_result(hodge.compute(family, args.n, args.r, mode))
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(doc.to_json(), encoding="utf-8")
    try:
        doc = doc.with_specialization(args.specialization)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(render(doc, args.format), args.output)
    return EXIT_OK


# verify


def verify_report(group: str, n_max: int, r_max: int, oracle_cap: int, workers: int | None = None) -> dict:
    """Compare closed forms with the Weyl average for every ``n <= n_max``, ``r <= r_max``."""
    family = hodge.normalize_family(group)
    if family not in hodge.CLOSED_FORM_FAMILIES:
        raise UsageError(f"no closed form to verify for {group}")
    if n_max > oracle_cap:
        raise ResourceCapError(f"--n-max {n_max} exceeds the oracle cap {oracle_cap}")
    n_min = 2 if family == "SO_even" else 1
    comparisons, erratum = [], []
    for n in range(n_min, n_max + 1):
        dist = hodge.det_distribution(hodge.weyl_matrix_presets(family, n, cap=oracle_cap), workers)
        for r in range(1, r_max + 1):
            oracle = hodge.weyl_average(dist, r)
            modes = ("corrected", "as_printed") if family == "SO_even" else (None,)
            for mode in modes:
                if mode == "as_printed":
                    closed = hodge.mhp_so_even(n, r, mode)
                else:
                    closed = hodge.closed_form(family, n, r, mode)
                row = {
                    "n": n,
                    "r": r,
                    "mode": mode,
                    "closed_form": coeff_strings(closed),
                    "oracle": coeff_strings(oracle),
                    "match": closed == oracle,
                }
                comparisons.append(row)
                if mode == "as_printed" and not row["match"]:
                    erratum.append({"n": n, "r": r, "as_printed": str(closed), "oracle": str(oracle)})
    required = [c for c in comparisons if c["mode"] != "as_printed"]
    return {
        "family": family,
        "n_max": n_max,
        "r_max": r_max,
        "variable": "x = t*u*v",
        "comparisons": comparisons,
        "all_match": all(c["match"] for c in required),
        "as_printed_mismatches": erratum,
    }


def cmd_verify(args) -> int:
    cap = _oracle_cap(args)
    report = verify_report(args.group, args.n_max, args.r_max, cap, args.workers)
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for c in report["comparisons"]:
            tag = "" if c["mode"] is None else f" [{c['mode']}]"
            status = "match" if c["match"] else "MISMATCH"
            lines.append(f"{report['family']} n={c['n']} r={c['r']}{tag}: {status}")
        for e in report["as_printed_mismatches"]:
            lines.append(f"as_printed n={e['n']} r={e['r']}: {e['as_printed']}  vs oracle {e['oracle']}")
        lines.append("ALL MATCH" if report["all_match"] else "FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if report["all_match"] else EXIT_FAIL


def _oracle_cap(args) -> int:
    cap = args.oracle_cap
    if cap > DEFAULT_LIMITS.oracle_cap and not args.allow_large:
        raise UsageError(
            f"--oracle-cap {cap} is above the default {DEFAULT_LIMITS.oracle_cap}; "
            "pass --allow-large to confirm"
        )
    return cap


# classes


def class_rows(group: str, n: int, brute_cap: int = DEFAULT_LIMITS.brute_cap, cap: int | None = None) -> list[dict]:
    """One row per conjugacy class of ``B_n`` or ``W(D_n)``.

    A split ``W(D_n)`` class yields two rows with the same label; the second
    representative is the first conjugated by ``[-1, 1, ..., 1; e]``.
    """
    group = group.lower()
    cap = DEFAULT_LIMITS.oracle_cap if cap is None else cap
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds the cap {cap}")
    order = group_order(group, n)
    if group == "bn":
        labels = enumerate_signed_partitions(n)
    elif group == "dn":
        labels = enumerate_even_signed_partitions(n)
    else:
        raise UsageError(f"unknown type {group!r}")
    flip = SignedPerm((-1,) + (1,) * (n - 1), tuple(range(n)))
    rows = []
    for lam in labels:
        rep = standard_representative(lam)
        if group == "bn":
            reps, cent, split = [rep], centralizer_order_bn(lam), False
        else:
            split = is_split_class(lam)
            cent = centralizer_order_dn(lam)
            reps = [rep, conjugate(flip, rep)] if split else [rep]
        for copy, w in enumerate(reps):
            row = {
                "label": str(lam),
                "label_ascii": lam.ascii(),
                "label_latex": lam.latex(),
                "representative": str(w),
                "class_size": order // cent,
                "centralizer_order": cent,
            }
            if group == "dn":
                row["split"] = split
                row["copy"] = copy
            if n <= brute_cap:
                row["centralizer_order_bruteforce"] = centralizer_order_bruteforce(w, group, cap)
            rows.append(row)
    return rows


def _table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    cols = [c for c in ("label", "representative", "class_size", "centralizer_order", "centralizer_order_bruteforce", "split") if rows and c in rows[0]]
    if fmt == "latex":
        head = " & ".join(c.replace("_", " ") for c in cols)
        body = []
        for row in rows:
            cells = []
            for c in cols:
                v = row[c]
                if c == "label":
                    v = "$" + row["label_latex"] + "$"
                elif c == "representative":
                    v = "$" + str(v) + "$"
                cells.append(str(v))
            body.append(" & ".join(cells) + r" \\")
        spec = "|" + "c|" * len(cols)
        return "\n".join([f"\\begin{{tabular}}{{{spec}}}", "\\hline", head + r" \\", "\\hline", *body, "\\hline", "\\end{tabular}"]) + "\n"
    widths = [max(len(c), *(_width(r[c]) for r in rows)) for c in cols]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    for row in rows:
        cells = (str(row[c]) + " " * (w - _width(row[c])) for c, w in zip(cols, widths))
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _width(v) -> int:
    s = str(v)
    return len(s) - s.count(BAR)


def cmd_classes(args) -> int:
    rows = class_rows(args.type, args.n, brute_cap=args.brute_cap)
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


# general


def load_matrix_file(path: str) -> list[list[list[int]]]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read matrix file {path}: {e}") from None
    if not isinstance(data, dict) or "matrices" not in data or "n" not in data:
        raise UsageError('matrix file must be an object with keys "n" and "matrices"')
    n = data["n"]
    if not _is_int(n) or n < 1:
        raise UsageError('"n" must be a positive integer')
    mats = data["matrices"]
    if not isinstance(mats, list) or not mats:
        raise UsageError('"matrices" must be a nonempty list')
    for k, m in enumerate(mats):
        if not isinstance(m, list) or len(m) != n or any(not isinstance(row, list) or len(row) != n for row in m):
            raise UsageError(f"matrix {k} is not {n}x{n}")
        if not all(_is_int(v) for row in m for v in row):
            raise UsageError(f"matrix {k} has non-integer entries")
    return mats


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def cmd_general(args) -> int:
    cap = _oracle_cap(args)
    if args.matrices:
        group = MatrixGroup.from_matrices(load_matrix_file(args.matrices), cap=cap)
        family, n = "custom", group.dim
    elif args.preset:
        if args.n is None:
            raise UsageError("--preset needs --n")
        group = hodge.weyl_matrix_presets(args.preset, args.n, cap=cap)
        family, n = hodge.normalize_family(args.preset), args.n
    else:
        raise UsageError("pass --matrices FILE or --preset FAMILY --n N")
    status = EXIT_OK
    try:
        result = hodge.compute_general(group, args.r, args.workers, family=family, n=n)
    except IntegralityError as e:
        log.warning("%s", e)
        result = MHPResult(family, n, args.r, e.polynomial, group.dim, len(group))
        status = EXIT_FAIL
    doc = ResultDocument.from_result(result)
    if args.specialization != "none" and status == EXIT_OK:
        doc = doc.with_specialization(args.specialization)
    _emit(render(doc, args.format), args.output)
    return status


# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mhpoly", description="Mixed Hodge polynomials of abelian character varieties.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="closed-form mixed Hodge polynomial")
    c.add_argument("--group", required=True, choices=CLOSED_GROUPS)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--mode", default="corrected", choices=("corrected", "as-printed", "as_printed"))
    c.add_argument("--specialization", default="none", choices=SPECIALIZATIONS)
    c.add_argument("--format", default="text", choices=("text", "json", "latex"))
    c.add_argument("--output")
    c.add_argument("--cache-dir")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="closed form against the Weyl-group average")
    v.add_argument("--group", required=True, choices=CLOSED_GROUPS)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--r-max", type=int, required=True)
    v.add_argument("--oracle-cap", type=int, default=DEFAULT_LIMITS.oracle_cap)
    v.add_argument("--allow-large", action="store_true", help="permit --oracle-cap above the default")
    v.add_argument("--workers", type=int, help="overrides MHPOLY_WORKERS")
    v.add_argument("--format", default="json", choices=("json", "text"))
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classes", help="conjugacy classes of B_n or W(D_n)")
    k.add_argument("--type", required=True, choices=("bn", "dn"))
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--brute-cap", type=int, default=DEFAULT_LIMITS.brute_cap)
    k.add_argument("--format", default="text", choices=("text", "json", "latex"))
    k.add_argument("--output")
    k.set_defaults(func=cmd_classes)

    g = sub.add_parser("general", help="Weyl-group average over a given matrix group")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrices", help='JSON file {"n": N, "matrices": [...]}')
    src.add_argument("--preset", choices=("gl", "sl", "sp", "so-odd", "so-even"))
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--oracle-cap", type=int, default=DEFAULT_LIMITS.oracle_cap)
    g.add_argument("--allow-large", action="store_true")
    g.add_argument("--workers", type=int)
    g.add_argument("--specialization", default="none", choices=SPECIALIZATIONS)
    g.add_argument("--format", default="text", choices=("text", "json", "latex"))
    g.add_argument("--output")
    g.set_defaults(func=cmd_general)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ClosureError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
