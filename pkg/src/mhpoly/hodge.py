"""Mixed Hodge polynomials of ``M^0_{Z^r} G`` for classical groups.

Two routes are implemented and kept independent of each other:

* the Weyl-group average ``(1/|W|) sum_w det(I + x A_w)^r`` over an explicit
  finite matrix group (:func:`mhp_general`), which knows nothing about
  partitions and computes every determinant by elimination;
* the closed forms, which sum over conjugacy-class labels (partitions or
  signed partitions) weighted by inverse centralizer orders.

Throughout ``x = t*u*v``.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .config import DEFAULT_LIMITS, worker_count
from .errors import ClosureError, IntegralityError, NotRoundError, ResourceCapError
from .partitions import (
    centralizer_order_bn,
    centralizer_order_sn,
    enumerate_even_signed_partitions,
    enumerate_partitions,
    enumerate_signed_partitions,
    is_split_class,
)
from .poly import ONE, ZERO, Polynomial
from .signedperm import Matrix, action_matrix, char_det_closed, det_one_plus_x, iter_bn, matmul

log = logging.getLogger(__name__)

FAMILIES = ("GL", "SL", "Sp", "SO_odd", "SO_even", "custom")
CLOSED_FORM_FAMILIES = ("GL", "Sp", "SO_odd", "SO_even")
MODES = ("corrected", "as_printed")

_FAMILY_ALIASES = {
    "gl": "GL",
    "sl": "SL",
    "sp": "Sp",
    "so-odd": "SO_odd",
    "so_odd": "SO_odd",
    "so-even": "SO_even",
    "so_even": "SO_even",
    "custom": "custom",
}


def normalize_family(name: str) -> str:
    try:
        return _FAMILY_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown group family {name!r}") from None


def normalize_mode(mode: str | None) -> str:
    if mode is None:
        return "corrected"
    m = mode.lower().replace("-", "_")
    if m not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return m


# Matrix groups and the Weyl-sum oracle


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class MatrixGroup:
    """A finite group of integer matrices, validated on construction."""

    matrices: tuple[Matrix, ...]
    dim: int

    @classmethod
    def from_matrices(cls, matrices, validate: bool = True, cap: int | None = None) -> MatrixGroup:
        mats = tuple(tuple(tuple(int(v) for v in row) for row in m) for m in matrices)
        if not mats:
            raise ClosureError("empty set of matrices")
        dim = len(mats[0])
        for m in mats:
            if len(m) != dim or any(len(row) != dim for row in m):
                raise ValueError("matrices must all be square of the same size")
        group = cls(mats, dim)
        _check_group_cap(group, cap)
        if validate:
            group.validate()
        return group

    def __len__(self) -> int:
        return len(self.matrices)

    def validate(self) -> None:
        """Check this is a group: identity present and closed under products.

        Closure is tested along a generating set picked greedily from the
        elements: once ``S * g`` lies in ``S`` for every generator ``g`` and the
        generated subgroup exhausts ``S``, the set is a group.  A violation is
        reported as the first pair whose product escapes the set.
        """
        members = set(self.matrices)
        if len(members) != len(self.matrices):
            raise ClosureError("duplicate matrices in group")
        ident = _identity(self.dim)
        if ident not in members:
            raise ClosureError("identity matrix is missing")
        generated = {ident}
        frontier = [ident]
        gens: list[Matrix] = []
        for m in self.matrices:
            if m in generated:
                continue
            gens.append(m)
            # new generator: every known element times it, then saturate
            frontier = list(generated)
            while frontier:
                nxt = []
                for h in frontier:
                    for g in gens:
                        p = matmul(h, g)
                        if p not in members:
                            raise ClosureError(
                                f"product of {list(map(list, h))} and {list(map(list, g))} "
                                "is not in the set"
                            )
                        if p not in generated:
                            generated.add(p)
                            nxt.append(p)
                frontier = nxt


def _check_group_cap(group: MatrixGroup, cap: int | None) -> None:
    cap = DEFAULT_LIMITS.oracle_cap if cap is None else cap
    if group.dim > cap:
        raise ResourceCapError(f"matrix size {group.dim} exceeds the oracle cap {cap}")
    limit = 2**cap * factorial(cap)
    if len(group) > limit:
        raise ResourceCapError(f"{len(group)} elements exceed the oracle cap ({limit})")


def _det_counts(matrices) -> Counter:
    return Counter(tuple(det_one_plus_x(m)) for m in matrices)


def _chunks(seq, k: int):
    size = -(-len(seq) // k)
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def det_distribution(group: MatrixGroup, workers: int | None = None) -> list[tuple[Polynomial, int]]:
    """How many group elements give each ``det(I + x A)``, sorted by coefficients.

    With ``workers > 1`` the elements are split into contiguous chunks and the
    per-chunk counts added; counting is exact so the result does not depend on
    the split.
    """
    workers = worker_count() if workers is None else workers
    mats = list(group.matrices)
    if workers <= 1 or len(mats) < 2 * workers:
        counts = _det_counts(mats)
    else:
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_det_counts, _chunks(mats, workers)):
                counts.update(part)
    return [(Polynomial(k), counts[k]) for k in sorted(counts)]


def weyl_average(dist: list[tuple[Polynomial, int]], r: int) -> Polynomial:
    total = sum(c for _, c in dist)
    acc = ZERO
    for det, count in dist:
        acc = acc + (det**r).scale(count)
    return acc.scale(Fraction(1, total))


def _require_integral(mu: Polynomial, what: str) -> Polynomial:
    bad = [(k, c) for k, c in enumerate(mu.coeffs) if c.denominator != 1 or c < 0]
    if bad:
        shown = ", ".join(f"x^{k}: {c}" for k, c in bad)
        raise IntegralityError(
            f"{what} is not a mixed Hodge polynomial; offending coefficients {shown}",
            polynomial=mu,
            offending=bad,
        )
    return mu


def mhp_general(group: MatrixGroup, r: int, workers: int | None = None) -> Polynomial:
    """``(1/|W|) sum_w det(I + x A_w)^r`` over the matrices of ``group``.

    Raises :class:`IntegralityError` (carrying the rational result) when the
    average has a negative or non-integer coefficient.
    """
    _check_r(r)
    mu = weyl_average(det_distribution(group, workers), r)
    return _require_integral(mu, "Weyl average")


# Preset Weyl group actions


def _perm_matrix(perm) -> Matrix:
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[j][i] = 1
    return tuple(tuple(r) for r in rows)


def _sl_matrix(perm) -> Matrix:
    """Permutation ``perm`` of S_n acting on Z^n / Z(1,...,1), in the basis
    ``w_j = e_1 + ... + e_j`` (j < n).  Coordinates of ``v`` in that basis are
    ``v_j - v_{j+1}``."""
    n = len(perm)
    cols = []
    for j in range(1, n):
        v = [0] * n
        for i in range(j):
            v[perm[i]] += 1
        cols.append([v[k] - v[k + 1] for k in range(n - 1)])
    return tuple(tuple(cols[c][r] for c in range(n - 1)) for r in range(n - 1))


def weyl_rank(family: str, n: int) -> int:
    family = normalize_family(family)
    return n - 1 if family == "SL" else n


def weyl_order(family: str, n: int) -> int:
    family = normalize_family(family)
    if family in ("GL", "SL"):
        return factorial(n)
    if family in ("Sp", "SO_odd"):
        return 2**n * factorial(n)
    if family == "SO_even":
        return 2 ** (n - 1) * factorial(n)
    raise ValueError(f"no Weyl group attached to family {family}")


def weyl_matrix_presets(family: str, n: int, cap: int | None = None) -> MatrixGroup:
    """Weyl group of a classical family as matrices on ``H^1`` of the maximal torus."""
    family = normalize_family(family)
    cap = DEFAULT_LIMITS.oracle_cap if cap is None else cap
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds the oracle cap {cap}")
    if family == "GL":
        mats = [_perm_matrix(p) for p in itertools.permutations(range(n))]
    elif family == "SL":
        if n < 2:
            raise ValueError("SL_n needs n >= 2")
        mats = [_sl_matrix(p) for p in itertools.permutations(range(n))]
    elif family in ("Sp", "SO_odd"):
        mats = [action_matrix(w) for w in iter_bn(n, cap)]
    elif family == "SO_even":
        mats = [action_matrix(w) for w in iter_bn(n, cap) if w.is_even()]
    else:
        raise ValueError(f"no preset for family {family}")
    return MatrixGroup.from_matrices(mats, cap=cap)


# Closed forms


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def _check_n(n: int, least: int = 1) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def mhp_gl(n: int, r: int) -> Polynomial:
    _check_n(n)
    _check_r(r)
    acc = ZERO
    for lam in enumerate_partitions(n):
        term = ONE
        for i, a in enumerate(lam.mult, 1):
            if a:
                sign = -1 if i % 2 else 1
                term = term * (ONE - Polynomial.monomial(i, sign)) ** (a * r)
        acc = acc + term.scale(Fraction(1, centralizer_order_sn(lam)))
    return _require_integral(acc, f"GL_{n} closed form")


def _signed_sum(labels, r: int) -> Polynomial:
    acc = ZERO
    for lam in labels:
        acc = acc + (char_det_closed(lam) ** r).scale(Fraction(1, centralizer_order_bn(lam)))
    return acc


def mhp_sp(n: int, r: int) -> Polynomial:
    _check_n(n)
    _check_r(r)
    mu = _signed_sum(enumerate_signed_partitions(n), r)
    return _require_integral(mu, f"Sp_{2 * n} closed form")


def mhp_so_odd(n: int, r: int) -> Polynomial:
    # the torus of SO_{2n+1} is W-equivariantly isomorphic to that of Sp_{2n}
    return mhp_sp(n, r)


def mhp_so_even(n: int, r: int, mode: str = "corrected") -> Polynomial:
    """Mixed Hodge polynomial of ``M^0_{Z^r} SO_{2n}``.

    ``corrected`` computes ``2 * sum over even signed partitions of
    det^r / |Z_{B_n}|``; a class that splits in ``W(D_n)`` contributes two
    classes with the full ``B_n`` centralizer, any other class one class with
    half of it, and both give the same weight.

    ``as_printed`` reproduces the published two-sum display, where the split
    classes carry weight 1 instead of 2.  It is wrong whenever split classes
    exist (``n`` even); for ``n = 2, r = 1`` it gives ``(3 + x^2)/4``.  It is
    returned without an integrality check.
    """
    _check_n(n, least=2)
    _check_r(r)
    mode = normalize_mode(mode)
    labels = enumerate_even_signed_partitions(n)
    if mode == "corrected":
        mu = _signed_sum(labels, r).scale(2)
        return _require_integral(mu, f"SO_{2 * n} closed form")
    split = [lam for lam in labels if is_split_class(lam)]
    rest = [lam for lam in labels if not is_split_class(lam)]
    first = ZERO
    for lam in split:
        term = ONE
        for i, a in enumerate(lam.pos, 1):
            if a:
                term = term * (ONE - Polynomial.monomial(i)) ** (a * r)
        first = first + term.scale(Fraction(1, centralizer_order_bn(lam)))
    return first + _signed_sum(rest, r).scale(2)


def closed_form(family: str, n: int, r: int, mode: str | None = None) -> Polynomial:
    family = normalize_family(family)
    if family == "GL":
        return mhp_gl(n, r)
    if family == "Sp":
        return mhp_sp(n, r)
    if family == "SO_odd":
        return mhp_so_odd(n, r)
    if family == "SO_even":
        return mhp_so_even(n, r, normalize_mode(mode))
    raise ValueError(f"no closed form for family {family}")


# Results and specializations


@dataclass(frozen=True)
class MHPResult:
    family: str
    n: int
    r: int
    mu: Polynomial
    rank: int
    weyl_order: int
    mode: str | None = None

    @property
    def dim(self) -> int:
        return self.r * self.rank

    @property
    def nonintegral(self) -> bool:
        return not self.mu.is_nonnegative_integral()


def compute(family: str, n: int, r: int, mode: str | None = None) -> MHPResult:
    """Closed-form result with metadata.  ``mode`` only applies to SO_even."""
    family = normalize_family(family)
    if family == "SO_even":
        mode = normalize_mode(mode)
        # the printed formula may be non-integral; report rather than raise
        mu = mhp_so_even(n, r, mode)
    else:
        mode = None
        mu = closed_form(family, n, r)
    return MHPResult(family, n, r, mu, weyl_rank(family, n), weyl_order(family, n), mode)


def compute_general(group: MatrixGroup, r: int, workers: int | None = None, family: str = "custom", n: int | None = None) -> MHPResult:
    """Weyl-sum result with metadata.  Integrality failures propagate."""
    mu = mhp_general(group, r, workers)
    return MHPResult(family, group.dim if n is None else n, r, mu, group.dim, len(group))


def _require_valid(m: MHPResult) -> None:
    if m.nonintegral:
        raise NotRoundError(f"{m.mu} has negative or non-integer coefficients")


def poincare(m: MHPResult) -> Polynomial:
    """Poincare polynomial in ``t`` (``u = v = 1``)."""
    _require_valid(m)
    return m.mu


def e_polynomial(m: MHPResult) -> Polynomial:
    """E-polynomial as a polynomial in ``uv`` (``t = -1``)."""
    _require_valid(m)
    return m.mu.substitute_sign()


def euler_characteristic(m: MHPResult) -> int:
    _require_valid(m)
    return int(m.mu(-1))


def hodge_numbers(m: MHPResult) -> list[int]:
    """``[h^{0,0,0}, h^{1,1,1}, ...]``; all other mixed Hodge numbers vanish."""
    _require_valid(m)
    return m.mu.int_coeffs()


def structural_violations(m: MHPResult) -> list[str]:
    """Checks every genuine result must pass; returns a list of failures."""
    out = []
    mu = m.mu
    if mu[0] != 1:
        out.append(f"constant term {mu[0]} != 1")
    if not mu.is_nonnegative_integral():
        out.append("coefficients are not all nonnegative integers")
    if mu.degree > m.dim:
        out.append(f"degree {mu.degree} exceeds r*rank = {m.dim}")
    if m.r % 2 == 0 and mu[m.dim] != 1:
        out.append(f"coefficient of x^{m.dim} is {mu[m.dim]}, expected 1 for even r")
    return out
