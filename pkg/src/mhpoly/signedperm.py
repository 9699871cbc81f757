"""Signed permutations: the hyperoctahedral group ``B_n = C_2 wr S_n`` and ``W(D_n)``.

An element is written ``[a_1, ..., a_n; sigma]`` with ``a_i`` in ``{1, -1}``.
Internally ``perm`` is a 0-indexed tuple of images, ``perm[i] = sigma(i)``;
cycle notation on output is 1-indexed.  The product is

    [a; sigma] [b; pi] = [a_1 b_{sigma^-1(1)}, ..., a_n b_{sigma^-1(n)}; sigma pi]

and ``W(D_n)`` is the index-2 subgroup where the signs multiply to ``+1``.

Besides group operations this module holds the brute-force oracles
(conjugacy classes by orbit computation, centralizers by counting) and the
exact determinant ``det(I + x A)`` used to check the closed forms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import factorial

from .config import DEFAULT_LIMITS
from .errors import ResourceCapError
from .partitions import SignedPartition, is_split_class
from .poly import ONE, Polynomial

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SignedPerm:
    signs: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.signs)
        if len(self.perm) != n:
            raise ValueError("signs and permutation have different lengths")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs}")

    @property
    def n(self) -> int:
        return len(self.signs)

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls((1,) * n, tuple(range(n)))

    @classmethod
    def from_cycles(cls, signs, cycles=()) -> SignedPerm:
        """Build from signs and 1-indexed cycles, e.g. ``([1, -1], [(1, 2)])``."""
        n = len(signs)
        perm = list(range(n))
        for cyc in cycles:
            for i, j in zip(cyc, cyc[1:] + cyc[:1]):
                perm[i - 1] = j - 1
        return cls(tuple(signs), tuple(perm))

    @classmethod
    def parse(cls, text: str) -> SignedPerm:
        """Parse ``[1,-1,-1,1,1,-1;(145)(26)]``; use commas inside cycles when n > 9."""
        m = re.fullmatch(r"\s*\[([^;]*);([^\]]*)\]\s*", text)
        if not m:
            raise ValueError(f"cannot parse signed permutation {text!r}")
        signs = [int(s) for s in m.group(1).split(",")]
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", m.group(2)):
            if "," in body:
                cycles.append([int(t) for t in body.split(",")])
            else:
                cycles.append([int(t) for t in body.strip()])
        return cls.from_cycles(signs, cycles)

    def is_even(self) -> bool:
        """Membership in ``W(D_n)``."""
        neg = sum(1 for s in self.signs if s < 0)
        return neg % 2 == 0

    def cycles(self) -> list[list[int]]:
        """Cycles of ``sigma`` as 0-indexed lists, each starting at its least
        element, fixed points included."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc, i = [], start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.perm[i]
            out.append(cyc)
        return out

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        return compose(self, other)

    def __str__(self) -> str:
        signs = ",".join(str(s) for s in self.signs)
        sep = "," if self.n > 9 else ""
        cyc = "".join(
            "(" + sep.join(str(i + 1) for i in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        )
        return f"[{signs};{cyc or 'e'}]"


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    if a.n != b.n:
        raise ValueError(f"cannot compose elements of B_{a.n} and B_{b.n}")
    sigma = a.perm
    inv = [0] * a.n
    for i, j in enumerate(sigma):
        inv[j] = i
    signs = tuple(a.signs[i] * b.signs[inv[i]] for i in range(a.n))
    perm = tuple(sigma[b.perm[i]] for i in range(a.n))
    return SignedPerm(signs, perm)


def invert(a: SignedPerm) -> SignedPerm:
    inv = [0] * a.n
    for i, j in enumerate(a.perm):
        inv[j] = i
    return SignedPerm(tuple(a.signs[a.perm[i]] for i in range(a.n)), tuple(inv))


def conjugate(g: SignedPerm, a: SignedPerm) -> SignedPerm:
    """``g a g^-1``."""
    return compose(compose(g, a), invert(g))


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_LIMITS.oracle_cap if cap is None else cap
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise ResourceCapError(f"n = {n} exceeds the enumeration cap {cap}")


def iter_bn(n: int, cap: int | None = None):
    """All of ``B_n``: lexicographic permutations, signs in binary-counter order
    within each (last sign flips fastest, ``+1`` before ``-1``)."""
    _check_cap(n, cap)
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPerm(signs, perm)


def enumerate_bn(n: int, cap: int | None = None) -> list[SignedPerm]:
    return list(iter_bn(n, cap))


def enumerate_dn(n: int, cap: int | None = None) -> list[SignedPerm]:
    return [w for w in iter_bn(n, cap) if w.is_even()]


def group_elements(group: str, n: int, cap: int | None = None) -> list[SignedPerm]:
    group = group.lower()
    if group == "bn":
        return enumerate_bn(n, cap)
    if group == "dn":
        return enumerate_dn(n, cap)
    raise ValueError(f"unknown group {group!r}; expected 'bn' or 'dn'")


def cycle_products(a: SignedPerm) -> list[tuple[int, int]]:
    """(length, product of signs) for every cycle of ``sigma``, sorted."""
    out = []
    for cyc in a.cycles():
        s = 1
        for i in cyc:
            s *= a.signs[i]
        out.append((len(cyc), s))
    return sorted(out)


def class_label(a: SignedPerm) -> SignedPartition:
    return SignedPartition.from_blocks(cycle_products(a), a.n)


def standard_representative(lam: SignedPartition) -> SignedPerm:
    """Representative with consecutive cycles ``(i, i+1, ..., i+k-1)``.

    A positive part of length k gets signs ``1_k``; a negative one gets ``-1_k``
    for odd k and ``(-1, 1, ..., 1)`` for even k.
    """
    signs: list[int] = []
    cycles: list[list[int]] = []
    start = 1
    for k, s in lam.blocks():
        if s == 1:
            signs += [1] * k
        elif k % 2:
            signs += [-1] * k
        else:
            signs += [-1] + [1] * (k - 1)
        cycles.append(list(range(start, start + k)))
        start += k
    return SignedPerm.from_cycles(signs, cycles)


def action_matrix(a: SignedPerm) -> Matrix:
    """Signed permutation matrix of ``a`` on the rank-n character lattice.

    Column i has its single nonzero entry in row ``sigma(i)``, equal to the sign
    carried to that position: ``A[sigma(i)][i] = a_{sigma(i)}``.  With this
    convention ``action_matrix(a * b) == action_matrix(a) @ action_matrix(b)``.
    """
    n = a.n
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(a.perm):
        rows[j][i] = a.signs[j]
    return tuple(tuple(r) for r in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def char_det_closed(lam: SignedPartition) -> Polynomial:
    """``det(I + x A_w)`` for ``w`` in the class ``lam``.

    ``prod_i (1 - (-x)^i)^{a_i} * prod_j (1 + (-x)^j)^{b_j}``.
    """
    result = ONE
    for i, (a, b) in enumerate(zip(lam.pos, lam.neg), 1):
        sign = -1 if i % 2 else 1  # (-x)^i = sign * x^i
        if a:
            result = result * (ONE - Polynomial.monomial(i, sign)) ** a
        if b:
            result = result * (ONE + Polynomial.monomial(i, sign)) ** b
    return result


# Integer polynomial helpers for the fraction-free determinant. Coefficient
# lists are little-endian and may carry trailing zeros.


def _pstrip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _pstrip(out)


def _psub(p: list[int], q: list[int]) -> list[int]:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, b in enumerate(q):
        out[i] -= b
    return _pstrip(out)


def _pdivexact(p: list[int], d: list[int]) -> list[int]:
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return []
    rem = list(p)
    lead = d[-1]
    q = [0] * (len(rem) - len(d) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(rem[k + len(d) - 1], lead)
        if r:
            raise ArithmeticError("inexact division in Bareiss elimination")
        q[k] = c
        if c:
            for i, dc in enumerate(d):
                rem[k + i] -= c * dc
    if any(rem):
        raise ArithmeticError("inexact division in Bareiss elimination")
    return _pstrip(q)


def det_one_plus_x(m: Matrix) -> list[int]:
    """Integer coefficients of ``det(I + x m)`` by Bareiss elimination over Z[x]."""
    n = len(m)
    if n == 0:
        return [1]
    a = [
        [_pstrip([1 if i == j else 0, m[i][j]]) for j in range(n)]
        for i in range(n)
    ]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(piv, a[i][j]), _pmul(a[i][k], a[k][j]))
                a[i][j] = _pdivexact(num, prev)
        prev = piv
    det = a[n - 1][n - 1]
    return [sign * c for c in det]


def char_det_matrix(m: Matrix, cap: int | None = None) -> Polynomial:
    _check_cap(len(m), cap)
    return Polynomial(det_one_plus_x(m))


def centralizer_order_bruteforce(a: SignedPerm, group: str = "bn", cap: int | None = None) -> int:
    return sum(1 for g in group_elements(group, a.n, cap) if compose(g, a) == compose(a, g))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: SignedPerm
    size: int
    label: SignedPartition
    split: bool = False


def conjugacy_classes_bruteforce(group: str, n: int, cap: int | None = None) -> list[ConjugacyClass]:
    """Conjugation orbits of ``B_n`` or ``W(D_n)``, in order of first appearance.

    Each class is represented by the standard representative of its label when
    that element lies in the class, otherwise by its first element in
    enumeration order.
    """
    elements = group_elements(group, n, cap)
    seen: set[SignedPerm] = set()
    out = []
    for a in elements:
        if a in seen:
            continue
        orbit = {conjugate(g, a) for g in elements}
        seen |= orbit
        label = class_label(a)
        rep = standard_representative(label)
        if rep not in orbit:
            rep = a
        split = group.lower() == "dn" and is_split_class(label)
        out.append(ConjugacyClass(rep, len(orbit), label, split))
    return out


def group_order(group: str, n: int) -> int:
    order = 2**n * factorial(n)
    return order if group.lower() == "bn" else order // 2
