"""Partitions, signed partitions and the centralizer orders they index.

Both kinds of partition are stored as multiplicity vectors, the form in which
the closed-form sums are written: ``mult[i-1]`` is the number of parts equal to
``i``.  A signed partition carries two such vectors, one for parts with cycle
product ``+1`` and one for parts with cycle product ``-1``.

Canonical order
---------------
Enumeration is in *descending* lexicographic order of the multiplicity vector.
For signed partitions the vector is read interleaved as
``(a_1, b_1, a_2, b_2, ..., a_n, b_n)``, which lists the five signed
partitions of 2 as ``[1^2], [1 1̄], [1̄^2], [2], [2̄]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

# combining macron, rendered as a bar over the preceding digit
BAR = "\u0304"


@dataclass(frozen=True, order=True)
class Partition:
    mult: tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.mult):
            raise ValueError(f"negative multiplicity in {self.mult}")
        if self.size == 0:
            raise ValueError("empty partition")

    @property
    def n(self) -> int:
        return len(self.mult)

    @property
    def size(self) -> int:
        return sum(i * m for i, m in enumerate(self.mult, 1))

    @classmethod
    def from_parts(cls, parts, n: int | None = None) -> Partition:
        parts = list(parts)
        n = sum(parts) if n is None else n
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        return cls(tuple(mult))

    def parts(self) -> list[int]:
        """Parts in weakly decreasing order."""
        return [i for i in range(self.n, 0, -1) for _ in range(self.mult[i - 1])]

    def __str__(self) -> str:
        return "[" + " ".join(_power(str(i), m) for i, m in enumerate(self.mult, 1) if m) + "]"


@dataclass(frozen=True, order=True)
class SignedPartition:
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        if len(self.pos) != len(self.neg):
            raise ValueError("positive and negative multiplicity vectors differ in length")
        if any(m < 0 for m in self.pos + self.neg):
            raise ValueError("negative multiplicity")
        if self.size != self.n:
            raise ValueError(
                f"multiplicities sum to {self.size}, expected n = {self.n}"
            )

    @property
    def n(self) -> int:
        return len(self.pos)

    @property
    def size(self) -> int:
        return sum(i * (a + b) for i, (a, b) in enumerate(zip(self.pos, self.neg), 1))

    @property
    def negative_count(self) -> int:
        """Number of negative parts, counted with multiplicity."""
        return sum(self.neg)

    def is_even(self) -> bool:
        """True when the class lies in the index-2 subgroup ``W(D_n)``."""
        return self.negative_count % 2 == 0

    def interleaved(self) -> tuple[int, ...]:
        return tuple(m for pair in zip(self.pos, self.neg) for m in pair)

    def blocks(self) -> list[tuple[int, int]]:
        """(length, sign) of every part, ordered as in the standard representative."""
        out = []
        for i, (a, b) in enumerate(zip(self.pos, self.neg), 1):
            out += [(i, 1)] * a + [(i, -1)] * b
        return out

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> SignedPartition:
        blocks = list(blocks)
        n = sum(k for k, _ in blocks) if n is None else n
        pos, neg = [0] * n, [0] * n
        for k, s in blocks:
            if s == 1:
                pos[k - 1] += 1
            elif s == -1:
                neg[k - 1] += 1
            else:
                raise ValueError(f"cycle product must be +1 or -1, got {s}")
        return cls(tuple(pos), tuple(neg))

    @classmethod
    def parse(cls, text: str) -> SignedPartition:
        """Parse labels such as ``[1̄ 2 3]``, ``[1^2 2b]`` or ``-1 2 3``.

        A negative part may be written with a combining bar, a trailing ``b``,
        a leading ``-`` or as ``\\overline{k}``.
        """
        body = text.strip().strip("[]")
        body = re.sub(r"\\overline\{(\d+)\}", r"\1b", body)
        blocks = []
        for tok in re.findall(r"-?\d+(?:\u0304|b)?(?:\^\{?\d+\}?)?", body):
            m = re.fullmatch(r"(-?)(\d+)(\u0304|b)?(?:\^\{?(\d+)\}?)?", tok)
            sign = -1 if (m.group(1) or m.group(3)) else 1
            blocks += [(int(m.group(2)), sign)] * int(m.group(4) or 1)
        if not blocks:
            raise ValueError(f"cannot parse signed partition {text!r}")
        return cls.from_blocks(blocks)

    def __str__(self) -> str:
        tokens = []
        for i, (a, b) in enumerate(zip(self.pos, self.neg), 1):
            if a:
                tokens.append(_power(str(i), a))
            if b:
                tokens.append(_power(f"{i}{BAR}", b))
        return "[" + " ".join(tokens) + "]"

    def ascii(self) -> str:
        tokens = []
        for i, (a, b) in enumerate(zip(self.pos, self.neg), 1):
            if a:
                tokens.append(_power(str(i), a))
            if b:
                tokens.append(_power(f"{i}b", b))
        return "[" + " ".join(tokens) + "]"

    def latex(self) -> str:
        tokens = []
        for i, (a, b) in enumerate(zip(self.pos, self.neg), 1):
            if a:
                tokens.append(f"{i}^{{{a}}}")
            if b:
                tokens.append(f"\\overline{{{i}}}^{{{b}}}")
        return "[" + "".join(tokens) + "]"


def _power(base: str, m: int) -> str:
    return base if m == 1 else f"{base}^{m}"


def _multiplicity_vectors(n: int, sizes: list[int]) -> Iterator[tuple[int, ...]]:
    """All vectors m with sum(sizes[j] * m[j]) == n, descending lexicographic."""

    def rec(j: int, remaining: int):
        if j == len(sizes):
            if remaining == 0:
                yield ()
            return
        s = sizes[j]
        for m in range(remaining // s, -1, -1):
            for rest in rec(j + 1, remaining - m * s):
                yield (m,) + rest

    yield from rec(0, n)


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(v) for v in _multiplicity_vectors(n, list(range(1, n + 1))))


@lru_cache(maxsize=None)
def _signed_partitions(n: int) -> tuple[SignedPartition, ...]:
    sizes = [i for i in range(1, n + 1) for _ in (0, 1)]
    return tuple(
        SignedPartition(v[0::2], v[1::2]) for v in _multiplicity_vectors(n, sizes)
    )


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def enumerate_partitions(n: int) -> list[Partition]:
    _check_n(n)
    return list(_partitions(n))


def enumerate_signed_partitions(n: int) -> list[SignedPartition]:
    _check_n(n)
    return list(_signed_partitions(n))


def enumerate_even_signed_partitions(n: int) -> list[SignedPartition]:
    """Signed partitions with an even number of negative parts (classes inside ``W(D_n)``)."""
    return [lam for lam in enumerate_signed_partitions(n) if lam.is_even()]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; p(0) = 1."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def centralizer_order_sn(lam: Partition) -> int:
    """Order of the centralizer in ``S_n`` of a permutation of cycle type ``lam``."""
    return prod(i**a * factorial(a) for i, a in enumerate(lam.mult, 1))


def centralizer_order_bn(lam: SignedPartition) -> int:
    """Order of the centralizer in ``C_2 wr S_n`` of an element labelled ``lam``.

    The centralizer is a product of wreath products ``(C_2 x C_i) wr S_a``, one
    for each part size and sign, of order ``(2i)^a a!``.
    """
    return prod(
        (2 * i) ** a * factorial(a) * (2 * i) ** b * factorial(b)
        for i, (a, b) in enumerate(zip(lam.pos, lam.neg), 1)
    )


def _require_even(lam: SignedPartition) -> None:
    if not lam.is_even():
        raise ValueError(
            f"{lam} has {lam.negative_count} negative parts; not a class of W(D_n)"
        )


def is_split_class(lam: SignedPartition) -> bool:
    """Whether the ``B_n`` class ``lam`` splits into two ``W(D_n)`` classes.

    This happens exactly when every part is even and positive; then the whole
    ``B_n`` centralizer already lies in ``W(D_n)``.
    """
    _require_even(lam)
    if any(lam.neg):
        return False
    return all(a == 0 for i, a in enumerate(lam.pos, 1) if i % 2)


def centralizer_order_dn(lam: SignedPartition) -> int:
    _require_even(lam)
    c = centralizer_order_bn(lam)
    return c if is_split_class(lam) else c // 2
