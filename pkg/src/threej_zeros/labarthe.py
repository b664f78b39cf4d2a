"""Labarthe L-patterns, the six-index Labarthe sum and partition counting."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .exact import HalfInt, SqrtRational, factorial
from .threej import ThreeJ, _regge_entries

__all__ = [
    "LPattern",
    "LDecomposition",
    "PRIMITIVE_PATTERNS",
    "BASIS",
    "pattern_of",
    "decompose",
    "labarthe_value",
    "labarthe_normalization",
    "single_sum_reduction",
    "weight1_pattern_decomposition",
    "weight1_condition_via_patterns",
    "partition_count",
    "hardy_ramanujan_estimate",
]


class LPattern(NamedTuple):
    """2x3 array stored doubled: top row (2a, 2b, 2c), bottom row (2alpha, 2beta, 2gamma)."""

    top: tuple[int, int, int]
    bottom: tuple[int, int, int]

    def __add__(self, other: "LPattern") -> "LPattern":  # type: ignore[override]
        return LPattern(
            tuple(x + y for x, y in zip(self.top, other.top)),  # type: ignore[arg-type]
            tuple(x + y for x, y in zip(self.bottom, other.bottom)),  # type: ignore[arg-type]
        )

    def scaled(self, k: int) -> "LPattern":
        return LPattern(tuple(k * x for x in self.top), tuple(k * x for x in self.bottom))  # type: ignore[arg-type]

    def rows(self) -> tuple[tuple[HalfInt, ...], tuple[HalfInt, ...]]:
        return tuple(HalfInt(x) for x in self.top), tuple(HalfInt(x) for x in self.bottom)

    def __str__(self) -> str:
        t, b = self.rows()
        return "[" + " ".join(map(str, t)) + " / " + " ".join(map(str, b)) + "]"


ZERO_PATTERN = LPattern((0, 0, 0), (0, 0, 0))

# e1..e6 in doubled units
PRIMITIVE_PATTERNS: tuple[LPattern, ...] = (
    LPattern((0, 1, 1), (0, 1, -1)),
    LPattern((1, 0, 1), (-1, 0, 1)),
    LPattern((1, 1, 0), (1, -1, 0)),
    LPattern((0, 1, 1), (0, -1, 1)),
    LPattern((1, 0, 1), (1, 0, -1)),
    LPattern((1, 1, 0), (-1, 1, 0)),
)

# Pattern multiplied by n_k in an LDecomposition. The closed-form solution
# below is written for this ordering of e1..e6; it keeps {e1,e2,e3} and
# {e4,e5,e6} as blocks, so p = n4 + n5 + n6 is unaffected.
BASIS: tuple[LPattern, ...] = tuple(PRIMITIVE_PATTERNS[i] for i in (2, 0, 1, 4, 5, 3))


def pattern_of(s: ThreeJ) -> LPattern:
    return LPattern((s.two_a, s.two_b, s.two_c), (s.two_alpha, s.two_beta, s.two_gamma))


class LDecomposition(NamedTuple):
    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n6: int

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def p(self) -> int:
        return self.n4 + self.n5 + self.n6

    def pattern(self) -> LPattern:
        out = ZERO_PATTERN
        for k, e in zip(self, BASIS):
            out = out + e.scaled(k)
        return out

    def term(self) -> Fraction:
        d = 1
        for k in self:
            d *= factorial(k)
        return Fraction(-1 if self.p % 2 else 1, d)


def _linear_data(s: ThreeJ) -> tuple[int, int, int, int, int]:
    """(a+b-c, b+beta, a-alpha, c-b+alpha, c-a-beta) as integers, or raise."""
    vals = (
        s.two_a + s.two_b - s.two_c,
        s.two_b + s.two_beta,
        s.two_a - s.two_alpha,
        s.two_c - s.two_b + s.two_alpha,
        s.two_c - s.two_a - s.two_beta,
    )
    if any(v % 2 for v in vals):
        raise ValueError(f"{s} has no integral L-pattern decomposition")
    return tuple(v // 2 for v in vals)  # type: ignore[return-value]


def _n5_range(s: ThreeJ) -> tuple[int, int]:
    if _regge_entries(s) is None:
        return 0, -1
    k1, k2, k3, k4, k6 = _linear_data(s)
    return max(-k6, -k4, 0), min(k1, k2, k3)


def decompose(s: ThreeJ) -> list[LDecomposition]:
    """All non-negative (n1..n6) with sum n_k BASIS_k equal to the pattern of s."""
    lo, hi = _n5_range(s)
    if hi < lo:
        return []
    k1, k2, k3, k4, k6 = _linear_data(s)
    return [LDecomposition(k1 - t, k2 - t, k3 - t, k4 + t, t, k6 + t) for t in range(lo, hi + 1)]


def labarthe_normalization(s: ThreeJ) -> SqrtRational:
    """Q = 1 / sqrt(T_abc T^-_abc,abg T^+_abc,abg)."""
    e = _regge_entries(s)
    if e is None:
        return SqrtRational.zero()
    tri = factorial(e[0]) * factorial(e[1]) * factorial(e[2])
    jm = 1
    for x in e[3:]:
        jm *= factorial(x)
    J = e[0] + e[1] + e[2]
    return SqrtRational(1, Fraction(tri * jm, factorial(J + 1)))


def labarthe_value(s: ThreeJ) -> SqrtRational:
    terms = [d.term() for d in decompose(s)]
    total = sum(terms, Fraction(0))
    if total == 0:
        return SqrtRational.zero()
    return labarthe_normalization(s) * total


class SingleSum(NamedTuple):
    lo: int
    hi: int
    terms: list[Fraction]


def single_sum_reduction(s: ThreeJ) -> SingleSum:
    """The Labarthe sum after eliminating every index but n5."""
    lo, hi = _n5_range(s)
    return SingleSum(lo, hi, [d.term() for d in decompose(s)])


def weight1_pattern_decomposition(x: int, y: int, u: int, v: int) -> LDecomposition:
    """y e1 + u e2 + e3 + (v-1) e4 + (x-1) e5, rewritten in the BASIS ordering.

    This is the lower end of the n5 range; the other end is obtained with
    e3 = e4 + e5 + e6 - e1 - e2.
    """
    if min(x, y, u, v) < 1:
        raise ValueError("weight-1 parameters are positive integers")
    # BASIS = (e3, e1, e2, e5, e6, e4)
    return LDecomposition(1, y, u, x - 1, 0, v - 1)


def weight1_condition_via_patterns(x: int, y: int, u: int, v: int) -> bool:
    """Vanishing of the Labarthe sum for the weight-1 pattern family.

    The two decompositions of ((x+u)/2, (y+v)/2, (x+y+u+v-2)/2;
    (x-u)/2, (y-v)/2, (u+v-x-y)/2) give the terms
    (-1)^(v+x) / (y! u! (v-1)! (x-1)!) and -(-1)^(v+x) / ((y-1)! (u-1)! v! x!),
    which cancel exactly when v x = u y.
    """
    if min(x, y, u, v) < 1:
        raise ValueError("weight-1 parameters are positive integers")
    s = ThreeJ(x + u, y + v, x + y + u + v - 2, x - u, y - v, u + v - x - y)
    total = sum((d.term() for d in decompose(s)), Fraction(0))
    return total == 0


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

_PARTITIONS: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    p = _PARTITIONS
    while len(p) <= n:
        m = len(p)
        total = 0
        k = 1
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
        p.append(total)
    return p[n]


def hardy_ramanujan_estimate(n: int) -> float:
    if n < 1:
        raise ValueError("the estimate needs n >= 1")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))
