"""Classification and generation of polynomial zeros.

Weight-1 zeros come from the multiplicative equation v x = u y and its
four-parameter solution; weight-2 zeros from the quadratic Q polynomial and
its Pell reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import FactorizationFailed, NoUnitEntry, NotAZero
from .pell import PellProblem, PellSolution
from .threej import (
    ReggeSquare,
    ThreeJ,
    _POSITION_MAPS,
    _regge_entries,
    canonical_form,
    degree,
    from_regge,
    racah_value,
    raynal_order,
    regge_value,
    trivial_zero_reason,
)

__all__ = [
    "NON_ZERO",
    "TRIVIAL_ZERO",
    "POLYNOMIAL_ZERO",
    "ZeroClassification",
    "ZeroRecord",
    "Weight1Params",
    "Weight2Instance",
    "classify",
    "weight1_regge",
    "weight1_from_params",
    "weight1_factor",
    "brudno_family",
    "lindner_criterion",
    "weight2_Q",
    "weight2_regge",
    "weight2_pell",
    "weight2_parametric",
    "weight2_search",
    "weight2_variables",
]

NON_ZERO = "NonZero"
TRIVIAL_ZERO = "TrivialZero"
POLYNOMIAL_ZERO = "PolynomialZero"


class ZeroClassification(NamedTuple):
    kind: str
    reason: str | None = None
    degree: int | None = None
    order: int | None = None


def classify(s: ThreeJ) -> ZeroClassification:
    reason = trivial_zero_reason(s)
    if reason is not None:
        return ZeroClassification(TRIVIAL_ZERO, reason, None, -1)
    if not racah_value(s).is_zero():
        return ZeroClassification(NON_ZERO, None, None, raynal_order(s))
    e = _regge_entries(s)
    assert e is not None
    return ZeroClassification(POLYNOMIAL_ZERO, None, min(e), raynal_order(s))


@dataclass(frozen=True)
class ZeroRecord:
    square: ReggeSquare  # canonical representative
    J: int
    degree: int
    order: int
    generator: str

    @classmethod
    def from_square(cls, r: ReggeSquare, generator: str) -> "ZeroRecord":
        """Canonicalize and verify; raises NotAZero unless r is a polynomial zero."""
        s = from_regge(r)
        c = classify(s)
        if c.kind != POLYNOMIAL_ZERO:
            raise NotAZero(f"{s} is {c.kind}" + (f" ({c.reason})" if c.reason else ""))
        canon, _ = canonical_form(r)
        return cls(canon, r.J, c.degree, c.order, generator)  # type: ignore[arg-type]

    @property
    def symbol(self) -> ThreeJ:
        return from_regge(self.square)

    def sort_key(self) -> tuple:
        return (self.J, self.square.entries)


# ---------------------------------------------------------------------------
# weight 1
# ---------------------------------------------------------------------------


class Weight1Params(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    delta: int

    def xyuv(self) -> tuple[int, int, int, int]:
        a, b, g, d = self
        return a * b, b * d, a * g, g * d


def weight1_regge(x: int, y: int, u: int, v: int) -> ReggeSquare:
    """[1, y+v-1, x+u-1; u+v-1, x, y; x+y-1, u, v] for a solution of v x = u y."""
    if min(x, y, u, v) < 1:
        raise ValueError("weight-1 parameters are positive integers")
    if v * x != u * y:
        raise NotAZero(f"v x = {v * x} differs from u y = {u * y}")
    return ReggeSquare.from_rows(((1, y + v - 1, x + u - 1), (u + v - 1, x, y), (x + y - 1, u, v)))


def weight1_from_params(p: Weight1Params) -> ReggeSquare:
    if min(p) < 1:
        raise ValueError("weight-1 parameters are positive integers")
    return weight1_regge(*p.xyuv())


def _unit_corner(r: ReggeSquare) -> ReggeSquare:
    """An orbit element with a 1 in the top-left corner, r itself if possible."""
    if r.entries[0] == 1:
        return r
    e = r.entries
    for pos, _ in _POSITION_MAPS:
        if e[pos[0]] == 1:
            return ReggeSquare(tuple(e[k] for k in pos))
    raise NoUnitEntry(f"{r} has no entry equal to 1")


def weight1_factor(r: ReggeSquare) -> Weight1Params:
    """(alpha, beta, gamma, delta) with x = alpha beta, y = beta delta, u = alpha gamma, v = gamma delta."""
    if degree(r) != 1:
        raise NoUnitEntry(f"{r} does not have weight 1")
    c = _unit_corner(r)
    x, y, u, v = c[1, 1], c[1, 2], c[2, 1], c[2, 2]
    if v * x != u * y:
        raise NotAZero(f"{r} is not a weight-1 zero (v x != u y)")
    a = math.gcd(x, u)
    b, g = x // a, u // a
    if y % b == 0 and v % g == 0 and y // b == v // g:
        return Weight1Params(a, b, g, y // b)
    # fallback: any divisor alpha of gcd(x, u)
    for a in range(1, math.gcd(x, u) + 1):
        if x % a or u % a:
            continue
        b, g = x // a, u // a
        if y % b == 0 and v % g == 0 and y // b == v // g:
            return Weight1Params(a, b, g, y // b)
    raise FactorizationFailed(f"no factorization for (x, y, u, v) = {(x, y, u, v)}")


def brudno_family(which: int, n: int) -> ThreeJ:
    if n < 1:
        raise ValueError("n must be at least 1")
    if which == 1:
        return ThreeJ(6 * n, 4 * n + 2, 2 * n + 2, 6 * n - 2, -4 * n, 2 - 2 * n)
    if which == 2:
        return ThreeJ(4 * n + 2, 4 * n, 4, 2 * n + 2, -2 * n, -2)
    raise ValueError("family is 1 or 2")


def lindner_criterion(r: ReggeSquare) -> bool:
    """Whether the 2x2 minor complementary to a unit entry vanishes."""
    if 1 not in r.entries:
        raise NoUnitEntry(f"{r} has no entry equal to 1")
    k = r.entries.index(1)
    i, j = divmod(k, 3)
    rows = [a for a in range(3) if a != i]
    cols = [b for b in range(3) if b != j]
    m = [[r[a, b] for b in cols] for a in rows]
    return m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0


# ---------------------------------------------------------------------------
# weight 2
# ---------------------------------------------------------------------------


class Weight2Instance(NamedTuple):
    u1: int
    u2: int

    @property
    def D(self) -> int:
        u1, u2 = self
        return u1 * u2 * (u1 + u2 - 1)

    @property
    def N(self) -> int:
        u1, u2 = self
        return -u1 * (u1 - 1) ** 2 * (u2 - 1) * (u1 + u2)


def weight2_Q(u1: int, u2: int, x1: int, x2: int) -> int:
    return (
        2 * u1 * (u1 - 1) * (x1 - u2 + 1) * (x1 - u2 + 2)
        - 4 * u1 * u2 * (x1 - u2 + 2) * x2
        + 2 * u2 * (u2 - 1) * x2 * (x2 - 1)
    )


def weight2_regge(u1: int, u2: int, x1: int, x2: int) -> ReggeSquare:
    return ReggeSquare.from_rows(
        (
            (2, x1, x2 + u1 - 2),
            (u1 + u2 - 2, x2, x1 - u2 + 2),
            (x1 + x2 - u2, u1, u2),
        )
    )


def weight2_variables(r: ReggeSquare) -> tuple[int, int, int, int] | None:
    """(u1, u2, x1, x2) when r has the weight-2 array shape (2 in the corner)."""
    if r[0, 0] != 2:
        return None
    return r[2, 1], r[2, 2], r[0, 1], r[1, 1]


def _check_instance(w: Weight2Instance) -> None:
    if w.u1 < 2 or w.u2 < 2:
        raise ValueError("u1 and u2 must be at least 2")


def weight2_pell(w: Weight2Instance) -> PellProblem:
    _check_instance(w)
    return PellProblem(w.D, w.N)


def weight2_parametric(w: Weight2Instance) -> tuple[PellSolution, PellSolution]:
    _check_instance(w)
    u1, u2 = w
    return (
        PellSolution(u1 * (u1 - 1), u1 - 1, w.D, w.N),
        PellSolution(u1 * (u1 + 2 * u2 - 1), u1 + 1, w.D, w.N),
    )


def _weight2_points(w: Weight2Instance, x1_max: int, x2_max: int) -> Iterator[tuple[int, int]]:
    u1, u2 = w
    for x1 in range(u2, x1_max + 1):
        for x2 in range(2, x2_max + 1):
            if weight2_Q(u1, u2, x1, x2) == 0:
                yield x1, x2


def weight2_search(w: Weight2Instance, x1_max: int, x2_max: int) -> list[ZeroRecord]:
    """Q-zeros in the box u2 <= x1 <= x1_max, 2 <= x2 <= x2_max, as verified records."""
    _check_instance(w)
    out = []
    for x1, x2 in _weight2_points(w, x1_max, x2_max):
        r = weight2_regge(w.u1, w.u2, x1, x2)
        if not regge_value(r).is_zero():
            raise AssertionError(f"Q vanishes at {(w.u1, w.u2, x1, x2)} but the 3j does not")
        out.append(ZeroRecord.from_square(r, "weight2"))
    return out

