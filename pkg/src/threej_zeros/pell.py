"""Pell and Pell-like equations, continued fractions of sqrt(D), powerful numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from sympy import factorint

from .errors import PerfectSquare

__all__ = [
    "PellProblem",
    "CFExpansion",
    "PellSolution",
    "cf_sqrt",
    "convergents",
    "pell_fundamental",
    "pell_solutions",
    "chebyshev_T",
    "chebyshev_U",
    "chebyshev_family",
    "negative_pell",
    "negative_pell_necessary",
    "pell_like",
    "same_class",
    "brahmagupta_compose",
    "is_powerful",
    "powerful_pairs_type1",
]


def _check_d(D: int) -> None:
    if D < 2:
        raise ValueError(f"D must be at least 2, got {D}")
    r = math.isqrt(D)
    if r * r == D:
        raise PerfectSquare(f"D = {D} is a perfect square")


class PellProblem(NamedTuple):
    D: int
    N: int = 1

    @property
    def is_square(self) -> bool:
        return self.D >= 0 and math.isqrt(self.D) ** 2 == self.D


class PellSolution(NamedTuple):
    x: int
    y: int
    D: int
    N: int

    def check(self) -> bool:
        return self.x * self.x - self.D * self.y * self.y == self.N


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(D) = [a0; period], with P_n, Q_n for n = 0 .. len(period)."""

    D: int
    a0: int
    period: tuple[int, ...]
    P: tuple[int, ...] = field(repr=False)
    Q: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        """Index with a_{m+1} = 2 a0."""
        return len(self.period) - 1

    def a(self, n: int) -> int:
        if n == 0:
            return self.a0
        return self.period[(n - 1) % len(self.period)]

    def Q_at(self, n: int) -> int:
        # Q is periodic with the same period, starting at index 1
        if n == 0:
            return 1
        L = len(self.period)
        return self.Q[(n - 1) % L + 1]


def cf_sqrt(D: int) -> CFExpansion:
    _check_d(D)
    a0 = math.isqrt(D)
    P, Q, a = [0, a0], [1, D - a0 * a0], [a0]
    a.append((a0 + P[1]) // Q[1])
    while a[-1] != 2 * a0:
        n = len(P)
        P.append(a[n - 1] * Q[n - 1] - P[n - 1])
        Q.append((D - P[n] * P[n]) // Q[n - 1])
        a.append((a0 + P[n]) // Q[n])
    return CFExpansion(D, a0, tuple(a[1:]), tuple(P), tuple(Q))


def convergents(cf: CFExpansion, count: int) -> Iterator[tuple[int, int]]:
    """(p_n, q_n) for n = 0 .. count-1."""
    p2, q2 = 1, 0
    p1, q1 = cf.a0, 1
    if count <= 0:
        return
    yield p1, q1
    for n in range(1, count):
        an = cf.a(n)
        p1, p2 = an * p1 + p2, p1
        q1, q2 = an * q1 + q2, q1
        yield p1, q1


def _convergent(cf: CFExpansion, n: int) -> tuple[int, int]:
    for pq in convergents(cf, n + 1):
        pass
    return pq


def pell_fundamental(D: int) -> PellSolution:
    cf = cf_sqrt(D)
    m = cf.m
    x, y = _convergent(cf, m if m % 2 else 2 * m + 1)
    return PellSolution(x, y, D, 1)


def pell_solutions(D: int, count: int | None = None) -> Iterator[PellSolution]:
    """Positive solutions of x^2 - D y^2 = 1 in increasing order, fundamental first."""
    f = pell_fundamental(D)
    x, y = f.x, f.y
    k = 0
    while count is None or k < count:
        yield PellSolution(x, y, D, 1)
        x, y = f.x * x + D * f.y * y, f.y * x + f.x * y
        k += 1


def chebyshev_T(n: int, x: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    t0, t1 = 1, x
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, 2 * x * t1 - t0
    return t1


def chebyshev_U(n: int, x: int) -> int:
    """Schur's U_n = U_{n-1} of the usual notation: U_0 = 0, U_1 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u0, u1 = 0, 1
    if n == 0:
        return u0
    for _ in range(n - 1):
        u0, u1 = u1, 2 * x * u1 - u0
    return u1


def chebyshev_family(D: int, count: int) -> list[PellSolution]:
    """(T_n(x0), y0 U_n(x0)) for n = 1 .. count."""
    f = pell_fundamental(D)
    return [PellSolution(chebyshev_T(n, f.x), f.y * chebyshev_U(n, f.x), D, 1) for n in range(1, count + 1)]


def negative_pell(D: int) -> PellSolution | None:
    cf = cf_sqrt(D)
    if cf.m % 2:
        return None
    x, y = _convergent(cf, cf.m)
    return PellSolution(x, y, D, -1)


def negative_pell_necessary(D: int) -> bool:
    """D not divisible by 4 and no odd prime factor of the form 4k+3.

    The factor 2 is allowed once (D = 2 is solvable), so the test is applied
    to the odd primes only.
    """
    if D % 4 == 0:
        return False
    return all(p % 4 == 1 for p in factorint(D) if p != 2)


def same_class(s: tuple[int, int], t: tuple[int, int], D: int, N: int) -> bool:
    """Whether two solutions of x^2 - D y^2 = N differ by a unit of norm 1."""
    (x1, y1), (x2, y2) = s, t
    M = abs(N)
    return (x1 * x2 - D * y1 * y2) % M == 0 and (x1 * y2 - x2 * y1) % M == 0


def _class_reps(cands: list[tuple[int, int]], D: int, N: int) -> list[PellSolution]:
    """Smallest member with x > 0, y > 0 of every class met among ``cands``.

    Each candidate is also composed once with the fundamental unit, which
    carries (-x, y) representatives into the positive quadrant.
    """
    u = pell_fundamental(D)
    pool = set()
    for x, y in cands:
        for sx in (x, -x):
            pool.add((sx, y))
            pool.add((sx * u.x + D * y * u.y, sx * u.y + y * u.x))
    reps: list[tuple[int, int]] = []
    for x, y in sorted(pool, key=lambda s: (s[1], s[0])):
        if x <= 0 or y <= 0:
            continue
        if not any(same_class((x, y), r, D, N) for r in reps):
            reps.append((x, y))
    return sorted((PellSolution(x, y, D, N) for x, y in reps), key=lambda s: (s.x, s.y))


def _square_divisors(N: int) -> list[int]:
    out = [1]
    for p, e in factorint(abs(N)).items():
        out = [d * p**k for d in out for k in range(e // 2 + 1)]
    return sorted(out)


def pell_like(D: int, N: int, y_bound: int | None = None) -> list[PellSolution]:
    """One representative per solution class of x^2 - D y^2 = N.

    Each class is represented by its member with x > 0 and the smallest y > 0.
    For |N| < sqrt(D) the solutions are read off the convergents (primitive
    ones directly, the rest by scaling solutions of N/f^2 by f). Otherwise a
    search over 0 <= y <= y_bound is used, with the default bound
    max(10^4, ceil(sqrt|N| (x0 + y0 sqrt D))); classes are complete only up
    to that bound.
    """
    _check_d(D)
    if N == 0:
        return []
    cf = cf_sqrt(D)
    if N * N < D and y_bound is None:
        L = len(cf.period)
        n_conv = 4 * L + 2
        conv = list(convergents(cf, n_conv))
        cands = []
        for f in _square_divisors(N):
            M = N // (f * f)
            for p, q in conv:
                if p * p - D * q * q == M:
                    cands.append((f * p, f * q))
        return _class_reps(cands, D, N)
    if y_bound is None:
        u = pell_fundamental(D)
        y_bound = max(10**4, math.ceil(math.sqrt(abs(N)) * (u.x + u.y * math.sqrt(D))))
    cands = []
    for y in range(0, y_bound + 1):
        x2 = N + D * y * y
        if x2 < 0:
            continue
        x = math.isqrt(x2)
        if x * x == x2:
            cands.append((x, y))
    return _class_reps(cands, D, N)


def brahmagupta_compose(s: PellSolution, t: PellSolution, sign: int = 1) -> PellSolution:
    """(p r + sign D q s, p s + sign q r) solves x^2 - D y^2 = N."""
    if s.D != t.D:
        raise ValueError("solutions belong to different D")
    if t.N != 1 and s.N != 1:
        raise ValueError("one of the solutions must solve the norm-1 equation")
    sg = 1 if sign >= 0 else -1
    p, q, r, u = s.x, s.y, t.x, t.y
    x, y = p * r + sg * s.D * q * u, p * u + sg * q * r
    return PellSolution(abs(x), abs(y), s.D, s.N * t.N)


# ---------------------------------------------------------------------------
# powerful numbers
# ---------------------------------------------------------------------------


def is_powerful(n: int) -> bool:
    if n < 1:
        raise ValueError("powerful numbers are positive")
    return all(e >= 2 for e in factorint(n).values())


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def _type1_up_to(limit: int) -> list[tuple[int, int]]:
    """All consecutive powerful pairs (k, k+1) with k+1 <= limit and a square member.

    The non-square member is D y^2 with D squarefree and D | y, so D^3 <= limit.
    """
    pairs = set()
    D = 2
    while D * D * D <= limit:
        if _squarefree(D):
            for sol in pell_solutions(D):
                m = D * sol.y * sol.y
                if m > limit:
                    break
                if sol.y % D == 0:
                    pairs.add((m, m + 1))
            neg = negative_pell(D)
            if neg is not None:
                x, y = neg.x, neg.y
                f = pell_fundamental(D)
                while D * y * y <= limit:
                    if y % D == 0:
                        pairs.add((x * x, x * x + 1))
                    x, y = f.x * x + D * f.y * y, f.y * x + f.x * y
        D += 1
    return sorted(p for p in pairs if p[1] <= limit)


def powerful_pairs_type1(count: int) -> list[tuple[int, int]]:
    """The first ``count`` type-1 consecutive powerful pairs, in increasing order."""
    limit = 1000
    while True:
        pairs = _type1_up_to(limit)
        if len(pairs) >= count:
            out = pairs[:count]
            assert all(is_powerful(a) and is_powerful(b) for a, b in out)
            return out
        limit *= 4

