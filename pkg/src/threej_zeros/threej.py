"""Exact Wigner 3j symbols, Regge squares and their 72 symmetries.

All angular momenta are carried as doubled integers; a physical symbol maps to
a 3x3 magic square of non-negative integers and every evaluation goes through
that square.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError, NotOrderZeroShape, NotPhysical, OutOfRange
from .exact import HalfInt, SqrtRational, factorial, factorial_ratio

__all__ = [
    "ThreeJ",
    "regge_value",
    "iter_regge_squares",
    "ReggeSquare",
    "SelectionReport",
    "SymmetryElement",
    "SYMMETRIES",
    "selection_check",
    "racah_value",
    "to_regge",
    "from_regge",
    "symmetry_orbit",
    "canonical_form",
    "degree",
    "series_representation",
    "order0_value",
    "recurrence_identities",
    "raynal_order",
    "order1_zero_families",
    "bryant_jahn_certificate",
    "trivial_zero_reason",
    "PERMUTATIONS",
]


class ThreeJ(NamedTuple):
    """A 3j symbol ``(a b c; alpha beta gamma)`` stored as doubled integers."""

    two_a: int
    two_b: int
    two_c: int
    two_alpha: int
    two_beta: int
    two_gamma: int

    @classmethod
    def of(cls, a, b, c, alpha, beta, gamma) -> "ThreeJ":
        """Build from ints, Fractions, HalfInts or strings such as ``"7/2"``."""
        return cls(*(HalfInt.of(v).twice for v in (a, b, c, alpha, beta, gamma)))

    @property
    def a(self) -> HalfInt:
        return HalfInt(self.two_a)

    @property
    def b(self) -> HalfInt:
        return HalfInt(self.two_b)

    @property
    def c(self) -> HalfInt:
        return HalfInt(self.two_c)

    @property
    def alpha(self) -> HalfInt:
        return HalfInt(self.two_alpha)

    @property
    def beta(self) -> HalfInt:
        return HalfInt(self.two_beta)

    @property
    def gamma(self) -> HalfInt:
        return HalfInt(self.two_gamma)

    @property
    def two_J(self) -> int:
        return self.two_a + self.two_b + self.two_c

    @property
    def J(self) -> int:
        if self.two_J % 2:
            raise ValueError(f"a+b+c is not an integer for {self}")
        return self.two_J // 2

    def shifted(self, d_alpha: int, d_beta: int, d_gamma: int) -> "ThreeJ":
        """Projections moved by whole units."""
        return self._replace(
            two_alpha=self.two_alpha + 2 * d_alpha,
            two_beta=self.two_beta + 2 * d_beta,
            two_gamma=self.two_gamma + 2 * d_gamma,
        )

    def __str__(self) -> str:
        top = " ".join(str(HalfInt(v)) for v in self[:3])
        bottom = " ".join(str(HalfInt(v)) for v in self[3:])
        return f"({top}; {bottom})"


@dataclass(frozen=True, slots=True)
class ReggeSquare:
    """3x3 non-negative integer magic square, stored row-major."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(int(x) for x in self.entries)
        if len(e) != 9:
            raise NotPhysical("a Regge square has nine entries")
        if min(e) < 0:
            raise NotPhysical(f"negative Regge entry in {e}")
        J = e[0] + e[1] + e[2]
        lines = (
            e[3] + e[4] + e[5],
            e[6] + e[7] + e[8],
            e[0] + e[3] + e[6],
            e[1] + e[4] + e[7],
            e[2] + e[5] + e[8],
        )
        if any(s != J for s in lines):
            raise NotPhysical(f"rows and columns of {e} do not share one sum")
        object.__setattr__(self, "entries", e)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ReggeSquare":
        return cls(tuple(x for row in rows for x in row))

    @property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        e = self.entries
        return (e[0:3], e[3:6], e[6:9])

    @property
    def columns(self) -> tuple[tuple[int, int, int], ...]:
        e = self.entries
        return ((e[0], e[3], e[6]), (e[1], e[4], e[7]), (e[2], e[5], e[8]))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[3 * i + j]

    @property
    def J(self) -> int:
        return self.entries[0] + self.entries[1] + self.entries[2]

    def transpose(self) -> "ReggeSquare":
        e = self.entries
        return ReggeSquare((e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]))

    def __str__(self) -> str:
        return " / ".join(" ".join(str(x) for x in row) for row in self.rows)


class SelectionReport(NamedTuple):
    projections_sum_zero: bool
    triangle_ok: bool
    projections_in_range: bool
    parity_ok: bool

    @property
    def all_ok(self) -> bool:
        return all(self)


# ---------------------------------------------------------------------------
# Symmetry group of the Regge square
# ---------------------------------------------------------------------------


def _perm_parity(p: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2


PERMUTATIONS: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True, slots=True)
class SymmetryElement:
    """Square ``r -> P_rows (r or r^T) P_cols``; value picks up ``(-1)**(J*phase_exponent)``."""

    row_perm: tuple[int, int, int]
    col_perm: tuple[int, int, int]
    transpose: bool
    phase_exponent: int

    @property
    def position_map(self) -> tuple[int, ...]:
        """``new.entries[k] == old.entries[position_map[k]]``."""
        out = []
        for i in range(3):
            for j in range(3):
                si, sj = self.row_perm[i], self.col_perm[j]
                out.append(3 * sj + si if self.transpose else 3 * si + sj)
        return tuple(out)

    def apply(self, r: ReggeSquare) -> ReggeSquare:
        e = r.entries
        return ReggeSquare(tuple(e[k] for k in self.position_map))

    def phase(self, J: int) -> int:
        return -1 if (self.phase_exponent and J % 2) else 1


def _build_symmetries() -> tuple[SymmetryElement, ...]:
    out = []
    for transpose in (False, True):
        for rp in PERMUTATIONS:
            for cp in PERMUTATIONS:
                out.append(SymmetryElement(rp, cp, transpose, _perm_parity(rp) ^ _perm_parity(cp)))
    return tuple(out)


#: The 72 symmetries, identity first.
SYMMETRIES: tuple[SymmetryElement, ...] = _build_symmetries()
_POSITION_MAPS = tuple((s.position_map, s.phase_exponent) for s in SYMMETRIES)


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


def _regge_entries(s: ThreeJ) -> tuple[int, ...] | None:
    """Nine Regge entries of a physical symbol, or None."""
    ta, tb, tc, tal, tbe, tga = s
    if tal + tbe + tga != 0:
        return None
    doubled = (
        -ta + tb + tc, ta - tb + tc, ta + tb - tc,
        ta - tal, tb - tbe, tc - tga,
        ta + tal, tb + tbe, tc + tga,
    )
    out = []
    for d in doubled:
        if d < 0 or d % 2:
            return None
        out.append(d // 2)
    return tuple(out)


def to_regge(s: ThreeJ) -> ReggeSquare:
    e = _regge_entries(s)
    if e is None:
        raise NotPhysical(f"{s} has no Regge square")
    return ReggeSquare(e)


def from_regge(r: ReggeSquare) -> ThreeJ:
    e = r.entries
    return ThreeJ(
        e[1] + e[2], e[0] + e[2], e[0] + e[1],
        e[6] - e[3], e[7] - e[4], e[8] - e[5],
    )


def selection_check(s: ThreeJ) -> SelectionReport:
    ta, tb, tc, tal, tbe, tga = s
    sum_zero = tal + tbe + tga == 0
    triangle = (
        min(ta, tb, tc) >= 0
        and (ta + tb + tc) % 2 == 0
        and tc <= ta + tb and ta <= tb + tc and tb <= ta + tc
    )
    in_range = all(
        abs(m) <= j and (j - m) % 2 == 0 for j, m in ((ta, tal), (tb, tbe), (tc, tga))
    )
    parity = not (tal == tbe == tga == 0 and (ta + tb + tc) % 4 == 2)
    return SelectionReport(sum_zero, triangle, in_range, parity)


# ---------------------------------------------------------------------------
# Racah-type single sums
# ---------------------------------------------------------------------------


def _hahn_sum(eta1: int, eta2: int, xi1: int, xi2: int, xi3: int) -> tuple[int, int, int]:
    """``sum_t (-1)**t / [t! (t-eta1)! (t-eta2)! (xi1-t)! (xi2-t)! (xi3-t)!]``
    as an unreduced fraction ``N/M``; also returns the number of terms."""
    tmin = max(0, eta1, eta2)
    tmax = min(xi1, xi2, xi3)
    n_terms = tmax - tmin + 1
    if n_terms <= 0:
        return 0, 1, 0
    # Horner over consecutive term ratios, innermost first
    p = q = 1
    for t in range(tmax - 1, tmin - 1, -1):
        num = (xi1 - t) * (xi2 - t) * (xi3 - t)
        den = (t + 1) * (t + 1 - eta1) * (t + 1 - eta2)
        p, q = den * q - num * p, den * q
    d0 = (
        factorial(tmin) * factorial(tmin - eta1) * factorial(tmin - eta2)
        * factorial(xi1 - tmin) * factorial(xi2 - tmin) * factorial(xi3 - tmin)
    )
    if tmin % 2:
        p = -p
    return p, q * d0, n_terms


def _prefactor_parts(e: Sequence[int]) -> tuple[int, int]:
    """``prod R_ik!`` and ``(J+1)!``."""
    num = 1
    for x in e:
        num *= factorial(x)
    return num, factorial(e[0] + e[1] + e[2] + 1)


def _assemble(sign_exp: int, pref: tuple[int, int], N: int, M: int) -> SqrtRational:
    if N == 0:
        return SqrtRational.zero()
    sign = (1 if N > 0 else -1) * (-1 if sign_exp % 2 else 1)
    return SqrtRational(sign, Fraction(pref[0] * N * N, pref[1] * M * M))


def racah_terms(s: ThreeJ) -> tuple[int, int, list[Fraction]]:
    """Index range and the exact terms ``(-1)**t / D_t`` of the Racah sum."""
    e = _regge_entries(s)
    if e is None:
        raise NotPhysical(f"{s} has no Regge square")
    eta1, eta2 = e[3] - e[8], e[7] - e[5]
    xi = (e[3], e[7], e[2])
    tmin, tmax = max(0, eta1, eta2), min(xi)
    terms = []
    for t in range(tmin, tmax + 1):
        d = factorial(t) * factorial(t - eta1) * factorial(t - eta2)
        for x in xi:
            d *= factorial(x - t)
        terms.append(Fraction((-1) ** t, d))
    return tmin, tmax, terms


def _racah_from_entries(e: Sequence[int]) -> SqrtRational:
    # eta1 = (a-alpha)-(c+gamma), eta2 = (b+beta)-(c-gamma); xi = a-alpha, b+beta, a+b-c
    N, M, _ = _hahn_sum(e[3] - e[8], e[7] - e[5], e[3], e[7], e[2])
    return _assemble(e[6] - e[4], _prefactor_parts(e), N, M)


def racah_value(s: ThreeJ) -> SqrtRational:
    """Exact 3j value; non-physical symbols give 0."""
    e = _regge_entries(s)
    if e is None:
        return SqrtRational.zero()
    return _racah_from_entries(e)


def regge_value(r: ReggeSquare) -> SqrtRational:
    return _racah_from_entries(r.entries)


def _parse_perm(pqr: Sequence[int]) -> tuple[int, int, int]:
    perm = tuple(int(x) for x in pqr)
    if sorted(perm) == [1, 2, 3]:
        return tuple(x - 1 for x in perm)  # type: ignore[return-value]
    raise ValueError(f"(p, q, r) must be a permutation of (1, 2, 3), got {pqr}")


def series_representation(s: ThreeJ, pqr: Sequence[int]) -> SqrtRational:
    """One of the six single-sum forms, indexed by a permutation (p, q, r) of (1, 2, 3)."""
    p, q, r = _parse_perm(pqr)
    R = to_regge(s).entries
    J = R[0] + R[1] + R[2]

    def at(i: int, k: int) -> int:  # 1-based row, 0-based column
        return R[3 * (i - 1) + k]

    sigma = at(3, p) - at(2, q)
    if _perm_parity((p, q, r)):
        sigma += J
    # the s-dependent factors (s+R3r-R2p)! and (s+R2r-R3q)! play the role of (t-eta)!
    N, M, _ = _hahn_sum(
        at(2, p) - at(3, r), at(3, q) - at(2, r), at(2, p), at(3, q), at(1, r)
    )
    return _assemble(sigma, _prefactor_parts(R), N, M)


# ---------------------------------------------------------------------------
# Orbits, canonical forms, degree
# ---------------------------------------------------------------------------


def iter_regge_squares(J: int) -> Iterator[tuple[int, ...]]:
    """Every 3x3 non-negative integer magic square with line sum J, as entry tuples.

    Free entries are R11, R12, R21, R22; the order is lexicographic in them.
    """
    for r11 in range(J + 1):
        for r12 in range(J - r11 + 1):
            r13 = J - r11 - r12
            for r21 in range(J - r11 + 1):
                r31 = J - r11 - r21
                lo = max(0, J - r11 - r12 - r21)  # keeps R33 >= 0
                for r22 in range(lo, min(J - r21, J - r12) + 1):
                    yield (r11, r12, r13, r21, r22, J - r21 - r22, r31, J - r12 - r22, r11 + r12 + r21 + r22 - J)


def symmetry_orbit(r: ReggeSquare) -> list[tuple[ReggeSquare, int]]:
    """All 72 images ``(square, phase)``; repeated squares are kept."""
    J = r.J
    odd = J % 2
    e = r.entries
    return [
        (ReggeSquare(tuple(e[k] for k in pos)), -1 if (ph and odd) else 1)
        for pos, ph in _POSITION_MAPS
    ]


def canonical_entries(e: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Row-major minimum over the orbit and the phase of the first element reaching it."""
    best = None
    best_ph = 0
    for pos, ph in _POSITION_MAPS:
        img = tuple(e[k] for k in pos)
        if best is None or img < best:
            best, best_ph = img, ph
    odd = (e[0] + e[1] + e[2]) % 2
    return best, -1 if (best_ph and odd) else 1  # type: ignore[return-value]


def canonical_form(r: ReggeSquare) -> tuple[ReggeSquare, int]:
    best, phase = canonical_entries(r.entries)
    return ReggeSquare(best), phase


def degree(r: ReggeSquare) -> int:
    return min(r.entries)


def fixed_by_odd_symmetry(e: Sequence[int]) -> bool:
    """True when J is odd and some phase -1 symmetry maps the square to itself."""
    if (e[0] + e[1] + e[2]) % 2 == 0:
        return False
    e = tuple(e)
    for pos, ph in _POSITION_MAPS:
        if ph and all(e[k] == e[i] for i, k in enumerate(pos)):
            return True
    return False


def trivial_zero_reason(s: ThreeJ) -> str | None:
    """Why the symbol is forced to vanish, if it is.

    Reasons: ``projection-sum``, ``triangle``, ``projection-range``, ``odd-J-symmetry``.
    """
    rep = selection_check(s)
    if not rep.projections_sum_zero:
        return "projection-sum"
    if not rep.triangle_ok:
        return "triangle"
    if not rep.projections_in_range:
        return "projection-range"
    e = _regge_entries(s)
    assert e is not None
    if fixed_by_odd_symmetry(e):
        return "odd-J-symmetry"
    return None


# ---------------------------------------------------------------------------
# Raynal order
# ---------------------------------------------------------------------------


def _order_from_pair(u: Sequence[int], v: Sequence[int], J: int) -> int:
    doubled = [y - x for x, y in zip(u, v)]
    top = max(abs(d) for d in doubled)
    if all(d % 2 == 0 for d in doubled):
        return top // 2 if J % 2 == 0 else top // 2 - 1
    return top // 2


def raynal_order(s: ThreeJ) -> int:
    """Order of a symbol; -1 for trivial zeros.

    The two rows or columns with the smallest L1 distance become the projection
    rows. Ties are resolved by taking the smallest resulting order.
    """
    if trivial_zero_reason(s) is not None:
        return -1
    r = to_regge(s)
    J = r.J
    lines = [r.rows, r.columns]
    candidates = []
    for group in lines:
        for i, j in ((0, 1), (0, 2), (1, 2)):
            dist = sum(abs(x - y) for x, y in zip(group[i], group[j]))
            candidates.append((dist, group[i], group[j]))
    best = min(c[0] for c in candidates)
    return min(_order_from_pair(u, v, J) for d, u, v in candidates if d == best)


# ---------------------------------------------------------------------------
# Order-0 closed forms
# ---------------------------------------------------------------------------


def _sqrt_factorials(numer: Sequence[int], denom: Sequence[int], extra_den: int = 1) -> SqrtRational:
    root = factorial_ratio(numer, denom).sqrt()
    return root / SqrtRational.sqrt_of(extra_den) if extra_den != 1 else root


def order0_value(s: ThreeJ) -> SqrtRational:
    """Closed forms for the four never-vanishing projection patterns."""
    rep = selection_check(s)
    if not (rep.projections_sum_zero and rep.triangle_ok and rep.projections_in_range):
        raise NotOrderZeroShape(f"{s} is not a physical symbol")
    ta, tb, tc = s.two_a, s.two_b, s.two_c
    tJ = ta + tb + tc
    J2 = tJ // 2  # J
    m = (s.two_alpha, s.two_beta, s.two_gamma)
    # (J - 2a)! etc.
    tri = [J2 - ta, J2 - tb, J2 - tc]
    if m == (0, 0, 0) and J2 % 2 == 0:
        h = J2 // 2
        root = _sqrt_factorials(tri, [J2 + 1])
        coef = Fraction(factorial(h), factorial(h - ta // 2) * factorial(h - tb // 2) * factorial(h - tc // 2))
        sign = -1 if (h % 2) else 1
        return root * (sign * coef)
    if m == (-1, 0, 1) and ta % 2 and tc % 2:
        if J2 % 2 == 0:
            h = J2 // 2
            root = _sqrt_factorials(tri, [J2 + 1], (ta + 1) * (tc + 1))
            coef = Fraction(
                2 * factorial(h),
                factorial((J2 - ta - 1) // 2) * factorial(h - tb // 2) * factorial((J2 - tc - 1) // 2),
            )
            sign = -1 if ((h + 1) % 2) else 1
        else:
            h = (J2 + 1) // 2
            root = _sqrt_factorials(tri, [J2 + 1], (ta + 1) * (tc + 1))
            coef = Fraction(
                2 * factorial(h),
                factorial((J2 - ta) // 2) * factorial((J2 - tb - 1) // 2) * factorial((J2 - tc) // 2),
            )
            sign = -1 if (((J2 + 3) // 2) % 2) else 1
        return root * (sign * coef)
    if m == (0, 2, -2) and J2 % 2 == 1 and ta % 2 == 0:
        b, c = tb // 2, tc // 2
        h = (J2 + 1) // 2
        root = _sqrt_factorials(tri, [J2 + 1], b * (b + 1) * c * (c + 1))
        coef = Fraction(
            2 * factorial(h),
            factorial((J2 - 1 - ta) // 2) * factorial((J2 - 1 - tb) // 2) * factorial((J2 - 1 - tc) // 2),
        )
        sign = -1 if (h % 2) else 1
        return root * (sign * coef)
    raise NotOrderZeroShape(f"{s} matches none of the order-0 patterns")


# ---------------------------------------------------------------------------
# Contiguous recurrences
# ---------------------------------------------------------------------------


def _bar(x: Fraction) -> Fraction:
    return x * (x + 1)


def _S(a, b, c, al, be, ga) -> Fraction:
    return (_bar(a) + _bar(b) - _bar(c)) / 2 + al * be + (al - be) / 3


def _T(a, b, al, be) -> SqrtRational:
    return SqrtRational.sqrt_of((a + al) * (a - al + 1) * (b - be) * (b + be + 1))


def recurrence_terms(s: ThreeJ) -> list[SqrtRational]:
    """The six expressions of the contiguous-recurrence chain."""
    for d in ((-1, 1, 0), (1, -1, 0), (0, -1, 1), (0, 1, -1), (1, 0, -1), (-1, 0, 1)):
        n = s.shifted(*d)
        if not selection_check(n).projections_in_range:
            raise OutOfRange(f"contiguous symbol {n} leaves the physical range")
    a, b, c = (x.to_fraction() for x in (s.a, s.b, s.c))
    al, be, ga = (x.to_fraction() for x in (s.alpha, s.beta, s.gamma))
    X = racah_value(s)
    V = lambda da, db, dg: racah_value(s.shifted(da, db, dg))  # noqa: E731
    return [
        X * (-_S(a, b, c, al, be, ga)) - _T(a, b, al, be) * V(-1, 1, 0),
        X * _S(a, b, c, -al, -be, ga) + _T(a, b, -al, -be) * V(1, -1, 0),
        X * (-_S(b, c, a, be, ga, al)) - _T(b, c, be, ga) * V(0, -1, 1),
        X * _S(b, c, a, -be, -ga, al) + _T(b, c, -be, -ga) * V(0, 1, -1),
        X * (-_S(c, a, b, ga, al, be)) - _T(c, a, ga, al) * V(1, 0, -1),
        X * _S(c, a, b, -ga, -al, be) + _T(c, a, -ga, -al) * V(-1, 0, 1),
    ]


def recurrence_identities(s: ThreeJ) -> bool:
    terms = recurrence_terms(s)
    return all(t == terms[0] for t in terms[1:])


# ---------------------------------------------------------------------------
# Order-1 zeros and the Bryant-Jahn criterion
# ---------------------------------------------------------------------------

# (doubled projections, required J parity or None, vanishing prefactor numerator)
_ORDER1_RELATIONS = (
    ((0, -2, 2), 0, lambda a, b, c: _bar(a) - _bar(b) - _bar(c)),
    ((0, 4, -4), 1, lambda a, b, c: _bar(a) - _bar(b) - _bar(c) + 2),
    ((2, 2, -4), 1, lambda a, b, c: (b - a) * (a + b + 1)),
    ((0, 3, -3), 0, lambda a, b, c: _bar(a) - _bar(b) - _bar(c) - (b + Fraction(1, 2)) * (c + Fraction(1, 2)) + Fraction(1, 2)),
    ((0, 3, -3), 1, lambda a, b, c: _bar(a) - _bar(b) - _bar(c) + (b + Fraction(1, 2)) * (c + Fraction(1, 2)) + Fraction(1, 2)),
    ((1, 2, -3), 0, lambda a, b, c: (a + Fraction(1, 2)) * (a + c + 1) - _bar(b)),
    ((1, 2, -3), 1, lambda a, b, c: (a + Fraction(1, 2)) * (a - c) - _bar(b)),
    ((1, -2, 1), 0, lambda a, b, c: (c + Fraction(1, 2)) + (a + Fraction(1, 2))),
    ((1, -2, 1), 1, lambda a, b, c: (c + Fraction(1, 2)) - (a + Fraction(1, 2))),
)


def order1_zero_families(J_max: int) -> list[ThreeJ]:
    """Polynomial zeros with J <= J_max produced by the order-1 relations.

    A symbol qualifies when the rational prefactor of its relation vanishes;
    those forced to zero by an odd-J symmetry are left out.
    """
    if J_max < 0:
        raise ValueError("J_max must be non-negative")
    found: set[ThreeJ] = set()
    for tJ in range(0, 2 * J_max + 1, 2):
        J = tJ // 2
        for ta in range(tJ + 1):
            for tb in range(tJ - ta + 1):
                tc = tJ - ta - tb
                a, b, c = Fraction(ta, 2), Fraction(tb, 2), Fraction(tc, 2)
                for m, parity, numer in _ORDER1_RELATIONS:
                    if J % 2 != parity:
                        continue
                    s = ThreeJ(ta, tb, tc, *m)
                    if _regge_entries(s) is None or numer(a, b, c) != 0:
                        continue
                    if trivial_zero_reason(s) is not None:
                        continue
                    if not racah_value(s).is_zero():
                        raise ArithmeticError(f"order-1 relation predicts a zero at {s}")
                    found.add(s)
    return sorted(found, key=lambda s: (s.two_J, tuple(s)))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def bryant_jahn_certificate(a, b, c) -> bool:
    """True when J + 1 is prime, which rules out polynomial zeros for (a, b, c)."""
    ta, tb, tc = (HalfInt.of(x).twice for x in (a, b, c))
    if (ta + tb + tc) % 2 or tc > ta + tb or ta > tb + tc or tb > ta + tc:
        raise DomainError("(a, b, c) must satisfy the triangle rule with integer J")
    return _is_prime((ta + tb + tc) // 2 + 1)
