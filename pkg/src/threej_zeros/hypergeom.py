"""Terminating 3F2(1) series and the 3F2 parameter sets attached to a 3j symbol.

Only finite sums are evaluated. Gamma functions appear solely at integer
arguments, where they are factorials or poles; a pole in a prefactor is
reported as :class:`OutOfPhysicalDomain` rather than continued analytically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DenominatorPole, InconsistentLabeling, NonTerminating, OutOfPhysicalDomain
from .exact import SqrtRational, factorial
from .threej import PERMUTATIONS, ThreeJ, _perm_parity, _prefactor_parts, racah_value, to_regge

__all__ = [
    "F32Params",
    "WhippleParams",
    "VdWForm",
    "WhippleFunction",
    "eval_3f2_terminating",
    "terms_3f2",
    "vdw_forms",
    "classic_forms",
    "bandzaitis_yutsis_integer_terms",
    "proportionally_consistent",
    "to_whipple",
    "from_whipple",
    "enumerate_fp",
    "enumerate_fn",
    "gamma_reciprocal",
    "thomae_shift",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _is_nonpos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


class F32Params(NamedTuple):
    num: tuple[Fraction, Fraction, Fraction]
    den: tuple[Fraction, Fraction]

    @classmethod
    def of(cls, num: Iterable, den: Iterable) -> "F32Params":
        n = tuple(_frac(x) for x in num)
        d = tuple(_frac(x) for x in den)
        if len(n) != 3 or len(d) != 2:
            raise ValueError("3F2 needs three numerator and two denominator parameters")
        return cls(n, d)  # type: ignore[arg-type]

    @property
    def termination_index(self) -> int | None:
        ks = [-int(x) for x in self.num if _is_nonpos_int(x)]
        return min(ks) if ks else None

    @property
    def terminating(self) -> bool:
        return self.termination_index is not None

    def has_pole(self) -> bool:
        K = self.termination_index
        if K is None:
            return False
        return any(_is_nonpos_int(d) and -d < K for d in self.den)

    def __str__(self) -> str:
        n = ", ".join(str(x) for x in self.num)
        d = ", ".join(str(x) for x in self.den)
        return f"3F2({n}; {d}; 1)"


def terms_3f2(p: F32Params) -> list[Fraction]:
    """Individual terms of a terminating 3F2(1), k = 0..K."""
    K = p.termination_index
    if K is None:
        raise NonTerminating(f"{p} has no non-positive integer numerator parameter")
    if p.has_pole():
        raise DenominatorPole(f"{p} hits a zero denominator within the sum")
    (A, B, C), (D, E) = p
    term = Fraction(1)
    out = [term]
    for k in range(K):
        term = term * (A + k) * (B + k) * (C + k) / ((D + k) * (E + k) * (k + 1))
        out.append(term)
    return out


def eval_3f2_terminating(p: F32Params) -> Fraction:
    return sum(terms_3f2(p), Fraction(0))


def gamma_reciprocal(x: Fraction) -> Fraction:
    """1/Gamma(x) for a positive integer x."""
    x = _frac(x)
    if x.denominator != 1:
        raise ValueError("only integer Gamma arguments occur here")
    if x <= 0:
        raise OutOfPhysicalDomain(f"Gamma({x}) is a pole")
    return Fraction(1, factorial(int(x) - 1))


# ---------------------------------------------------------------------------
# van der Waerden forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VdWForm:
    """One of the six 3F2 expressions; ``assemble`` gives the 3j value."""

    perm: tuple[int, int, int]  # 1-based (p, q, r)
    params: F32Params
    sigma: int
    regge: tuple[int, ...]

    @property
    def gamma_args(self) -> tuple[Fraction, ...]:
        (A, B, C), (D, E) = self.params
        return (1 - A, 1 - B, 1 - C, D, E)

    def assemble(self) -> SqrtRational:
        g = Fraction(1)
        for x in self.gamma_args:
            g *= gamma_reciprocal(x)
        series = eval_3f2_terminating(self.params)
        num, den = _prefactor_parts(self.regge)
        root = SqrtRational(1 if (series * g) else 0, Fraction(num, den))
        return root * ((-1) ** (self.sigma % 2) * g * series)


def vdw_forms(s: ThreeJ) -> list[VdWForm]:
    R = to_regge(s).entries
    J = R[0] + R[1] + R[2]

    def at(i: int, k: int) -> int:
        return R[3 * (i - 1) + k]

    out = []
    for p, q, r in PERMUTATIONS:
        sigma = at(3, p) - at(2, q) + (J if _perm_parity((p, q, r)) else 0)
        params = F32Params.of(
            (-at(2, p), -at(3, q), -at(1, r)),
            (1 + at(3, r) - at(2, p), 1 + at(2, r) - at(3, q)),
        )
        out.append(VdWForm((p + 1, q + 1, r + 1), params, sigma, R))
    return out


# ---------------------------------------------------------------------------
# Wigner, Racah, Majumdar and Bandzaitis-Yutsis parameter sets
# ---------------------------------------------------------------------------


def thomae_shift(p: F32Params, which: int = 0) -> tuple[Fraction, F32Params]:
    """Terminating transformation

    3F2(-n, a, b; d, e) = (d-a)_n (e-a)_n / ((d)_n (e)_n)
                          * 3F2(-n, a, a+b-n-d-e+1; a-n-d+1, a-n-e+1)

    with ``num[which]`` playing ``-n``; ``a`` and ``b`` are the other two
    numerators in order. Returns (ratio, new parameters).
    """
    num = list(p.num)
    neg_n = num.pop(which)
    if not _is_nonpos_int(neg_n):
        raise NonTerminating("the chosen numerator must be a non-positive integer")
    n = -int(neg_n)
    a, b = num
    d, e = p.den

    def poch(x: Fraction, k: int) -> Fraction:
        out = Fraction(1)
        for i in range(k):
            out *= x + i
        return out

    denom = poch(d, n) * poch(e, n)
    if denom == 0:
        raise DenominatorPole("transformation ratio has a zero denominator")
    ratio = poch(d - a, n) * poch(e - a, n) / denom
    new = F32Params.of((neg_n, a, a + b - n - d - e + 1), (a - n - d + 1, a - n - e + 1))
    return ratio, new


def classic_forms(s: ThreeJ) -> dict[str, F32Params]:
    """Parameter sets of the Wigner, Racah, Majumdar and Bandzaitis-Yutsis forms.

    None carries a prefactor; each is proportional to the 3j value. The
    Bandzaitis-Yutsis set is ``(-n, -z, -J-1; -z-x, -z-t)`` with
    ``n = R11, z = R22, x = R23, t = R32``.
    """
    R = to_regge(s).entries
    a, b, c = (x.to_fraction() for x in (s.a, s.b, s.c))
    al, be, ga = (x.to_fraction() for x in (s.alpha, s.beta, s.gamma))
    J = R[0] + R[1] + R[2]
    n, z, x, t = R[0], R[4], R[5], R[7]
    return {
        "wigner": F32Params.of((a - al + 1, -c - ga, a - b - c), (-b - c - al, a - b - ga + 1)),
        "racah": F32Params.of((a + al + 1, -c + ga, -a + al), (-b - c + al, b - c + al + 1)),
        "majumdar": F32Params.of((a + b - c + 1, -c - ga, a - b - c), (-2 * c, a - c - be + 1)),
        "bandzaitis_yutsis": F32Params.of((-n, -z, -J - 1), (-z - x, -z - t)),
    }


def bandzaitis_yutsis_integer_terms(s: ThreeJ) -> list[int]:
    """The Bandzaitis-Yutsis series times (z+x)! (z+t)! / z!, term by term.

    Term k is (-1)^k C(n,k) (J+1)!/(J+1-k)! (z+x-k)! (z+t-k)! / (z-k)!, so
    every term after the first carries the factor J + 1 while the first,
    (z+x)! (z+t)! / z!, only has prime factors up to J.
    """
    R = to_regge(s).entries
    J = R[0] + R[1] + R[2]
    n, z, x, t = R[0], R[4], R[5], R[7]
    out = []
    for k in range(min(n, z) + 1):
        term = math.comb(n, k) * (factorial(J + 1) // factorial(J + 1 - k))
        term *= factorial(z + x - k) * factorial(z + t - k) // factorial(z - k)
        out.append(-term if k % 2 else term)
    return out


def proportionally_consistent(form_value: Fraction, threej_value: SqrtRational) -> bool:
    """A value-up-to-constant form agrees with the 3j value iff both vanish or neither does."""
    return (form_value == 0) == threej_value.is_zero()


# ---------------------------------------------------------------------------
# Whipple parameters
# ---------------------------------------------------------------------------


class WhippleParams(NamedTuple):
    r: tuple[Fraction, ...]

    @classmethod
    def of(cls, r: Iterable) -> "WhippleParams":
        vals = tuple(_frac(x) for x in r)
        if len(vals) != 6:
            raise ValueError("Whipple parameters come in sixes")
        if sum(vals) != 0:
            raise ValueError("Whipple parameters must sum to zero")
        return cls(vals)

    def alpha(self, l: int, m: int, n: int) -> Fraction:
        return Fraction(1, 2) + self.r[l] + self.r[m] + self.r[n]

    def beta(self, m: int, n: int) -> Fraction:
        return 1 + self.r[m] - self.r[n]

    def negated(self) -> "WhippleParams":
        return WhippleParams(tuple(-x for x in self.r))


def _labeling(labeling: Sequence[int]) -> tuple[int, int, int, tuple[int, int, int]]:
    if len(labeling) != 3:
        raise InconsistentLabeling("labeling is (l, m, n)")
    l, m, n = (int(x) for x in labeling)
    if len({l, m, n}) != 3 or not all(0 <= x <= 5 for x in (l, m, n)):
        raise InconsistentLabeling(f"labels must be distinct members of 0..5, got {labeling}")
    rest = tuple(i for i in range(6) if i not in (l, m, n))
    return l, m, n, rest  # type: ignore[return-value]


def from_whipple(w: WhippleParams, labeling: Sequence[int]) -> F32Params:
    """The 3F2 parameters of F_p(l; mn)."""
    l, m, n, (i, j, k) = _labeling(labeling)
    return F32Params.of(
        (w.alpha(i, m, n), w.alpha(j, m, n), w.alpha(k, m, n)),
        (w.beta(m, l), w.beta(n, l)),
    )


def to_whipple(p: F32Params, labeling: Sequence[int]) -> WhippleParams:
    """Solve for r with sum(r) = 0 so that ``from_whipple(r, labeling) == p``.

    The numerators are matched to the unused suffixes in increasing order.
    The 6x6 system is always non-singular, so the only failure is a bad labeling.
    """
    l, m, n, (i, j, k) = _labeling(labeling)
    (A1, A2, A3), (D1, D2) = p
    half = Fraction(1, 2)
    S = (2 * (A1 + A2 + A3) - D1 - D2 - 1) / 3  # r_m + r_n
    rl = 2 * S - (A1 + A2 + A3) + 3 * half
    r = [Fraction(0)] * 6
    r[l] = rl
    r[m] = D1 - 1 + rl
    r[n] = D2 - 1 + rl
    for idx, A in zip((i, j, k), (A1, A2, A3)):
        r[idx] = A - half - S
    w = WhippleParams.of(r)
    if from_whipple(w, labeling) != p:
        raise InconsistentLabeling("linear solve failed to reproduce the parameters")
    return w


@dataclass(frozen=True)
class WhippleFunction:
    labeling: tuple[int, int, int]
    params: F32Params
    gamma_args: tuple[Fraction, Fraction, Fraction]


def _all_labelings() -> list[tuple[int, int, int]]:
    out = []
    for l in range(6):
        others = [x for x in range(6) if x != l]
        for m, n in itertools.combinations(others, 2):
            out.append((l, m, n))
    return out


LABELINGS: tuple[tuple[int, int, int], ...] = tuple(_all_labelings())


def enumerate_fp(w: WhippleParams) -> list[WhippleFunction]:
    """The sixty F_p(l; mn): 3F2 parameters plus the Gamma arguments
    ``(alpha_ijk, beta_ml, beta_nl)`` whose reciprocal normalizes it."""
    out = []
    for l, m, n in LABELINGS:
        i, j, k = (x for x in range(6) if x not in (l, m, n))
        out.append(
            WhippleFunction(
                (l, m, n),
                from_whipple(w, (l, m, n)),
                (w.alpha(i, j, k), w.beta(m, l), w.beta(n, l)),
            )
        )
    return out


def enumerate_fn(w: WhippleParams) -> list[WhippleFunction]:
    """The sixty F_n functions: the F_p family with every r_i negated."""
    return enumerate_fp(w.negated())
