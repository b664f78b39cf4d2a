"""Hydrogenic radial expectation values <r^k> as terminating 3F2(1) series (atomic units)."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import OutOfDomain
from .exact import SqrtRational, factorial
from .hypergeom import F32Params, eval_3f2_terminating, thomae_shift

__all__ = [
    "HydrogenicState",
    "r_k_expectation",
    "r_k_params",
    "shared_3f2",
    "shared_3f2_params",
    "r_k_via_shared",
    "f_factor",
]


class HydrogenicState(NamedTuple):
    n: int
    l: int

    def validate(self) -> None:
        if self.n < 1 or not 0 <= self.l <= self.n - 1:
            raise OutOfDomain(f"need n >= 1 and 0 <= l <= n-1, got n={self.n}, l={self.l}")


def _check_k(k: int, allow_negative: bool) -> None:
    lo = -2 if allow_negative else 0
    if k < lo:
        raise OutOfDomain(f"k = {k} is below the supported range (k >= {lo})")


def r_k_params(st: HydrogenicState, k: int) -> F32Params:
    n, l = st
    return F32Params.of((-k - 1, -k - 1, l + 1 - n), (1, -n - l - k - 1))


def _prefactor(st: HydrogenicState, k: int) -> Fraction:
    n, l = st
    # n^(k-1) / 2^(k+1) * (n+l+k+1)! / (n+l)!
    p = Fraction(n) ** (k - 1) / Fraction(2) ** (k + 1)
    return p * Fraction(factorial(n + l + k + 1), factorial(n + l))


def r_k_expectation(st: HydrogenicState, k: int, allow_negative: bool = False) -> Fraction:
    """<n l| r^k |n l>.

    ``allow_negative`` admits k = -1 and k = -2, where the series still
    terminates through l + 1 - n.
    """
    st = HydrogenicState(*st)
    st.validate()
    _check_k(k, allow_negative)
    return _prefactor(st, k) * eval_3f2_terminating(r_k_params(st, k))


def shared_3f2_params(n: int, l: int, lp: int, k: int) -> F32Params:
    return F32Params.of((l + lp - k, l - lp - k - 1, -k - 1), (n + l - k, -2 * k - 2))


def shared_3f2(n: int, l: int, lp: int, k: int) -> Fraction:
    """3F2(l+l'-k, l-l'-k-1, -k-1; n+l-k, -2k-2; 1)."""
    if k < 0:
        raise OutOfDomain("the shared series needs k >= 0")
    return eval_3f2_terminating(shared_3f2_params(n, l, lp, k))


def r_k_via_shared(st: HydrogenicState, k: int) -> Fraction:
    """<r^k> from the l' = l shared series.

    The two series are related by the terminating Thomae transformation with
    -k-1 as the terminating parameter and -k-1 as the pivot.
    """
    st = HydrogenicState(*st)
    st.validate()
    _check_k(k, False)
    n, l = st
    ratio, new = thomae_shift(r_k_params(st, k), which=0)
    assert sorted(new.num) == sorted(shared_3f2_params(n, l, l, k).num)
    assert sorted(new.den) == sorted(shared_3f2_params(n, l, l, k).den)
    return _prefactor(st, k) * ratio * shared_3f2(n, l, l, k)


def f_factor(l: int, lp: int, k: int) -> SqrtRational:
    delta = l - lp
    if delta < 0:
        raise OutOfDomain("f_factor needs l >= l'")
    args = (k + 1 - delta, k + 1 + delta, l + lp + k + 2, k + 1, l + lp - k - 1)
    if min(args) < 0:
        raise OutOfDomain(f"negative factorial argument in f_factor({l}, {lp}, {k})")
    num = factorial(args[0]) * factorial(args[1]) * factorial(args[2])
    den = factorial(args[3]) ** 2 * factorial(args[4])
    return SqrtRational.sqrt_of(Fraction(num, den))
