"""Exact arithmetic substrate: half-integers, factorials, and signed square roots
of rationals.

Every 3j value lives in the set ``{sign * sqrt(q) : q rational >= 0}``, so the
whole package works with :class:`SqrtRational` and never touches floating point
until a value is printed.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

__all__ = [
    "HalfInt",
    "FactoredFactorial",
    "SqrtRational",
    "IncommensurableRadicands",
    "factorial",
    "factorial_factored",
    "primes_up_to",
    "sqrt_mul",
    "sqrt_add",
]

Rational = Union[int, Fraction]


class IncommensurableRadicands(ArithmeticError):
    """Raised when adding square roots whose ratio is irrational."""


# ---------------------------------------------------------------------------
# Half-integers
# ---------------------------------------------------------------------------


@total_ordering
@dataclass(frozen=True, slots=True)
class HalfInt:
    """A value in ``Z/2`` stored as its double."""

    twice: int

    @classmethod
    def of(cls, value: Union["HalfInt", int, float, str, Fraction]) -> "HalfInt":
        """Build from an int, a half-odd float, a Fraction, or text like ``"7/2"`` / ``"3.5"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        frac = Fraction(value)
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not an integer or half-integer")
        return cls(int(doubled))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < HalfInt.of(other).twice

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, (int, Fraction)):
            return Fraction(self.twice, 2) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


# ---------------------------------------------------------------------------
# Factorials and primes
# ---------------------------------------------------------------------------

_FACT_LOCK = threading.Lock()
_FACTORIALS: list[int] = [1]

_PRIME_LOCK = threading.Lock()
_PRIMES: list[int] = []
_PRIME_LIMIT = 1


def factorial(n: int) -> int:
    """n! from an append-only per-process cache."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    table = _FACTORIALS
    if n < len(table):
        return table[n]
    with _FACT_LOCK:
        while len(_FACTORIALS) <= n:
            _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def primes_up_to(n: int) -> list[int]:
    """All primes <= n (cached sieve; the returned list must not be mutated)."""
    global _PRIMES, _PRIME_LIMIT
    if n <= _PRIME_LIMIT:
        if n == _PRIME_LIMIT:
            return _PRIMES
        import bisect

        return _PRIMES[: bisect.bisect_right(_PRIMES, n)]
    with _PRIME_LOCK:
        if n > _PRIME_LIMIT:
            limit = max(n, 2 * _PRIME_LIMIT)
            sieve = bytearray([1]) * (limit + 1)
            sieve[0:2] = b"\x00\x00"
            for p in range(2, math.isqrt(limit) + 1):
                if sieve[p]:
                    sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
            _PRIMES = [i for i, flag in enumerate(sieve) if flag]
            _PRIME_LIMIT = limit
    return primes_up_to(n)


class FactoredFactorial:
    """A rational number stored as ``{prime: exponent}``.

    Products and quotients of factorials are exponent additions, which keeps
    huge intermediate integers out of the picture and makes the perfect-square
    part of any radicand visible for free.
    """

    __slots__ = ("_exp",)

    def __init__(self, exponents: dict[int, int] | None = None):
        self._exp = {p: e for p, e in (exponents or {}).items() if e != 0}

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._exp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredFactorial):
            return NotImplemented
        return self._exp == other._exp

    def __hash__(self) -> int:
        return hash(frozenset(self._exp.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}: {e}" for p, e in sorted(self._exp.items()))
        return f"FactoredFactorial({{{inner}}})"

    def __mul__(self, other: "FactoredFactorial") -> "FactoredFactorial":
        out = dict(self._exp)
        for p, e in other._exp.items():
            out[p] = out.get(p, 0) + e
        return FactoredFactorial(out)

    def divide(self, other: "FactoredFactorial", allow_negative: bool = False) -> "FactoredFactorial":
        out = dict(self._exp)
        for p, e in other._exp.items():
            out[p] = out.get(p, 0) - e
            if out[p] < 0 and not allow_negative:
                raise ValueError(f"quotient is not an integer (prime {p})")
        return FactoredFactorial(out)

    def __truediv__(self, other: "FactoredFactorial") -> "FactoredFactorial":
        return self.divide(other, allow_negative=True)

    def to_int(self) -> int:
        if any(e < 0 for e in self._exp.values()):
            raise ValueError("factorization has a negative exponent; use to_fraction()")
        out = 1
        for p, e in self._exp.items():
            out *= p**e
        return out

    def to_fraction(self) -> Fraction:
        num = den = 1
        for p, e in self._exp.items():
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(num, den)

    def sqrt(self) -> "SqrtRational":
        """``+sqrt`` of this (positive) rational, with the square part already extracted."""
        scale_num = scale_den = core = 1
        for p, e in self._exp.items():
            half, odd = divmod(e, 2)
            if half > 0:
                scale_num *= p**half
            elif half < 0:
                scale_den *= p ** (-half)
            if odd:
                # floor division: p**-3 = p**-4 * p
                core *= p
        radicand = Fraction(scale_num * scale_num * core, scale_den * scale_den)
        return SqrtRational(1, radicand)


def factorial_factored(n: int) -> FactoredFactorial:
    """Prime factorization of n! by Legendre's formula."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    exps: dict[int, int] = {}
    for p in primes_up_to(n):
        e, q = 0, n
        while q:
            q //= p
            e += q
        exps[p] = e
    return FactoredFactorial(exps)


def factorial_ratio(numer: Iterable[int], denom: Iterable[int]) -> FactoredFactorial:
    """prod(k! for k in numer) / prod(k! for k in denom), factored."""
    out = FactoredFactorial()
    for k in numer:
        out = out * factorial_factored(k)
    for k in denom:
        out = out / factorial_factored(k)
    return out


# ---------------------------------------------------------------------------
# Signed square roots of rationals
# ---------------------------------------------------------------------------


def _as_fraction(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


#: Trial-division bound used by :meth:`SqrtRational.canonical`.
TRIAL_DIVISION_BOUND = 10_000


def _square_split(n: int) -> tuple[int, int]:
    """Write n = s**2 * f. f is squarefree unless a cofactor above the trial
    bound hides a repeated large prime that is not itself a perfect square."""
    s = f = 1
    for p in primes_up_to(TRIAL_DIVISION_BOUND):
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            s *= r
        else:
            f *= n
    return s, f


@dataclass(frozen=True, slots=True)
class SqrtRational:
    """The real number ``sign * sqrt(radicand)``.

    ``Fraction`` is already reduced, so equality of ``(sign, radicand)`` is
    equality of values.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self) -> None:
        rad = _as_fraction(self.radicand)
        if rad < 0:
            raise ValueError("radicand must be non-negative")
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if rad == 0 or self.sign == 0:
            object.__setattr__(self, "sign", 0)
            rad = Fraction(0)
        object.__setattr__(self, "radicand", rad)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "SqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def one(cls) -> "SqrtRational":
        return cls(1, Fraction(1))

    @classmethod
    def from_rational(cls, q: Rational) -> "SqrtRational":
        q = _as_fraction(q)
        return cls((q > 0) - (q < 0), q * q)

    @classmethod
    def sqrt_of(cls, q: Rational, sign: int = 1) -> "SqrtRational":
        return cls(sign, _as_fraction(q))

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.sign == 0

    def __bool__(self) -> bool:
        return self.sign != 0

    def square(self) -> Fraction:
        return self.radicand

    def is_rational(self) -> bool:
        r = self.radicand
        return _is_square(r.numerator) and _is_square(r.denominator)

    def as_rational(self) -> Fraction:
        r = self.radicand
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.sign * Fraction(math.isqrt(r.numerator), math.isqrt(r.denominator))

    def canonical(self) -> tuple[int, Fraction, int]:
        """``(sign, scale, core)`` with value ``sign * scale * sqrt(core)``, core squarefree."""
        if self.sign == 0:
            return 0, Fraction(0), 1
        num, den = self.radicand.numerator, self.radicand.denominator
        # sqrt(n/d) = sqrt(n*d)/d
        s, f = _square_split(num * den)
        return self.sign, Fraction(s, den), f

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        num, den = self.radicand.numerator, self.radicand.denominator
        # scale into [1, 4) by an even power of two so float() cannot overflow
        shift = (num.bit_length() - den.bit_length()) // 2
        if shift >= 0:
            scaled = Fraction(num, den << (2 * shift))
        else:
            scaled = Fraction(num << (-2 * shift), den)
        return self.sign * math.ldexp(math.sqrt(float(scaled)), shift)

    to_float = __float__

    # arithmetic ---------------------------------------------------------
    def __neg__(self) -> "SqrtRational":
        return SqrtRational(-self.sign, self.radicand)

    def __mul__(self, other: "SqrtRational | Rational") -> "SqrtRational":
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        return SqrtRational(self.sign * other.sign, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other: "SqrtRational | Rational") -> "SqrtRational":
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        if other.sign == 0:
            raise ZeroDivisionError("division by zero SqrtRational")
        return SqrtRational(self.sign * other.sign, self.radicand / other.radicand)

    def __add__(self, other: "SqrtRational | Rational") -> "SqrtRational":
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        if other.sign == 0:
            return self
        if self.sign == 0:
            return other
        a, b = self.radicand, other.radicand
        prod = a * b
        rn, rd = math.isqrt(prod.numerator), math.isqrt(prod.denominator)
        if rn * rn != prod.numerator or rd * rd != prod.denominator:
            raise IncommensurableRadicands(f"cannot add {self} and {other}")
        # sqrt(b) = (sqrt(ab)/a) * sqrt(a)
        coeff = self.sign + other.sign * Fraction(rn, rd) / a
        return SqrtRational((coeff > 0) - (coeff < 0), a * coeff * coeff)

    __radd__ = __add__

    def __sub__(self, other: "SqrtRational | Rational") -> "SqrtRational":
        if not isinstance(other, SqrtRational):
            other = SqrtRational.from_rational(other)
        return self + (-other)

    def __rsub__(self, other: "SqrtRational | Rational") -> "SqrtRational":
        return (-self) + other

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        sign = "-" if self.sign < 0 else ""
        if self.is_rational():
            return f"{sign}{abs(self.as_rational())}"
        return f"{sign}sqrt({self.radicand})"

    def __repr__(self) -> str:
        return f"SqrtRational({self.sign}, {self.radicand!r})"


def sqrt_mul(a: SqrtRational, b: SqrtRational) -> SqrtRational:
    return a * b


def sqrt_add(a: SqrtRational, b: SqrtRational) -> SqrtRational:
    return a + b
