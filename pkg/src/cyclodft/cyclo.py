"""Exact arithmetic in cyclotomic fields Q(zeta_L).

A :class:`CyclotomicNumber` is stored over the power basis of zeta_L and kept
reduced modulo the L-th cyclotomic polynomial, so the zero test is exact.
Coefficients are integers over one common positive denominator, which keeps
the inner loops on Python ints instead of Fractions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "InvalidOrderError",
    "RootOfUnity",
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "root_of_unity",
    "sqrt_positive_integer",
    "inv_sqrt_positive_integer",
    "to_complex_float",
    "is_zero",
    "conjugate",
    "DEFAULT_FLOAT_TOLERANCE",
]

DEFAULT_FLOAT_TOLERANCE = 1e-9


class InvalidOrderError(ValueError):
    """Raised for a root of unity of order zero or below."""


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _divide_monic(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending order), ``den`` monic."""
    num = list(num)
    m = len(den) - 1
    quot = [0] * (len(num) - m)
    for i in range(len(num) - 1, m - 1, -1):
        c = num[i]
        if c:
            quot[i - m] = c
            for j, d in enumerate(den):
                num[i - m + j] -= c * d
    if any(num[:m]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Built as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise InvalidOrderError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _divide_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    return deg, tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


def _reduce(n: int, coeffs: list[int]) -> list[int]:
    """Remainder of ``coeffs`` modulo Phi_n, trimmed to length deg(Phi_n)."""
    deg, low = _reduction_table(n)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j, p in low:
                coeffs[base + j] -= c * p
            coeffs[i] = 0
    del coeffs[deg:]
    return coeffs


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, tuple) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i k / L), with the exponent reduced mod L."""

    order: int
    exponent: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise InvalidOrderError(f"root of unity order must be >= 1, got {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def _fraction(self) -> Fraction:
        return Fraction(self.exponent, self.order)

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self._fraction() == other._fraction()

    def __hash__(self):
        return hash(self._fraction())

    @property
    def angle(self) -> float:
        return 2 * math.pi * self.exponent / self.order

    def value(self) -> "CyclotomicNumber":
        return root_of_unity(self.order, self.exponent)


class CyclotomicNumber:
    """An element of Q(zeta_L), immutable.

    ``coefficients`` are over the power basis zeta_L^0 .. zeta_L^(L-1); the
    stored form is always the remainder modulo Phi_L. Binary operations on
    different conductors lift both sides to the lcm first. Values that reduce
    to a rational drop to conductor 1.
    """

    __slots__ = ("_conductor", "_num", "_den")

    def __init__(self, conductor: int, coefficients: Iterable = ()):
        if conductor < 1:
            raise InvalidOrderError(f"conductor must be >= 1, got {conductor}")
        fracs = [_as_fraction(c) for c in coefficients]
        den = math.lcm(1, *(f.denominator for f in fracs))
        nums = [0] * conductor
        for k, f in enumerate(fracs):
            nums[k % conductor] += f.numerator * (den // f.denominator)
        self._set(conductor, nums, den)

    @classmethod
    def _raw(cls, conductor: int, nums: list[int], den: int) -> "CyclotomicNumber":
        obj = cls.__new__(cls)
        obj._set(conductor, nums, den)
        return obj

    def _set(self, conductor: int, nums: list[int], den: int) -> None:
        nums = _reduce(conductor, nums)
        while nums and nums[-1] == 0:
            nums.pop()
        if len(nums) <= 1:
            conductor = 1
        g = math.gcd(den, *nums)
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        if not nums:
            den = 1
        self._conductor = conductor
        self._num = tuple(nums)
        self._den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def rational(cls, value) -> "CyclotomicNumber":
        f = _as_fraction(value)
        return cls._raw(1, [f.numerator], f.denominator)

    @classmethod
    def coerce(cls, value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        return cls.rational(value)

    # -- accessors ------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        padded = self._num + (0,) * (self._conductor - len(self._num))
        return tuple(Fraction(c, self._den) for c in padded)

    def is_zero(self) -> bool:
        return not self._num

    def is_rational(self) -> bool:
        return len(self._num) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0] if self._num else 0, self._den)

    def lift(self, conductor: int) -> "CyclotomicNumber":
        """Re-express at a multiple of the current conductor (value unchanged)."""
        if conductor % self._conductor:
            raise ValueError(f"{conductor} is not a multiple of {self._conductor}")
        return CyclotomicNumber._raw(conductor, *self._lifted(conductor))

    def _lifted(self, conductor: int) -> tuple[list[int], int]:
        if conductor == self._conductor:
            return list(self._num), self._den
        step = conductor // self._conductor
        nums = [0] * max(conductor, 1)
        for k, c in enumerate(self._num):
            nums[k * step] = c
        return _reduce(conductor, nums), self._den

    # -- arithmetic -----------------------------------------------------

    def _binary_operands(self, other):
        other = CyclotomicNumber.coerce(other)
        m = math.lcm(self._conductor, other._conductor)
        a, da = self._lifted(m)
        b, db = other._lifted(m)
        return m, a, da, b, db

    def __add__(self, other):
        try:
            m, a, da, b, db = self._binary_operands(other)
        except TypeError:
            return NotImplemented
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return CyclotomicNumber._raw(m, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._conductor, [-c for c in self._num], self._den)

    def __sub__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber._raw(
                self._conductor, [c * f.numerator for c in self._num], self._den * f.denominator
            )
        try:
            m, a, da, b, db = self._binary_operands(other)
        except TypeError:
            return NotImplemented
        if not a or not b:
            return CyclotomicNumber.rational(0)
        out = [0] * (len(a) + len(b) - 1)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in bnz:
                    out[i + j] += x * y
        return CyclotomicNumber._raw(m, out, da * db)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicNumber):
            if not other.is_rational():
                raise TypeError("division is only defined by rational values")
            other = other.as_fraction()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a cyclotomic number by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = CyclotomicNumber.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta_L^k -> zeta_L^(L-k)."""
        L = self._conductor
        nums = [0] * L
        for k, c in enumerate(self._num):
            nums[(-k) % L] += c
        return CyclotomicNumber._raw(L, nums, self._den)

    # -- comparison and output -------------------------------------------

    def __eq__(self, other):
        try:
            diff = self - other
        except TypeError:
            return NotImplemented
        if diff is NotImplemented:
            return NotImplemented
        return diff.is_zero()

    __hash__ = None  # equal values may sit at different conductors

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return to_complex_float(self)

    def to_json(self) -> dict:
        return {
            "conductor": self._conductor,
            "coefficients": [[c.numerator, c.denominator] for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicNumber":
        return cls(data["conductor"], [Fraction(n, d) for n, d in data["coefficients"]])

    def __str__(self):
        if not self._num:
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            root = f"z{self._conductor}" + (f"^{k}" if k > 1 else "")
            if c == 1:
                parts.append(root)
            elif c == -1:
                parts.append(f"-{root}")
            else:
                parts.append(f"{c}*{root}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"CyclotomicNumber({self})"


def root_of_unity(L: int, k: int = 1) -> CyclotomicNumber:
    """zeta_L^k as an exact field element, stored at the reduced order."""
    if L < 1:
        raise InvalidOrderError(f"root of unity order must be >= 1, got {L}")
    g = math.gcd(L, k % L) if k % L else L
    L, k = L // g, (k % L) // g
    nums = [0] * L
    nums[k] = 1
    return CyclotomicNumber._raw(L, nums, 1)


def is_zero(z: CyclotomicNumber) -> bool:
    return CyclotomicNumber.coerce(z).is_zero()


def conjugate(z: CyclotomicNumber) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(z).conjugate()


def to_complex_float(z) -> complex:
    z = CyclotomicNumber.coerce(z)
    L = z.conductor
    total = 0j
    for k, c in enumerate(z._num):
        if c:
            total += (c / z._den) * cmath.exp(2j * math.pi * k / L)
    return total


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CyclotomicNumber:
    if p == 2:
        return root_of_unity(8, 1) + root_of_unity(8, -1)
    # quadratic Gauss sum over zeta_p, squares to (-1)^((p-1)/2) p
    nums = [0] * p
    for a in range(1, p):
        nums[a] = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
    g = CyclotomicNumber._raw(p, nums, 1)
    if p % 4 == 3:
        g = g * -root_of_unity(4, 1)
    if to_complex_float(g).real < 0:
        g = -g
    return g


@lru_cache(maxsize=None)
def sqrt_positive_integer(m: int) -> CyclotomicNumber:
    """The positive square root of a positive integer, exactly.

    Built from prime square roots (Gauss sums, with a factor of i for
    primes that are 3 mod 4); square factors come out as rationals.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"sqrt_positive_integer needs a positive integer, got {m!r}")
    outside = 1
    result = CyclotomicNumber.rational(1)
    for p, e in sorted(_prime_factors(m).items()):
        outside *= p ** (e // 2)
        if e % 2:
            result = result * _sqrt_prime(p)
    return result * outside


def inv_sqrt_positive_integer(m: int) -> CyclotomicNumber:
    """1 / sqrt(m), computed as sqrt(m) / m."""
    return sqrt_positive_integer(m) / m
