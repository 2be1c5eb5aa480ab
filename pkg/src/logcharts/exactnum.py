"""Exact scalar types for point coordinates.

Complex chart coordinates in exact mode are Gaussian rationals; the circle
factor of a log point is an exact rational angle measured in turns; radii
produced by root extraction are exact positive real radicals q**(1/k).
Floating counterparts use ``complex`` and ``float`` directly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))

    def __add__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    def __truediv__(self, other: GaussianRational) -> GaussianRational:
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by Gaussian-rational zero")
        return GaussianRational((self.re * other.re + self.im * other.im) / d,
                                (self.im * other.re - self.re * other.im) / d)

    def __pow__(self, exponent: int) -> GaussianRational:
        exponent = int(exponent)
        if exponent < 0:
            return GaussianRational(Fraction(1)) / self ** (-exponent)
        out = GaussianRational(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


GAUSSIAN_ZERO = GaussianRational(Fraction(0))
GAUSSIAN_ONE = GaussianRational(Fraction(1))


def _int_nth_root(x: int, n: int) -> int:
    """Floor of the n-th root of a nonnegative integer, exactly."""
    if x < 0:
        raise ValueError("negative radicand")
    if x in (0, 1) or n == 1:
        return x
    guess = int(round(x ** (1.0 / n))) or 1
    while guess ** n > x:
        guess -= 1
    while (guess + 1) ** n <= x:
        guess += 1
    return guess

def rational_nth_root(q: Fraction, n: int) -> Fraction | None:
    """The exact rational n-th root of q >= 0, or None if irrational."""
    if q < 0:
        raise ValueError("negative radicand")
    num = _int_nth_root(q.numerator, n)
    den = _int_nth_root(q.denominator, n)
    if num ** n == q.numerator and den ** n == q.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class NonnegRoot:
    """The exact nonnegative real number base**(1/degree), base rational.

    Normalized on construction: perfect powers are extracted, so two roots
    are equal iff their normalized (base, degree) pairs cross-power equal.
    """

    base: Fraction
    degree: int = 1

    def __post_init__(self):
        base = Fraction(self.base)
        degree = int(self.degree)
        if base < 0:
            raise ValueError("radicand must be nonnegative")
        if degree < 1:
            raise ValueError("root degree must be positive")
        if base in (0, 1):
            degree = 1
        else:
            # Pull out perfect p-th power factors of the degree.
            p = 2
            while p <= degree:
                while degree % p == 0:
                    root = rational_nth_root(base, p)
                    if root is None:
                        break
                    base = root
                    degree //= p
                p += 1
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "degree", degree)

    @staticmethod
    def of(value) -> NonnegRoot:
        if isinstance(value, NonnegRoot):
            return value
        return NonnegRoot(Fraction(value), 1)

    def is_zero(self) -> bool:
        return self.base == 0

    def is_rational(self) -> bool:
        return self.degree == 1

    def as_rational(self) -> Fraction:
        if self.degree != 1:
            raise ValueError(f"{self} is irrational")
        return self.base

    def __mul__(self, other: NonnegRoot) -> NonnegRoot:
        other = NonnegRoot.of(other)
        l = self.degree // gcd(self.degree, other.degree) * other.degree
        return NonnegRoot(self.base ** (l // self.degree) * other.base ** (l // other.degree), l)

    def __pow__(self, exponent: int) -> NonnegRoot:
        exponent = int(exponent)
        if exponent == 0:
            return NonnegRoot(Fraction(1), 1)
        if exponent < 0:
            if self.base == 0:
                raise ZeroDivisionError("zero radius to a negative power")
            return NonnegRoot(Fraction(1) / self.base ** -exponent, self.degree)
        return NonnegRoot(self.base ** exponent, self.degree)

    def root(self, n: int) -> NonnegRoot:
        """The n-th root of this value."""
        return NonnegRoot(self.base, self.degree * int(n))

    def __eq__(self, other):
        if not isinstance(other, (NonnegRoot, Fraction, int)):
            return NotImplemented
        other = NonnegRoot.of(other)
        l = self.degree // gcd(self.degree, other.degree) * other.degree
        return self.base ** (l // self.degree) == other.base ** (l // other.degree)

    def __hash__(self):
        return hash((self.base, self.degree))

    def __float__(self):
        return float(self.base) ** (1.0 / self.degree)

    def __str__(self):
        if self.degree == 1:
            return str(self.base)
        return f"{self.base}^(1/{self.degree})"


def turn_mod1(t: Fraction) -> Fraction:
    """Normalize an exact angle in turns to [0, 1)."""
    t = Fraction(t)
    return t - (t.numerator // t.denominator)


QUARTER_TURN_UNITS = {
    Fraction(0): GaussianRational(Fraction(1), Fraction(0)),
    Fraction(1, 4): GaussianRational(Fraction(0), Fraction(1)),
    Fraction(1, 2): GaussianRational(Fraction(-1), Fraction(0)),
    Fraction(3, 4): GaussianRational(Fraction(0), Fraction(-1)),
}


def unit_from_turn_exact(t: Fraction) -> GaussianRational | None:
    """exp(2*pi*i*t) as a Gaussian rational, if it is one.

    By Niven's theorem a rational turn has rational cosine and sine only at
    quarter turns, which are exactly the Gaussian-rational points among
    rational-turn points of the unit circle.
    """
    return QUARTER_TURN_UNITS.get(turn_mod1(t))


def unit_from_turn_float(t) -> complex:
    return cmath.exp(2j * cmath.pi * float(t))
