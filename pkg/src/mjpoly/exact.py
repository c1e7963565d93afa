"""Exact rational arithmetic helpers and Gamma-function combinatorics.

Rationals are :class:`fractions.Fraction` throughout.  Gamma values are never
evaluated on their own; only quotients whose arguments pair up with integer
offsets are reduced, which keeps everything rational.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "PoleInGamma",
    "UnreducibleRatio",
    "GammaRatio",
    "as_rational",
    "format_rational",
    "parse_rational",
    "is_nonpositive_integer",
    "pochhammer",
    "factorial",
    "binomial",
    "gamma_ratio_reduce",
]


class PoleInGamma(ArithmeticError):
    """A Gamma argument hit a non-positive integer."""


class UnreducibleRatio(ValueError):
    """Gamma arguments cannot be paired with integer offsets."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted where an exact rational is required")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical string: ``"p/q"`` or ``"p"`` when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects decimals and whitespace junk."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def is_nonpositive_integer(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def binomial(a: RationalLike, k: int) -> Fraction:
    """Generalised binomial coefficient ``a choose k`` for rational ``a``; 0 when k < 0."""
    if k < 0:
        return Fraction(0)
    a = as_rational(a)
    return pochhammer(a - k + 1, k) / factorial(k)


@dataclass(frozen=True)
class GammaRatio:
    """Symbolic ``prod Gamma(num_args) / prod Gamma(den_args)``."""

    num_args: tuple[Fraction, ...]
    den_args: tuple[Fraction, ...] = ()

    def __init__(self, num_args: Iterable[RationalLike], den_args: Iterable[RationalLike] = ()):
        object.__setattr__(self, "num_args", tuple(as_rational(a) for a in num_args))
        object.__setattr__(self, "den_args", tuple(as_rational(a) for a in den_args))

    def inverse(self) -> GammaRatio:
        return GammaRatio(self.den_args, self.num_args)

    def __mul__(self, other: GammaRatio) -> GammaRatio:
        return GammaRatio(self.num_args + other.num_args, self.den_args + other.den_args)


def _gamma_quotient(a: Fraction, b: Fraction) -> Fraction:
    # Gamma(a)/Gamma(b) with a - b an integer
    n = a - b
    assert n.denominator == 1
    n = int(n)
    if n >= 0:
        return pochhammer(b, n)
    return 1 / pochhammer(a, -n)


def gamma_ratio_reduce(ratio: GammaRatio) -> Fraction:
    """Reduce a Gamma quotient to an exact rational.

    Arguments are grouped by residue class mod 1 and paired within a class.
    Unpaired positive-integer arguments are absorbed as factorials (paired
    against ``Gamma(1) = 1``).

    Raises
    ------
    PoleInGamma
        Some argument is a non-positive integer.
    UnreducibleRatio
        Some class has unequal numerator and denominator counts.
    """
    for a in ratio.num_args + ratio.den_args:
        if is_nonpositive_integer(a):
            raise PoleInGamma(f"Gamma({format_rational(a)}) is a pole")

    num_by_class: dict[Fraction, list[Fraction]] = defaultdict(list)
    den_by_class: dict[Fraction, list[Fraction]] = defaultdict(list)
    for a in ratio.num_args:
        num_by_class[a - (a.numerator // a.denominator)].append(a)
    for b in ratio.den_args:
        den_by_class[b - (b.numerator // b.denominator)].append(b)

    out = Fraction(1)
    for cls in sorted(set(num_by_class) | set(den_by_class)):
        nums = sorted(num_by_class.get(cls, []))
        dens = sorted(den_by_class.get(cls, []))
        if len(nums) != len(dens):
            if cls != 0:
                raise UnreducibleRatio(
                    "no integer-offset pairing for arguments "
                    + ", ".join(format_rational(a) for a in nums + dens)
                )
            # integer class: pad the shorter side with Gamma(1)
            pad = [Fraction(1)] * abs(len(nums) - len(dens))
            if len(nums) < len(dens):
                nums = pad + nums
            else:
                dens = pad + dens
        for a, b in zip(nums, dens):
            out *= _gamma_quotient(a, b)
    return out
