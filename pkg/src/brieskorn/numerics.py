"""Exact integer and rational helpers.

Every fractional quantity in the package is a :class:`fractions.Fraction`,
which is normalized on construction and compares exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable

Rational = Fraction


def _check_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")


def ceil_div(a: int, b: int) -> int:
    """Least integer >= a/b for b >= 1."""
    _check_int("a", a)
    _check_int("b", b)
    if b <= 0:
        raise ValueError(f"divisor must be positive, got {b}")
    return -(-a // b)


def floor_scale(r: Fraction, n: int) -> int:
    """Greatest integer <= n*r, computed without leaving the integers."""
    _check_int("n", n)
    if n < 1:
        raise ValueError(f"scale must be >= 1, got {n}")
    r = Fraction(r)
    return (r.numerator * n) // r.denominator


def lcm_list(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("lcm of an empty list is undefined")
    for v in values:
        _check_int("value", v)
        if v < 1:
            raise ValueError(f"lcm_list expects positive integers, got {v}")
    return reduce(lcm, values)


def format_rational(r: Fraction) -> str:
    """Serialize as ``"num/den"``; integers keep an explicit ``/1``."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or a plain integer. Decimal strings are rejected."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    parts = s.split("/")
    if len(parts) > 2:
        raise ValueError(f"malformed rational {text!r}")
    try:
        num = int(parts[0])
        den = int(parts[1]) if len(parts) == 2 else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)
