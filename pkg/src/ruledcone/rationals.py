"""Exact rational helpers: strict ``p/q`` parsing and Stern-Brocot search.

Rationals cross every external boundary as ``p/q`` strings.  Decimal
literals are rejected on purpose: ``0.1`` silently becomes 3602879701896397/2**55
under float parsing, and the chamber inequalities are exact half-open
conditions where that error is fatal.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"`` or ``"-5/2"`` into a Fraction.  Decimals are rejected."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not an integer or p/q rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational strictly inside the open interval (lo, hi).

    Classic continued-fraction descent.  Used to pick inflation hop targets
    with tame denominators so chained plans do not blow up coefficient sizes.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    f = math.floor(lo)
    if f + 1 < hi:
        return Fraction(f + 1)
    if lo == f:
        # interval (f, hi) with hi <= f+1: answer is f + 1/m for minimal m
        m = math.floor(1 / (hi - f)) + 1
        return f + Fraction(1, m)
    return f + 1 / simplest_between(1 / (hi - f), 1 / (lo - f))
