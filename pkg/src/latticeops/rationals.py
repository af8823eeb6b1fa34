"""Exact rational scalars and their wire format.

Every number in the core is a ``fractions.Fraction``.  On the wire
(config files, JSON reports) rationals travel as decimal-free strings
``"num"`` or ``"num/den"`` with an optional leading sign.
"""

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse a rational string like ``"3"``, ``"-5/7"`` or ``"+2/4"``."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    s = str(text).strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    """Canonical string form: reduced, positive denominator, no '/1'."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
