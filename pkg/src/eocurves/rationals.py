"""Exact rational scalars and their string/JSON encoding.

``fractions.Fraction`` already maintains the invariants required of the
scalar type (reduced, positive denominator, zero is 0/1), so it is used
directly; this module only adds the wire format used everywhere else:
``"p/q"``, or ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

QZERO = Fraction(0)
QONE = Fraction(1)


def qstr(x: Fraction) -> str:
    """Encode a rational as ``"p/q"`` (``"p"`` when q = 1)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_q(s: str) -> Fraction:
    """Parse the ``"p/q"`` encoding back into a Fraction."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))
