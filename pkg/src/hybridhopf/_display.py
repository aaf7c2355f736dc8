"""Shared display formatting for scalars, used by both scalar backends.

Everything here works on raw coefficient data: a Gaussian rational is the
integer triple (a, b, d) for the value (a + b*i)/d with d > 0 and
gcd(a, b, d) = 1; a polynomial is a sequence of such triples indexed by the
power of b.  Keeping the formatting in one pure-Python module guarantees the
compiled and interpreted kernels print identically.

The emitted strings are valid inputs for the expression parser; the element
and tensor printers build on them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

_PLAIN_DEN = re.compile(r"\d+|b(\^\d+)?")


def triple_is_negative(a: int, b: int) -> bool:
    """Sign convention used when pulling a leading minus out of a term."""
    return a < 0 or (a == 0 and b < 0)


def format_fraction(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def format_gaussian(a: int, b: int, d: int) -> str:
    """Render (a + b*i)/d.  Mixed values keep their internal sign."""
    if b == 0:
        return format_fraction(Fraction(a, d))
    im = Fraction(b, d)
    if a == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{format_fraction(im)}*i"
    mag = abs(im)
    imag = "i" if mag == 1 else f"{format_fraction(mag)}*i"
    joiner = " - " if im < 0 else " + "
    return f"{format_fraction(Fraction(a, d))}{joiner}{imag}"


def _format_term(a: int, b: int, d: int, k: int) -> str:
    """One sign-extracted term: coefficient (a + b*i)/d times b^k."""
    if k == 0:
        return format_gaussian(a, b, d)
    xs = "b" if k == 1 else f"b^{k}"
    if b == 0:
        if a == d:
            return xs
        return f"{format_fraction(Fraction(a, d))}*{xs}"
    if a == 0:
        if b == d:
            return f"i*{xs}"
        return f"{format_fraction(Fraction(b, d))}*i*{xs}"
    return f"({format_gaussian(a, b, d)})*{xs}"


def format_poly(triples) -> str:
    """Polynomial in b, terms in decreasing degree, zero terms suppressed."""
    parts: list[str] = []
    for k in range(len(triples) - 1, -1, -1):
        a, b, d = triples[k]
        if a == 0 and b == 0:
            continue
        if k == 0 and a != 0 and b != 0:
            # A mixed constant carries its own internal +/-; as the leading
            # part its unary minus binds to the real part only, which is the
            # intended reading, but after a join it must be parenthesized so
            # the imaginary part cannot fuse with the surrounding sum.
            raw = format_gaussian(a, b, d)
            parts.append(raw if not parts else f" + ({raw})")
            continue
        neg = triple_is_negative(a, b)
        if neg:
            a, b = -a, -b
        term = _format_term(a, b, d, k)
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"{' - ' if neg else ' + '}{term}")
    return "".join(parts) if parts else "0"


def has_top_level_ops(s: str) -> bool:
    """True when the string has a '+' or binary '-' outside all parentheses."""
    depth = 0
    for idx, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and idx > 0 and s[idx - 1] == " ":
            return True
    return False


def _scaled(triples, scale: int):
    return [(a * (scale // d), b * (scale // d), 1) for a, b, d in triples]


def format_scalar(num_triples, den_triples) -> str:
    """Quotient display with denominators cleared to Gaussian integers.

    The canonical form keeps the denominator monic; for printing, both sides
    are rescaled by the lcm of the coefficient denominators so the output
    matches the paper's integer-coefficient style, e.g. (2*b^2 - 1)/(2*b^2).
    """
    if not num_triples:
        return "0"
    scale = lcm(*(t[2] for t in num_triples), *(t[2] for t in den_triples))
    num_s = format_poly(_scaled(num_triples, scale))
    den_is_one = len(den_triples) == 1 and den_triples[0] == (1, 0, 1)
    if den_is_one and scale == 1:
        return num_s
    den_s = format_poly(_scaled(den_triples, scale))
    if has_top_level_ops(num_s):
        num_s = f"({num_s})"
    if not _PLAIN_DEN.fullmatch(den_s):
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def as_factor(s: str) -> str:
    """Parenthesize a scalar string so that appending '*x' keeps its value."""
    if has_top_level_ops(s) or s.startswith("-"):
        return f"({s})"
    return s
