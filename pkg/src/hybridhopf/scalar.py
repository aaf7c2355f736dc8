"""Coefficient field Q(i)(b): backend selection and shared constants.

The arithmetic kernel exists twice: ``_scalar_py`` (pure Python) and
``_scalar_cy`` (the same algorithms compiled with Cython).  The compiled
module is preferred when it has been built; setting ``HYBRIDHOPF_PURE=1``
forces the pure-Python kernel.  ``BACKEND`` records which one is active.
"""

from __future__ import annotations

import os
from fractions import Fraction

if os.environ.get("HYBRIDHOPF_PURE") == "1":
    from . import _scalar_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _scalar_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _scalar_py as _impl

        BACKEND = "python"

GaussianRational = _impl.GaussianRational
BPolynomial = _impl.BPolynomial
Scalar = _impl.Scalar
poly_gcd = _impl.poly_gcd

ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(Fraction(1, 2))
I = Scalar(GaussianRational(0, 1))
B = Scalar(BPolynomial((0, 1)))


def rational(p, q=1) -> Scalar:
    """Constant scalar p/q."""
    return Scalar(Fraction(p, q))


def gaussian(re, im=0) -> Scalar:
    """Constant scalar re + i*im."""
    return Scalar(GaussianRational(re, im))


def scalar_is_negative(s: Scalar) -> bool:
    """Display-sign convention: leading numerator coefficient is negative."""
    if not s.num:
        return False
    c = s.num.coeffs[-1]
    return c.a < 0 or (c.a == 0 and c.b < 0)


def as_constant(s: Scalar):
    """The value of a constant scalar as a GaussianRational, else None."""
    if s.den.degree != 0 or s.num.degree > 0:
        return None
    return s.num.coeffs[0] if s.num else GaussianRational(0)
