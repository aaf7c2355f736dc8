"""Pure-Python kernel for the coefficient field Q(i)(b).

Three layers, each immutable and in a canonical form that makes equality a
plain structural comparison:

* ``GaussianRational`` -- Q(i), stored as the integer triple (a, b, d) for
  (a + b*i)/d with d > 0 and gcd(a, b, d) = 1.
* ``BPolynomial`` -- polynomials in the parameter b over Q(i); the trailing
  (highest-degree) coefficient is nonzero, so the zero polynomial is the
  empty coefficient tuple.
* ``Scalar`` -- quotients num/den with gcd(num, den) = 1 and a monic
  denominator; zero is 0/1.

All operations are pure functions returning new values; instances may be
shared freely between threads.  ``hybridhopf._scalar_cy`` is a compiled twin
of this module with the same semantics; ``hybridhopf.scalar`` picks one at
import time.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._display import format_poly, format_scalar
from .errors import DivisionByZero, EvalPole


class GaussianRational:
    """An element of Q(i): re + i*im with exact rational parts."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        re = re if isinstance(re, Fraction) else Fraction(re)
        im = im if isinstance(im, Fraction) else Fraction(im)
        rd, id_ = re.denominator, im.denominator
        d = rd // gcd(rd, id_) * id_
        self.a = re.numerator * (d // rd)
        self.b = im.numerator * (d // id_)
        self.d = d

    @staticmethod
    def _make(a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        out = GaussianRational.__new__(GaussianRational)
        out.a = a
        out.b = b
        out.d = d
        return out

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __neg__(self):
        out = GaussianRational.__new__(GaussianRational)
        out.a = -self.a
        out.b = -self.b
        out.d = self.d
        return out

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    def inv(self) -> "GaussianRational":
        """Multiplicative inverse; 1/(a+bi) = (a-bi)/(a^2+b^2)."""
        if self.a == 0 and self.b == 0:
            raise DivisionByZero("inverse of zero")
        n = self.a * self.a + self.b * self.b
        return GaussianRational._make(self.d * self.a, -self.d * self.b, n)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        return self * other.inv()

    def conj(self) -> "GaussianRational":
        out = GaussianRational.__new__(GaussianRational)
        out.a = self.a
        out.b = -self.b
        out.d = self.d
        return out

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __str__(self):
        from ._display import format_gaussian

        return format_gaussian(self.a, self.b, self.d)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


_GR_ZERO = GaussianRational(0)
_GR_ONE = GaussianRational(1)


def _coerce_gr(value):
    if type(value) is GaussianRational:
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


class BPolynomial:
    """Polynomial in the parameter b with Gaussian-rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            g = _coerce_gr(c)
            if g is None:
                raise TypeError(f"bad polynomial coefficient: {c!r}")
            cs.append(g)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def _raw(coeffs: tuple) -> "BPolynomial":
        out = BPolynomial.__new__(BPolynomial)
        out.coeffs = coeffs
        return out

    @staticmethod
    def _trim(cs: list) -> "BPolynomial":
        while cs and not cs[-1]:
            cs.pop()
        return BPolynomial._raw(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else _GR_ZERO

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = cs[k] + c
        return BPolynomial._trim(cs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BPolynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _POLY_ZERO
        cs = [_GR_ZERO] * (len(a) + len(b) - 1)
        for j, cj in enumerate(a):
            if not cj:
                continue
            for k, ck in enumerate(b):
                if ck:
                    cs[j + k] = cs[j + k] + cj * ck
        return BPolynomial._raw(tuple(cs))

    def scale(self, factor: GaussianRational) -> "BPolynomial":
        if not factor:
            return _POLY_ZERO
        return BPolynomial._raw(tuple(c * factor for c in self.coeffs))

    def divmod(self, other: "BPolynomial"):
        """Exact field division: (quotient, remainder) with deg(r) < deg(d)."""
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem), len(other.coeffs)
        if dn < dd:
            return _POLY_ZERO, self
        inv_lead = other.coeffs[-1].inv()
        quo = [_GR_ZERO] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd - 1]
            if not c:
                continue
            q = c * inv_lead
            quo[k] = q
            for j in range(dd):
                rem[k + j] = rem[k + j] - q * other.coeffs[j]
        return BPolynomial._trim(quo), BPolynomial._trim(rem[: dd - 1])

    def monic(self) -> "BPolynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == _GR_ONE:
            return self
        return self.scale(lead.inv())

    def conj(self) -> "BPolynomial":
        return BPolynomial._raw(tuple(c.conj() for c in self.coeffs))

    def evaluate(self, point: GaussianRational) -> GaussianRational:
        acc = _GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        if type(other) is BPolynomial:
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _triples(self):
        return [(c.a, c.b, c.d) for c in self.coeffs]

    def __str__(self):
        return format_poly(self._triples())

    def __repr__(self):
        return f"BPolynomial<{self}>"


_POLY_ZERO = BPolynomial._raw(())
_POLY_ONE = BPolynomial._raw((_GR_ONE,))


def poly_gcd(u: BPolynomial, v: BPolynomial) -> BPolynomial:
    """Monic gcd over Q(i) via the Euclidean algorithm."""
    while v:
        u, v = v, u.divmod(v)[1]
    return u.monic()


class Scalar:
    """An element of Q(i)(b) in reduced form with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, value=0, den=None):
        if isinstance(value, BPolynomial):
            num = value
        else:
            g = _coerce_gr(value)
            if g is None:
                raise TypeError(f"bad scalar value: {value!r}")
            num = BPolynomial._raw((g,)) if g else _POLY_ZERO
        if den is None:
            den = _POLY_ONE
        elif not isinstance(den, BPolynomial):
            den = BPolynomial((den,))
        made = Scalar._make(num, den)
        self.num = made.num
        self.den = made.den

    @staticmethod
    def _raw(num: BPolynomial, den: BPolynomial) -> "Scalar":
        out = Scalar.__new__(Scalar)
        out.num = num
        out.den = den
        return out

    @staticmethod
    def _make(num: BPolynomial, den: BPolynomial) -> "Scalar":
        if not den:
            raise DivisionByZero("scalar with zero denominator")
        if not num:
            return Scalar._raw(_POLY_ZERO, _POLY_ONE)
        if den.degree == 0:
            lead = den.coeffs[0]
            if lead == _GR_ONE:
                return Scalar._raw(num, _POLY_ONE)
            return Scalar._raw(num.scale(lead.inv()), _POLY_ONE)
        if num.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
        lead = den.lead()
        if lead != _GR_ONE:
            ilead = lead.inv()
            num = num.scale(ilead)
            den = den.scale(ilead)
        return Scalar._raw(num, den)

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num.coeffs == (_GR_ONE,) and self.den.coeffs == (_GR_ONE,)

    def __add__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den.degree == 0 and other.den.degree == 0:
            s = self.num + other.num
            return _SC_ZERO if not s else Scalar._raw(s, _POLY_ONE)
        return Scalar._make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        if not self.num:
            return self
        return Scalar._raw(-self.num, self.den)

    def __mul__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return _SC_ZERO
        if self.den.degree == 0 and other.den.degree == 0:
            return Scalar._raw(self.num * other.num, _POLY_ONE)
        return Scalar._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of the zero scalar")
        lead = self.num.lead()
        if lead == _GR_ONE:
            return Scalar._raw(self.den, self.num)
        ilead = lead.inv()
        return Scalar._raw(self.den.scale(ilead), self.num.scale(ilead))

    def __truediv__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        acc = _SC_ONE
        for _ in range(exponent):
            acc = acc * base
        return acc

    def conj(self) -> "Scalar":
        return Scalar._raw(self.num.conj(), self.den.conj())

    def eval_at(self, point: GaussianRational) -> GaussianRational:
        """Substitute b := point; raises EvalPole on a vanishing denominator."""
        dv = self.den.evaluate(point)
        if not dv:
            raise EvalPole(f"denominator {self.den} vanishes at b = {point}")
        return self.num.evaluate(point) / dv

    def __eq__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        return format_scalar(self.num._triples(), self.den._triples())

    def __repr__(self):
        return f"Scalar<{self}>"


_SC_ZERO = Scalar._raw(_POLY_ZERO, _POLY_ONE)
_SC_ONE = Scalar._raw(_POLY_ONE, _POLY_ONE)


def _coerce_scalar(value):
    if type(value) is Scalar:
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return Scalar(value)
    return None
