# cython: language_level=3
"""Compiled kernel for the coefficient field Q(i)(b).

Line-for-line port of ``hybridhopf._scalar_py`` with static typing on the
hot paths; the semantics, canonical forms, and display strings are identical
(tests cross-check the two backends on randomized inputs).  Coefficients are
arbitrary-precision Python integers throughout, so the speedup comes from
C-level attribute access and call dispatch, not from narrower arithmetic.
"""

from fractions import Fraction
from math import gcd

from ._display import format_gaussian, format_poly, format_scalar
from .errors import DivisionByZero, EvalPole


cdef class GaussianRational:
    """An element of Q(i): re + i*im with exact rational parts."""

    cdef readonly object a
    cdef readonly object b
    cdef readonly object d

    def __init__(self, re=0, im=0):
        re = re if isinstance(re, Fraction) else Fraction(re)
        im = im if isinstance(im, Fraction) else Fraction(im)
        rd = re.denominator
        id_ = im.denominator
        d = rd // gcd(rd, id_) * id_
        self.a = re.numerator * (d // rd)
        self.b = im.numerator * (d // id_)
        self.d = d

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        cdef GaussianRational o = <GaussianRational> other
        return _gr_make(
            self.a * o.d + o.a * self.d,
            self.b * o.d + o.b * self.d,
            self.d * o.d,
        )

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        cdef GaussianRational o = <GaussianRational> other
        return _gr_make(
            self.a * o.d - o.a * self.d,
            self.b * o.d - o.b * self.d,
            self.d * o.d,
        )

    def __neg__(self):
        return _gr_raw(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        cdef GaussianRational o = <GaussianRational> other
        return _gr_make(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d * o.d,
        )

    def inv(self):
        """Multiplicative inverse; 1/(a+bi) = (a-bi)/(a^2+b^2)."""
        if self.a == 0 and self.b == 0:
            raise DivisionByZero("inverse of zero")
        n = self.a * self.a + self.b * self.b
        return _gr_make(self.d * self.a, -self.d * self.b, n)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            return NotImplemented
        return self * (<GaussianRational> other).inv()

    def conj(self):
        return _gr_raw(self.a, -self.b, self.d)

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return (
                self.a == (<GaussianRational> other).a
                and self.b == (<GaussianRational> other).b
                and self.d == (<GaussianRational> other).d
            )
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __str__(self):
        return format_gaussian(self.a, self.b, self.d)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


cdef GaussianRational _gr_raw(object a, object b, object d):
    cdef GaussianRational out = GaussianRational.__new__(GaussianRational)
    out.a = a
    out.b = b
    out.d = d
    return out


cdef GaussianRational _gr_make(object a, object b, object d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return _gr_raw(a, b, d)


cdef GaussianRational _GR_ZERO = _gr_raw(0, 0, 1)
cdef GaussianRational _GR_ONE = _gr_raw(1, 0, 1)


cdef GaussianRational _coerce_gr_c(object value):
    if type(value) is GaussianRational:
        return <GaussianRational> value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


cdef inline bint _gr_nonzero(GaussianRational c):
    return c.a != 0 or c.b != 0


cdef class BPolynomial:
    """Polynomial in the parameter b with Gaussian-rational coefficients."""

    cdef readonly tuple coeffs

    def __init__(self, coeffs=()):
        cdef list cs = []
        for c in coeffs:
            g = _coerce_gr_c(c)
            if g is None:
                raise TypeError(f"bad polynomial coefficient: {c!r}")
            cs.append(g)
        while cs and not _gr_nonzero(<GaussianRational> cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return len(self.coeffs) > 0

    def lead(self):
        return self.coeffs[-1] if self.coeffs else _GR_ZERO

    def __add__(self, other):
        if type(other) is not BPolynomial:
            return NotImplemented
        return _poly_add(self, <BPolynomial> other)

    def __sub__(self, other):
        if type(other) is not BPolynomial:
            return NotImplemented
        return _poly_add(self, _poly_neg(<BPolynomial> other))

    def __neg__(self):
        return _poly_neg(self)

    def __mul__(self, other):
        if type(other) is not BPolynomial:
            return NotImplemented
        return _poly_mul(self, <BPolynomial> other)

    def scale(self, factor):
        return _poly_scale(self, <GaussianRational?> factor)

    def divmod(self, other):
        """Exact field division: (quotient, remainder) with deg(r) < deg(d)."""
        if not <BPolynomial?> other:
            raise DivisionByZero("polynomial division by zero")
        return _poly_divmod(self, <BPolynomial> other)

    def monic(self):
        return _poly_monic(self)

    def conj(self):
        return _poly_raw(tuple((<GaussianRational> c).conj() for c in self.coeffs))

    def evaluate(self, point):
        cdef GaussianRational acc = _GR_ZERO
        cdef GaussianRational p = <GaussianRational?> point
        cdef Py_ssize_t k
        for k in range(len(self.coeffs) - 1, -1, -1):
            acc = <GaussianRational> (acc * p) + <GaussianRational> self.coeffs[k]
        return acc

    def __eq__(self, other):
        if type(other) is BPolynomial:
            return self.coeffs == (<BPolynomial> other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _triples(self):
        return [(c.a, c.b, c.d) for c in self.coeffs]

    def __str__(self):
        return format_poly(self._triples())

    def __repr__(self):
        return f"BPolynomial<{self}>"


cdef BPolynomial _poly_raw(tuple coeffs):
    cdef BPolynomial out = BPolynomial.__new__(BPolynomial)
    out.coeffs = coeffs
    return out


cdef BPolynomial _poly_trim(list cs):
    while cs and not _gr_nonzero(<GaussianRational> cs[-1]):
        cs.pop()
    return _poly_raw(tuple(cs))


cdef BPolynomial _poly_neg(BPolynomial p):
    return _poly_raw(tuple(-(<GaussianRational> c) for c in p.coeffs))


cdef BPolynomial _poly_add(BPolynomial x, BPolynomial y):
    cdef tuple a = x.coeffs
    cdef tuple b = y.coeffs
    if not a:
        return y
    if not b:
        return x
    if len(a) < len(b):
        a, b = b, a
    cdef list cs = list(a)
    cdef Py_ssize_t k
    for k in range(len(b)):
        cs[k] = <GaussianRational> cs[k] + <GaussianRational> b[k]
    return _poly_trim(cs)


cdef BPolynomial _poly_mul(BPolynomial x, BPolynomial y):
    cdef tuple a = x.coeffs
    cdef tuple b = y.coeffs
    if not a or not b:
        return _POLY_ZERO
    cdef Py_ssize_t na = len(a), nb = len(b), j, k
    cdef list cs = [_GR_ZERO] * (na + nb - 1)
    for j in range(na):
        cj = <GaussianRational> a[j]
        if not _gr_nonzero(cj):
            continue
        for k in range(nb):
            ck = <GaussianRational> b[k]
            if _gr_nonzero(ck):
                cs[j + k] = <GaussianRational> cs[j + k] + <GaussianRational> (cj * ck)
    return _poly_raw(tuple(cs))


cdef BPolynomial _poly_scale(BPolynomial p, GaussianRational factor):
    if not _gr_nonzero(factor):
        return _POLY_ZERO
    return _poly_raw(tuple(<GaussianRational> c * factor for c in p.coeffs))


cdef tuple _poly_divmod(BPolynomial x, BPolynomial y):
    cdef list rem = list(x.coeffs)
    cdef Py_ssize_t dn = len(rem), dd = len(y.coeffs), k, j
    if dn < dd:
        return _POLY_ZERO, x
    cdef GaussianRational inv_lead = (<GaussianRational> y.coeffs[-1]).inv()
    cdef list quo = [_GR_ZERO] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = <GaussianRational> rem[k + dd - 1]
        if not _gr_nonzero(c):
            continue
        q = c * inv_lead
        quo[k] = q
        for j in range(dd):
            rem[k + j] = <GaussianRational> rem[k + j] - <GaussianRational> (
                (<GaussianRational> q) * <GaussianRational> y.coeffs[j]
            )
    return _poly_trim(quo), _poly_trim(rem[: dd - 1])


cdef BPolynomial _poly_monic(BPolynomial p):
    if not p.coeffs:
        return p
    cdef GaussianRational lead = <GaussianRational> p.coeffs[-1]
    if lead.a == lead.d and lead.b == 0:
        return p
    return _poly_scale(p, lead.inv())


cdef BPolynomial _POLY_ZERO = _poly_raw(())
cdef BPolynomial _POLY_ONE = _poly_raw((_GR_ONE,))


cpdef BPolynomial poly_gcd(BPolynomial u, BPolynomial v):
    """Monic gcd over Q(i) via the Euclidean algorithm."""
    while v:
        u, v = v, _poly_divmod(u, v)[1]
    return _poly_monic(u)


cdef class Scalar:
    """An element of Q(i)(b) in reduced form with a monic denominator."""

    cdef readonly BPolynomial num
    cdef readonly BPolynomial den

    def __init__(self, value=0, den=None):
        cdef BPolynomial num_p, den_p
        if isinstance(value, BPolynomial):
            num_p = <BPolynomial> value
        else:
            g = _coerce_gr_c(value)
            if g is None:
                raise TypeError(f"bad scalar value: {value!r}")
            num_p = _poly_raw((g,)) if _gr_nonzero(g) else _POLY_ZERO
        if den is None:
            den_p = _POLY_ONE
        elif isinstance(den, BPolynomial):
            den_p = <BPolynomial> den
        else:
            den_p = BPolynomial((den,))
        cdef Scalar made = _sc_make(num_p, den_p)
        self.num = made.num
        self.den = made.den

    def __bool__(self):
        return len(self.num.coeffs) > 0

    def is_one(self):
        return self.num.coeffs == (_GR_ONE,) and self.den.coeffs == (_GR_ONE,)

    def __add__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_add(self, o)

    def __radd__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_add(o, self)

    def __sub__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_add(self, _sc_neg(o))

    def __rsub__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_add(o, _sc_neg(self))

    def __neg__(self):
        return _sc_neg(self)

    def __mul__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_mul(self, o)

    def __rmul__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_mul(o, self)

    def inv(self):
        return _sc_inv(self)

    def __truediv__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_mul(self, _sc_inv(o))

    def __rtruediv__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return _sc_mul(o, _sc_inv(self))

    def __pow__(self, exponent, modulo):
        if modulo is not None or not isinstance(exponent, int):
            return NotImplemented
        cdef Scalar base = self
        cdef long long n = exponent
        if n < 0:
            base = _sc_inv(base)
            n = -n
        cdef Scalar acc = _SC_ONE
        while n > 0:
            acc = _sc_mul(acc, base)
            n -= 1
        return acc

    def conj(self):
        return _sc_raw(self.num.conj(), self.den.conj())

    def eval_at(self, point):
        """Substitute b := point; raises EvalPole on a vanishing denominator."""
        dv = self.den.evaluate(point)
        if not dv:
            raise EvalPole(f"denominator {self.den} vanishes at b = {point}")
        return self.num.evaluate(point) / dv

    def __eq__(self, other):
        cdef Scalar o = _coerce_scalar_c(other)
        if o is None:
            return NotImplemented
        return self.num.coeffs == o.num.coeffs and self.den.coeffs == o.den.coeffs

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        return format_scalar(self.num._triples(), self.den._triples())

    def __repr__(self):
        return f"Scalar<{self}>"


cdef Scalar _sc_raw(BPolynomial num, BPolynomial den):
    cdef Scalar out = Scalar.__new__(Scalar)
    out.num = num
    out.den = den
    return out


cdef Scalar _sc_make(BPolynomial num, BPolynomial den):
    if not den.coeffs:
        raise DivisionByZero("scalar with zero denominator")
    if not num.coeffs:
        return _sc_raw(_POLY_ZERO, _POLY_ONE)
    cdef GaussianRational lead
    if len(den.coeffs) == 1:
        lead = <GaussianRational> den.coeffs[0]
        if lead.a == lead.d and lead.b == 0:
            return _sc_raw(num, _POLY_ONE)
        return _sc_raw(_poly_scale(num, lead.inv()), _POLY_ONE)
    cdef BPolynomial g
    if len(num.coeffs) > 1:
        g = poly_gcd(num, den)
        if len(g.coeffs) > 1:
            num = _poly_divmod(num, g)[0]
            den = _poly_divmod(den, g)[0]
    lead = <GaussianRational> den.coeffs[-1]
    if not (lead.a == lead.d and lead.b == 0):
        ilead = lead.inv()
        num = _poly_scale(num, ilead)
        den = _poly_scale(den, ilead)
    return _sc_raw(num, den)


cdef Scalar _sc_neg(Scalar x):
    if not x.num.coeffs:
        return x
    return _sc_raw(_poly_neg(x.num), x.den)


cdef Scalar _sc_add(Scalar x, Scalar y):
    if not x.num.coeffs:
        return y
    if not y.num.coeffs:
        return x
    cdef BPolynomial s
    if len(x.den.coeffs) == 1 and len(y.den.coeffs) == 1:
        s = _poly_add(x.num, y.num)
        return _SC_ZERO if not s.coeffs else _sc_raw(s, _POLY_ONE)
    return _sc_make(
        _poly_add(_poly_mul(x.num, y.den), _poly_mul(y.num, x.den)),
        _poly_mul(x.den, y.den),
    )


cdef Scalar _sc_mul(Scalar x, Scalar y):
    if not x.num.coeffs or not y.num.coeffs:
        return _SC_ZERO
    if len(x.den.coeffs) == 1 and len(y.den.coeffs) == 1:
        return _sc_raw(_poly_mul(x.num, y.num), _POLY_ONE)
    return _sc_make(_poly_mul(x.num, y.num), _poly_mul(x.den, y.den))


cdef Scalar _sc_inv(Scalar x):
    if not x.num.coeffs:
        raise DivisionByZero("inverse of the zero scalar")
    cdef GaussianRational lead = <GaussianRational> x.num.coeffs[-1]
    if lead.a == lead.d and lead.b == 0:
        return _sc_raw(x.den, x.num)
    ilead = lead.inv()
    return _sc_raw(_poly_scale(x.den, ilead), _poly_scale(x.num, ilead))


cdef Scalar _SC_ZERO = _sc_raw(_POLY_ZERO, _POLY_ONE)
cdef Scalar _SC_ONE = _sc_raw(_POLY_ONE, _POLY_ONE)


cdef Scalar _coerce_scalar_c(object value):
    if type(value) is Scalar:
        return <Scalar> value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return Scalar(value)
    return None
