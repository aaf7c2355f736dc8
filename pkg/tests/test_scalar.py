"""Unit and property tests for the exact Q(i)(b) arithmetic."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_scalar
from hybridhopf.errors import DivisionByZero, EvalPole
from hybridhopf.scalar import (
    B,
    BPolynomial,
    GaussianRational,
    HALF,
    I,
    ONE,
    Scalar,
    ZERO,
    poly_gcd,
)


class TestGaussianRational:
    def test_parts_are_reduced_with_positive_denominators(self):
        c = GaussianRational(Fraction(2, 4), Fraction(-6, 9))
        assert c.re == Fraction(1, 2)
        assert c.im == Fraction(-2, 3)
        assert c.re.denominator > 0 and c.im.denominator > 0

    def test_i_squared(self):
        i = GaussianRational(0, 1)
        assert i * i == GaussianRational(-1)

    def test_inverse_of_i(self):
        assert GaussianRational(0, 1).inv() == GaussianRational(0, -1)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivisionByZero):
            GaussianRational(0).inv()

    def test_equality_is_structural(self):
        assert GaussianRational(Fraction(1, 2), 0) == GaussianRational(Fraction(2, 4))
        assert GaussianRational(1, 1) != GaussianRational(1, -1)


class TestScalarExamples:
    def test_add_gaussian_halves(self):
        assert HALF + I * HALF == Scalar(GaussianRational(Fraction(1, 2), Fraction(1, 2)))

    def test_additive_inverse(self):
        assert B + (-B) == ZERO

    def test_like_denominator_sum(self):
        inv2b = ONE / (2 * B)
        assert inv2b + inv2b == ONE / B

    def test_cancellation(self):
        assert B * (ONE / (2 * B)) == HALF

    def test_multiplicative_inverse(self):
        assert (2 * B * B) * (2 * B * B).inv() == ONE

    def test_inv_examples(self):
        assert (2 * B).inv() == ONE / (2 * B)
        assert I.inv() == -I
        with pytest.raises(DivisionByZero):
            ZERO.inv()

    def test_eval_examples(self):
        assert (ONE / (2 * B)).eval_at(GaussianRational(1)) == GaussianRational(Fraction(1, 2))
        assert (2 * B * B).eval_at(GaussianRational(0, 1)) == GaussianRational(-2)
        with pytest.raises(EvalPole):
            (ONE / B).eval_at(GaussianRational(0))

    def test_display(self):
        assert str((2 * B * B - 1) / (2 * B * B)) == "(2*b^2 - 1)/(2*b^2)"
        assert str(ONE / (2 * B)) == "1/(2*b)"
        assert str(ZERO) == "0"
        assert str(I * HALF) == "i/2"
        assert str(-I) == "-i"


class TestCanonicalForm:
    def test_zero_is_zero_over_one(self):
        z = B - B
        assert not z
        assert z.num.degree == -1
        assert z.den.coeffs == (GaussianRational(1),)

    def test_denominator_is_monic_and_coprime(self):
        rng = random.Random(101)
        for _ in range(50):
            s = random_scalar(rng)
            if s.den.degree >= 0:
                assert s.den.coeffs[-1] == GaussianRational(1)
            if s:
                assert poly_gcd(s.num, s.den).degree == 0

    def test_normalizing_normal_form_is_identity(self):
        rng = random.Random(102)
        for _ in range(50):
            s = random_scalar(rng)
            again = Scalar(s.num, s.den)
            assert again == s
            assert again.num.coeffs == s.num.coeffs
            assert again.den.coeffs == s.den.coeffs


_part = st.integers(-6, 6)
_gaussians = st.tuples(_part, _part, st.integers(1, 4)).map(
    lambda t: GaussianRational(Fraction(t[0], t[2]), Fraction(t[1], t[2]))
)


@st.composite
def scalars(draw):
    coeffs = draw(st.lists(_gaussians, max_size=3))
    den = draw(
        st.lists(_gaussians, min_size=1, max_size=3).filter(lambda cs: any(cs))
    )
    return Scalar(BPolynomial(coeffs), BPolynomial(den))


# modest example counts here: the >=1000-case seeded suite lives in
# tests/test_acceptance.py
class TestFieldLaws:
    @settings(max_examples=30, deadline=None)
    @given(scalars(), scalars())
    def test_commutativity(self, x, y):
        assert x + y == y + x
        assert x * y == y * x

    @settings(max_examples=30, deadline=None)
    @given(scalars(), scalars(), scalars())
    def test_associativity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)

    @settings(max_examples=30, deadline=None)
    @given(scalars(), scalars(), scalars())
    def test_distributivity(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @settings(max_examples=30, deadline=None)
    @given(scalars())
    def test_inverses(self, x):
        assert x + (-x) == ZERO
        if x:
            assert x * x.inv() == ONE

    @settings(max_examples=30, deadline=None)
    @given(scalars())
    def test_conjugation_is_an_automorphism(self, x):
        assert x.conj().conj() == x
        assert (x + I).conj() == x.conj() - I


class TestEvalHomomorphism:
    def test_eval_commutes_with_field_ops(self):
        rng = random.Random(103)
        points = [GaussianRational(1), GaussianRational(2), GaussianRational(0, 1)]
        done = 0
        while done < 60:
            x = random_scalar(rng)
            y = random_scalar(rng)
            b0 = rng.choice(points)
            try:
                xv, yv = x.eval_at(b0), y.eval_at(b0)
                sv = (x + y).eval_at(b0)
                pv = (x * y).eval_at(b0)
            except EvalPole:
                continue
            assert sv == xv + yv
            assert pv == xv * yv
            if y and yv:
                assert (x / y).eval_at(b0) == xv / yv
            done += 1


class TestPolynomials:
    def test_trailing_coefficient_nonzero(self):
        p = BPolynomial([1, 2, 0, 0])
        assert p.degree == 1

    def test_divmod_roundtrip(self):
        rng = random.Random(104)
        for _ in range(40):
            a = BPolynomial(
                [GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(0, 4))]
            )
            d = BPolynomial(
                [GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 3))]
            )
            if not d:
                continue
            q, r = a.divmod(d)
            assert q * d + r == a
            assert r.degree < d.degree

    def test_gcd_divides_both(self):
        x = BPolynomial((0, 1))  # b
        p = x * x + x.scale(GaussianRational(2))  # b^2 + 2b
        q = x * x  # b^2
        g = poly_gcd(p, q)
        assert g == x
        assert p.divmod(g)[1] == BPolynomial(())
        assert q.divmod(g)[1] == BPolynomial(())
