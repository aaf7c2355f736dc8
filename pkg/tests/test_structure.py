"""Structure tables and the derived counital maps for both variants."""

from fractions import Fraction

import pytest

from hybridhopf.errors import ZeroParameter
from hybridhopf.hybrid import BASIS_ELEMENTS, BasisIndex, HybridElement
from hybridhopf.scalar import B, GaussianRational, HALF, I, ONE, Scalar, TWO, ZERO
from hybridhopf.structure import (
    Variant,
    antipode_ext,
    build_structure,
    counit_ext,
    delta_ext,
    eps_s,
    eps_t,
    maps_conj,
    maps_eval,
)
from hybridhopf.tensor import Tensor2

import paper_values as pv

ONE_E, G, MU, NU = BASIS_ELEMENTS
ONE_, G_, MU_, NU_ = BasisIndex.ONE, BasisIndex.G, BasisIndex.MU, BasisIndex.NU


class TestTables:
    def test_delta_nu_variant_a(self):
        maps = build_structure(Variant.A)
        expected = Tensor2.from_terms(
            [
                (MU_, ONE_, -I * HALF),
                (NU_, ONE_, HALF),
                (ONE_, MU_, -I * HALF),
                (MU_, MU_, I * HALF / B),
                (ONE_, NU_, HALF),
            ]
        )
        assert maps.delta[NU_] == expected

    def test_antipode_mu_variant_a(self):
        maps = build_structure(Variant.A)
        assert maps.antipode[MU_] == pv.S_MU

    def test_counits(self):
        a = build_structure(Variant.A)
        b = build_structure(Variant.B)
        for maps in (a, b):
            assert maps.counit[ONE_] == TWO
            assert maps.counit[G_] == ONE / B
            assert maps.counit[MU_] == 2 * B
        assert a.counit[NU_] == 2 * I * B
        assert b.counit[NU_] == -(2 * I * B)

    def test_shared_entries_across_variants(self):
        a = build_structure(Variant.A)
        b = build_structure(Variant.B)
        assert a.delta[MU_] == b.delta[MU_]
        assert a.antipode[ONE_] == b.antipode[ONE_] == ONE_E

    def test_variants_are_conjugate(self):
        # the two printed structures are related by i -> -i; asserted, not assumed
        a = build_structure(Variant.A)
        b = build_structure(Variant.B)
        conj = maps_conj(a)
        assert conj.delta == b.delta
        assert conj.counit == b.counit
        assert conj.antipode == b.antipode


class TestLinearExtensions:
    def test_delta_ext_of_mu_plus_g(self):
        maps = build_structure(Variant.A)
        expected = maps.delta[G_] + Tensor2.from_terms([(MU_, MU_, HALF / B)])
        assert delta_ext(maps, MU + G) == expected

    def test_counit_ext_of_zero(self):
        maps = build_structure(Variant.A)
        assert counit_ext(maps, HybridElement.zero()) == ZERO

    def test_antipode_ext_linearity(self):
        maps = build_structure(Variant.A)
        b2 = B * B
        expected = HybridElement([ZERO, 4 * b2, 4 * b2, 4 * I * b2])
        assert antipode_ext(maps, MU.scale(TWO)) == expected


class TestCounitalMaps:
    def test_eps_t_matches_printed_values(self):
        maps = build_structure(Variant.A)
        assert eps_t(maps, NU) == pv.EPS_T_NU
        assert eps_t(maps, MU) == pv.EPS_T_MU
        assert eps_t(maps, G) == pv.EPS_T_G

    def test_eps_s_matches_printed_values(self):
        maps = build_structure(Variant.A)
        assert eps_s(maps, G) == pv.EPS_S_G
        assert eps_s(maps, MU) == pv.EPS_S_MU
        assert eps_s(maps, NU) == pv.EPS_S_NU

    def test_eps_of_unit(self):
        for variant in Variant:
            maps = build_structure(variant)
            assert eps_t(maps, ONE_E) == ONE_E
            assert eps_s(maps, ONE_E) == ONE_E

    def test_idempotence(self):
        for variant in Variant:
            maps = build_structure(variant)
            for e in BASIS_ELEMENTS:
                assert eps_t(maps, eps_t(maps, e)) == eps_t(maps, e)
                assert eps_s(maps, eps_s(maps, e)) == eps_s(maps, e)

    def test_images_in_paper_combination(self):
        # 0*1 + 0*eps_t(g) - i*eps_t(mu) + eps_t(nu) = nu - i*mu
        maps = build_structure(Variant.A)
        combo = eps_t(maps, NU) - eps_t(maps, MU).scale(I)
        assert combo == pv.TARGET_SUBALGEBRA[1]
        combo_s = eps_s(maps, NU) - eps_s(maps, MU).scale(I)
        assert combo_s == pv.TARGET_SUBALGEBRA[1]


class TestNumericMode:
    def test_eval_structure(self):
        maps = maps_eval(build_structure(Variant.A), GaussianRational(2))
        assert maps.delta[MU_].at(MU_, MU_) == Scalar(Fraction(1, 4))
        assert maps.counit[G_] == Scalar(Fraction(1, 2))

    def test_zero_parameter_rejected(self):
        with pytest.raises(ZeroParameter):
            maps_eval(build_structure(Variant.A), GaussianRational(0))

    def test_eval_accepts_fractions(self):
        maps = maps_eval(build_structure(Variant.A), Fraction(3, 5))
        assert maps.counit[MU_] == Scalar(Fraction(6, 5))
