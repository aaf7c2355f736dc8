"""The two weak Hopf structure variants on K.

Variant A is the primary structure; variant B is the second one, whose
tables happen to be A's with i replaced by -i throughout (stored literally
here, the relation is asserted in tests rather than assumed).  The counital
maps eps_t and eps_s are *derived* from Delta(1) and the counit by their
defining formulas, eps_t(h) = eps(1_(1) h) 1_(2) and
eps_s(h) = eps(h 1_(2)) 1_(1); the closed forms they should match serve as
test oracles, so a transcription slip in either place gets caught instead of
inherited.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ZeroParameter
from .hybrid import BasisIndex, HybridElement
from .scalar import B, GaussianRational, HALF, I, ONE, Scalar, TWO, ZERO
from .tensor import Tensor2

_IHALF = I * HALF
_IB = I * B
_B2 = B * B
_INV_2B = HALF / B
_I_2B = _IHALF / B


class Variant(Enum):
    A = "a"
    B = "b"


@dataclass(frozen=True)
class StructureMaps:
    """Basis images of Delta, the counit, and the antipode for one variant."""

    variant: Variant
    delta: tuple
    counit: tuple
    antipode: tuple


_ONE_ = BasisIndex.ONE
_G_ = BasisIndex.G
_MU_ = BasisIndex.MU
_NU_ = BasisIndex.NU


def _element(one=None, g=None, mu=None, nu=None) -> HybridElement:
    vals = [one, g, mu, nu]
    return HybridElement([ZERO if v is None else v for v in vals])


def _variant_a() -> StructureMaps:
    delta_one = Tensor2.from_terms(
        [
            (_ONE_, _ONE_, HALF),
            (_MU_, _MU_, -HALF),
            (_NU_, _MU_, -_IHALF),
            (_MU_, _NU_, -_IHALF),
            (_NU_, _NU_, HALF),
        ]
    )
    delta_g = Tensor2.from_terms(
        [
            (_MU_, _ONE_, -HALF),
            (_NU_, _ONE_, -_IHALF),
            (_G_, _G_, B),
            (_MU_, _G_, B),
            (_NU_, _G_, _IB),
            (_ONE_, _MU_, -HALF),
            (_G_, _MU_, B),
            (_MU_, _MU_, B),
            (_NU_, _MU_, _IB),
            (_ONE_, _NU_, -_IHALF),
            (_G_, _NU_, _IB),
            (_MU_, _NU_, _IB),
            (_NU_, _NU_, -B),
        ]
    )
    delta_mu = Tensor2.from_terms([(_MU_, _MU_, _INV_2B)])
    delta_nu = Tensor2.from_terms(
        [
            (_MU_, _ONE_, -_IHALF),
            (_NU_, _ONE_, HALF),
            (_ONE_, _MU_, -_IHALF),
            (_MU_, _MU_, _I_2B),
            (_ONE_, _NU_, HALF),
        ]
    )
    counit = (TWO, ONE / B, TWO * B, TWO * _IB)
    antipode = (
        HybridElement.basis(_ONE_),
        _element(mu=_INV_2B / B - ONE, nu=-I),
        _element(g=TWO * _B2, mu=TWO * _B2, nu=TWO * I * _B2),
        _element(g=TWO * I * _B2, mu=TWO * I * _B2 - I, nu=ONE - TWO * _B2),
    )
    return StructureMaps(
        Variant.A, (delta_one, delta_g, delta_mu, delta_nu), counit, antipode
    )


def _variant_b() -> StructureMaps:
    delta_one = Tensor2.from_terms(
        [
            (_ONE_, _ONE_, HALF),
            (_MU_, _MU_, -HALF),
            (_NU_, _MU_, _IHALF),
            (_MU_, _NU_, _IHALF),
            (_NU_, _NU_, HALF),
        ]
    )
    delta_g = Tensor2.from_terms(
        [
            (_MU_, _ONE_, -HALF),
            (_NU_, _ONE_, _IHALF),
            (_G_, _G_, B),
            (_MU_, _G_, B),
            (_NU_, _G_, -_IB),
            (_ONE_, _MU_, -HALF),
            (_G_, _MU_, B),
            (_MU_, _MU_, B),
            (_NU_, _MU_, -_IB),
            (_ONE_, _NU_, _IHALF),
            (_G_, _NU_, -_IB),
            (_MU_, _NU_, -_IB),
            (_NU_, _NU_, -B),
        ]
    )
    delta_mu = Tensor2.from_terms([(_MU_, _MU_, _INV_2B)])
    delta_nu = Tensor2.from_terms(
        [
            (_MU_, _ONE_, _IHALF),
            (_NU_, _ONE_, HALF),
            (_ONE_, _MU_, _IHALF),
            (_MU_, _MU_, -_I_2B),
            (_ONE_, _NU_, HALF),
        ]
    )
    counit = (TWO, ONE / B, TWO * B, -TWO * _IB)
    antipode = (
        HybridElement.basis(_ONE_),
        _element(mu=_INV_2B / B - ONE, nu=I),
        _element(g=TWO * _B2, mu=TWO * _B2, nu=-TWO * I * _B2),
        _element(g=-TWO * I * _B2, mu=I - TWO * I * _B2, nu=ONE - TWO * _B2),
    )
    return StructureMaps(
        Variant.B, (delta_one, delta_g, delta_mu, delta_nu), counit, antipode
    )


def build_structure(variant: Variant) -> StructureMaps:
    """The exact symbolic tables for the chosen variant."""
    return _variant_a() if variant is Variant.A else _variant_b()


def delta_ext(maps: StructureMaps, x: HybridElement) -> Tensor2:
    """Linear extension of Delta."""
    acc = Tensor2.zero()
    for i, c in enumerate(x.coeffs):
        if c:
            acc = acc + maps.delta[i].scale(c)
    return acc


def counit_ext(maps: StructureMaps, x: HybridElement) -> Scalar:
    acc = ZERO
    for i, c in enumerate(x.coeffs):
        if c:
            acc = acc + c * maps.counit[i]
    return acc


def antipode_ext(maps: StructureMaps, x: HybridElement) -> HybridElement:
    acc = HybridElement.zero()
    for i, c in enumerate(x.coeffs):
        if c:
            acc = acc + maps.antipode[i].scale(c)
    return acc


def eps_t(maps: StructureMaps, x: HybridElement) -> HybridElement:
    """Target counital map, computed as eps(1_(1) x) 1_(2) over Delta(1)."""
    acc = [ZERO] * 4
    for p, q, c in maps.delta[BasisIndex.ONE].terms():
        val = c * counit_ext(maps, HybridElement.basis(p) * x)
        if val:
            acc[q] = acc[q] + val
    return HybridElement(acc)


def eps_s(maps: StructureMaps, x: HybridElement) -> HybridElement:
    """Source counital map, computed as 1_(1) eps(x 1_(2)) over Delta(1)."""
    acc = [ZERO] * 4
    for p, q, c in maps.delta[BasisIndex.ONE].terms():
        val = c * counit_ext(maps, x * HybridElement.basis(q))
        if val:
            acc[p] = acc[p] + val
    return HybridElement(acc)


def eps_t_images(maps: StructureMaps) -> tuple:
    return tuple(eps_t(maps, e) for e in map(HybridElement.basis, range(4)))


def eps_s_images(maps: StructureMaps) -> tuple:
    return tuple(eps_s(maps, e) for e in map(HybridElement.basis, range(4)))


def maps_eval(maps: StructureMaps, point: GaussianRational) -> StructureMaps:
    """Numeric-mode tables: substitute a nonzero Gaussian rational for b."""
    if not isinstance(point, GaussianRational):
        point = GaussianRational(Fraction(point))
    if not point:
        raise ZeroParameter("the parameter b must be nonzero")
    return StructureMaps(
        maps.variant,
        tuple(t.eval(point) for t in maps.delta),
        tuple(Scalar(c.eval_at(point)) for c in maps.counit),
        tuple(e.eval(point) for e in maps.antipode),
    )


def maps_conj(maps: StructureMaps) -> StructureMaps:
    """The tables with i replaced by -i everywhere (variant label kept)."""
    return StructureMaps(
        maps.variant,
        tuple(t.conj() for t in maps.delta),
        tuple(c.conj() for c in maps.counit),
        tuple(e.conj() for e in maps.antipode),
    )
