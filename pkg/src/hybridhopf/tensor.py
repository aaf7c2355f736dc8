"""K (x) K and K (x) K (x) K as dense 16- and 64-dimensional spaces.

Tensors are flat coefficient vectors over the product bases, index order
(i, j) -> 4*i + j and (i, j, k) -> 16*i + 4*j + k.  The tensor algebra is the
componentwise one: (a (x) b)(c (x) d) = ac (x) bd.  Linear maps are passed as
their four basis images, which covers delta (images in K (x) K), the counit
(images in the scalars), the antipode and identity (images in K) uniformly.
"""

from __future__ import annotations

from .hybrid import BASIS_ELEMENTS, BASIS_LABELS, TABLE_TERMS, HybridElement
from .errors import ZeroParameter
from .scalar import ZERO, GaussianRational, Scalar, scalar_is_negative


def _coerce16(coeffs):
    coeffs = tuple(c if isinstance(c, Scalar) else Scalar(c) for c in coeffs)
    if len(coeffs) != 16:
        raise ValueError(f"need 16 coefficients, got {len(coeffs)}")
    return coeffs


def _coerce64(coeffs):
    coeffs = tuple(c if isinstance(c, Scalar) else Scalar(c) for c in coeffs)
    if len(coeffs) != 64:
        raise ValueError(f"need 64 coefficients, got {len(coeffs)}")
    return coeffs


class _TensorBase:
    __slots__ = ("coeffs",)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def scale(self, factor):
        factor = factor if isinstance(factor, Scalar) else Scalar(factor)
        return type(self)([factor * c for c in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def eval(self, point: GaussianRational):
        if not point:
            raise ZeroParameter("the parameter b must be nonzero")
        return type(self)([Scalar(c.eval_at(point)) for c in self.coeffs])

    def conj(self):
        return type(self)([c.conj() for c in self.coeffs])

    def __repr__(self):
        return f"{type(self).__name__}<{self}>"


class Tensor2(_TensorBase):
    """Element of K (x) K."""

    __slots__ = ()

    def __init__(self, coeffs):
        self.coeffs = _coerce16(coeffs)

    @classmethod
    def zero(cls) -> "Tensor2":
        return cls([ZERO] * 16)

    @classmethod
    def from_terms(cls, terms) -> "Tensor2":
        """Build from (i, j, coefficient) triples; repeats accumulate."""
        acc = [ZERO] * 16
        for i, j, c in terms:
            idx = 4 * i + j
            acc[idx] = acc[idx] + (c if isinstance(c, Scalar) else Scalar(c))
        return cls(acc)

    def at(self, i: int, j: int) -> Scalar:
        return self.coeffs[4 * i + j]

    def terms(self):
        """Nonzero entries as (i, j, coefficient), in index order."""
        for idx, c in enumerate(self.coeffs):
            if c:
                yield idx >> 2, idx & 3, c

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            acc = [ZERO] * 16
            for i, j, ci in self.terms():
                for k, l, cj in other.terms():
                    c = ci * cj
                    for r, sr in TABLE_TERMS[i][k]:
                        for s, ss in TABLE_TERMS[j][l]:
                            idx = 4 * r + s
                            acc[idx] = acc[idx] + c if sr * ss > 0 else acc[idx] - c
            return Tensor2(acc)
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return _format_terms(
            (f"{BASIS_LABELS[i]}⊗{BASIS_LABELS[j]}", c) for i, j, c in self.terms()
        )


class Tensor3(_TensorBase):
    """Element of K (x) K (x) K."""

    __slots__ = ()

    def __init__(self, coeffs):
        self.coeffs = _coerce64(coeffs)

    @classmethod
    def zero(cls) -> "Tensor3":
        return cls([ZERO] * 64)

    @classmethod
    def from_terms(cls, terms) -> "Tensor3":
        acc = [ZERO] * 64
        for i, j, k, c in terms:
            idx = 16 * i + 4 * j + k
            acc[idx] = acc[idx] + (c if isinstance(c, Scalar) else Scalar(c))
        return cls(acc)

    def at(self, i: int, j: int, k: int) -> Scalar:
        return self.coeffs[16 * i + 4 * j + k]

    def terms(self):
        for idx, c in enumerate(self.coeffs):
            if c:
                yield idx >> 4, (idx >> 2) & 3, idx & 3, c

    def __mul__(self, other):
        if isinstance(other, Tensor3):
            acc = [ZERO] * 64
            for i, j, k, ci in self.terms():
                for p, q, r, cj in other.terms():
                    c = ci * cj
                    for x, sx in TABLE_TERMS[i][p]:
                        for y, sy in TABLE_TERMS[j][q]:
                            for z, sz in TABLE_TERMS[k][r]:
                                idx = 16 * x + 4 * y + z
                                if sx * sy * sz > 0:
                                    acc[idx] = acc[idx] + c
                                else:
                                    acc[idx] = acc[idx] - c
            return Tensor3(acc)
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return _format_terms(
            (
                f"{BASIS_LABELS[i]}⊗{BASIS_LABELS[j]}⊗{BASIS_LABELS[k]}",
                c,
            )
            for i, j, k, c in self.terms()
        )


def _format_terms(labelled) -> str:
    parts: list[str] = []
    for label, c in labelled:
        neg = scalar_is_negative(c)
        mag = -c if neg else c
        body = label if mag.is_one() else f"({mag}) * {label}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(parts) if parts else "0"


def tprod2(x: HybridElement, y: HybridElement) -> Tensor2:
    """The elementary tensor x (x) y."""
    acc = [ZERO] * 16
    for i, ci in enumerate(x.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(y.coeffs):
            if cj:
                acc[4 * i + j] = ci * cj
    return Tensor2(acc)


def tprod3(x: HybridElement, y: HybridElement, z: HybridElement) -> Tensor3:
    acc = [ZERO] * 64
    for i, ci in enumerate(x.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(y.coeffs):
            if not cj:
                continue
            cij = ci * cj
            for k, ck in enumerate(z.coeffs):
                if ck:
                    acc[16 * i + 4 * j + k] = cij * ck
    return Tensor3(acc)


def embed_left(t: Tensor2) -> Tensor3:
    """t (x) 1."""
    acc = [ZERO] * 64
    for i, j, c in t.terms():
        acc[16 * i + 4 * j + 0] = c
    return Tensor3(acc)


def embed_right(t: Tensor2) -> Tensor3:
    """1 (x) t."""
    acc = [ZERO] * 64
    for i, j, c in t.terms():
        acc[4 * i + j] = c
    return Tensor3(acc)


IDENTITY_IMAGES = BASIS_ELEMENTS


def _apply2(t: Tensor2, slot: int, images):
    sample = images[0]
    if isinstance(sample, Scalar):
        acc = [ZERO] * 4
        for i, j, c in t.terms():
            keep, hit = (j, i) if slot == 0 else (i, j)
            if images[hit]:
                acc[keep] = acc[keep] + c * images[hit]
        return HybridElement(acc)
    if isinstance(sample, HybridElement):
        acc = [ZERO] * 16
        for i, j, c in t.terms():
            hit = i if slot == 0 else j
            for k, ck in enumerate(images[hit].coeffs):
                if not ck:
                    continue
                idx = 4 * k + j if slot == 0 else 4 * i + k
                acc[idx] = acc[idx] + c * ck
        return Tensor2(acc)
    if isinstance(sample, Tensor2):
        acc = [ZERO] * 64
        for i, j, c in t.terms():
            hit = i if slot == 0 else j
            for k, l, ck in images[hit].terms():
                idx = 16 * k + 4 * l + j if slot == 0 else 16 * i + 4 * k + l
                acc[idx] = acc[idx] + c * ck
        return Tensor3(acc)
    raise TypeError(f"unsupported map images: {type(sample).__name__}")


def _apply3(t: Tensor3, slot: int, images):
    sample = images[0]
    if isinstance(sample, Scalar):
        acc = [ZERO] * 16
        for i, j, k, c in t.terms():
            pos = (i, j, k)
            hit = pos[slot]
            keep = [p for s, p in enumerate(pos) if s != slot]
            if images[hit]:
                idx = 4 * keep[0] + keep[1]
                acc[idx] = acc[idx] + c * images[hit]
        return Tensor2(acc)
    if isinstance(sample, HybridElement):
        acc = [ZERO] * 64
        for i, j, k, c in t.terms():
            pos = [i, j, k]
            hit = pos[slot]
            for m, cm in enumerate(images[hit].coeffs):
                if not cm:
                    continue
                pos[slot] = m
                idx = 16 * pos[0] + 4 * pos[1] + pos[2]
                acc[idx] = acc[idx] + c * cm
        return Tensor3(acc)
    raise TypeError(
        "tensor powers above 3 are never needed; only scalar- or K-valued "
        "maps may be applied to a Tensor3"
    )


def apply_left(images, t):
    """Apply the map with the given basis images in the leftmost slot."""
    if isinstance(t, Tensor2):
        return _apply2(t, 0, images)
    if isinstance(t, Tensor3):
        return _apply3(t, 0, images)
    raise TypeError(f"not a tensor: {type(t).__name__}")


def apply_right(images, t):
    if isinstance(t, Tensor2):
        return _apply2(t, 1, images)
    if isinstance(t, Tensor3):
        return _apply3(t, 2, images)
    raise TypeError(f"not a tensor: {type(t).__name__}")


def apply_middle(images, t):
    if isinstance(t, Tensor3):
        return _apply3(t, 1, images)
    raise TypeError("apply_middle needs a Tensor3")


def fold_mul2(t: Tensor2, left_images, right_images) -> HybridElement:
    """Sum of c * f(e_i) * g(e_j) over the terms of t: a Sweedler-style fold.

    With identity images in both slots this is the multiplication map m.
    """
    acc = HybridElement.zero()
    for i, j, c in t.terms():
        acc = acc + (left_images[i] * right_images[j]).scale(c)
    return acc


def fold_mul3(t: Tensor3, f_images, g_images, h_images) -> HybridElement:
    acc = HybridElement.zero()
    for i, j, k, c in t.terms():
        acc = acc + (f_images[i] * g_images[j] * h_images[k]).scale(c)
    return acc
