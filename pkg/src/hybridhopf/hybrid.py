"""The hybrid-number algebra K = span{1, g, mu, nu}.

The defining relations are g^2 = -1, mu^2 = 0, nu^2 = 1 and
g*nu = -nu*g = mu + g; the full 4x4 product table below is stored literally
and is what all arithmetic uses.  A test re-derives it from the relations.
The basis order (1, g, mu, nu) is fixed globally: vectors, tensor indexing,
and report output all depend on it.
"""

from __future__ import annotations

from enum import IntEnum

from .errors import ZeroParameter
from .scalar import ONE, ZERO, GaussianRational, Scalar, scalar_is_negative
from ._display import as_factor


class BasisIndex(IntEnum):
    ONE = 0
    G = 1
    MU = 2
    NU = 3


BASIS_LABELS = ("1", "g", "mu", "nu")


def _coerce_coeff(value):
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


class HybridElement:
    """A hybrid number with Q(i)(b) coefficients over (1, g, mu, nu)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_coerce_coeff(c) for c in coeffs)
        if len(coeffs) != 4:
            raise ValueError(f"need 4 coefficients, got {len(coeffs)}")
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "HybridElement":
        return _ZERO_ELEMENT

    @classmethod
    def basis(cls, index: int) -> "HybridElement":
        return BASIS_ELEMENTS[index]

    def coeff(self, index: int) -> Scalar:
        return self.coeffs[index]

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, HybridElement):
            return NotImplemented
        return HybridElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, HybridElement):
            return NotImplemented
        return HybridElement([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return HybridElement([-c for c in self.coeffs])

    def scale(self, factor) -> "HybridElement":
        factor = _coerce_coeff(factor)
        return HybridElement([factor * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HybridElement):
            acc = [ZERO, ZERO, ZERO, ZERO]
            for i, ci in enumerate(self.coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(other.coeffs):
                    if not cj:
                        continue
                    c = ci * cj
                    for k, sign in TABLE_TERMS[i][j]:
                        acc[k] = acc[k] + c if sign > 0 else acc[k] - c
            return HybridElement(acc)
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def eval(self, point: GaussianRational) -> "HybridElement":
        """Substitute b := point in every coefficient (point must be nonzero)."""
        if not point:
            raise ZeroParameter("the parameter b must be nonzero")
        return HybridElement([Scalar(c.eval_at(point)) for c in self.coeffs])

    def conj(self) -> "HybridElement":
        return HybridElement([c.conj() for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, HybridElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts: list[str] = []
        for idx, c in enumerate(self.coeffs):
            if not c:
                continue
            if idx == BasisIndex.ONE:
                # always the first part; printed raw, its internal +/- terms
                # simply become further terms of the element expression
                parts.append(str(c))
                continue
            neg = scalar_is_negative(c)
            mag = -c if neg else c
            if mag.is_one():
                body = BASIS_LABELS[idx]
            else:
                body = f"{as_factor(str(mag))}*{BASIS_LABELS[idx]}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{' - ' if neg else ' + '}{body}")
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"HybridElement<{self}>"


_ZERO_ELEMENT = HybridElement([ZERO, ZERO, ZERO, ZERO])
BASIS_ELEMENTS = tuple(
    HybridElement([ONE if k == i else ZERO for k in range(4)]) for i in range(4)
)


def _el(one=0, g=0, mu=0, nu=0) -> HybridElement:
    return HybridElement([one, g, mu, nu])


# Product table, rows indexed by the left factor: row g, column nu holds g*nu.
MUL_TABLE = (
    (_el(one=1), _el(g=1), _el(mu=1), _el(nu=1)),
    (_el(g=1), _el(one=-1), _el(one=1, nu=-1), _el(g=1, mu=1)),
    (_el(mu=1), _el(one=1, nu=1), _el(), _el(mu=-1)),
    (_el(nu=1), _el(g=-1, mu=-1), _el(mu=1), _el(one=1)),
)


def _table_terms():
    terms = []
    for row in MUL_TABLE:
        row_terms = []
        for entry in row:
            cell = []
            for k, c in enumerate(entry.coeffs):
                if not c:
                    continue
                if c == ONE:
                    cell.append((k, 1))
                elif c == -ONE:
                    cell.append((k, -1))
                else:  # pragma: no cover - the table only has unit entries
                    raise AssertionError("non-unit structure constant")
            row_terms.append(tuple(cell))
        terms.append(tuple(row_terms))
    return tuple(terms)


# Sparse (index, sign) view of MUL_TABLE used by the multiplication loops.
TABLE_TERMS = _table_terms()
