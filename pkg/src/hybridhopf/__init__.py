"""Exact symbolic verification of the weak Hopf algebra structures on the
hybrid numbers.

The hybrid numbers K = span{1, g, mu, nu} carry two weak Hopf algebra
structures whose comultiplication, counit, and antipode involve a nonzero
parameter b.  This package re-checks every defining axiom symbolically over
the exact field Q(i)(b), computes the target/source counital subalgebras and
the separable idempotent, and solves for the left and right integral spaces.
"""

from .scalar import BACKEND, BPolynomial, GaussianRational, Scalar
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    EvalPole,
    ParseError,
    UnsupportedVariant,
    ZeroParameter,
)
from .hybrid import BasisIndex, HybridElement
from .tensor import Tensor2, Tensor3, tprod2, tprod3
from .structure import StructureMaps, Variant, build_structure
from .checker import CheckReport, run_all, run_checks
from .integrals import IntegralSpace, integral_space
from .parser import parse_element

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BPolynomial",
    "BasisIndex",
    "CheckReport",
    "DimensionMismatch",
    "DivisionByZero",
    "EvalPole",
    "GaussianRational",
    "HybridElement",
    "IntegralSpace",
    "ParseError",
    "Scalar",
    "StructureMaps",
    "Tensor2",
    "Tensor3",
    "UnsupportedVariant",
    "Variant",
    "ZeroParameter",
    "build_structure",
    "integral_space",
    "parse_element",
    "run_all",
    "run_checks",
    "tprod2",
    "tprod3",
    "__version__",
]
