import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hybridhopf.checker import run_checks
from hybridhopf.hybrid import HybridElement
from hybridhopf.scalar import BPolynomial, GaussianRational, Scalar
from hybridhopf.structure import Variant, build_structure


@pytest.fixture(scope="session")
def maps_a():
    return build_structure(Variant.A)


@pytest.fixture(scope="session")
def maps_b():
    return build_structure(Variant.B)


@pytest.fixture(scope="session")
def reports_a(maps_a):
    return run_checks(maps_a)


@pytest.fixture(scope="session")
def reports_b(maps_b):
    return run_checks(maps_b)


def random_gaussian(rng: random.Random, span: int = 6) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-span, span), rng.randint(1, span)),
        Fraction(rng.randint(-span, span), rng.randint(1, span)),
    )


def random_poly(rng: random.Random, max_degree: int = 2, span: int = 6) -> BPolynomial:
    return BPolynomial(
        [random_gaussian(rng, span) for _ in range(rng.randint(0, max_degree + 1))]
    )


def random_nonzero_poly(rng: random.Random, max_degree: int = 2, span: int = 6) -> BPolynomial:
    while True:
        p = random_poly(rng, max_degree, span)
        if p:
            return p


def random_scalar(rng: random.Random, max_degree: int = 2, span: int = 6) -> Scalar:
    return Scalar(random_poly(rng, max_degree, span), random_nonzero_poly(rng, max_degree, span))


def random_poly_scalar(rng: random.Random, max_degree: int = 2, span: int = 6) -> Scalar:
    """A polynomial entry (denominator 1) of degree <= max_degree."""
    return Scalar(random_poly(rng, max_degree, span))


def random_element(rng: random.Random, max_degree: int = 2, span: int = 4) -> HybridElement:
    return HybridElement([random_scalar(rng, max_degree, span) for _ in range(4)])
