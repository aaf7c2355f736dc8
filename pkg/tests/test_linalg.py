"""Exact linear algebra: row reduction, kernels, span comparison."""

import random

import pytest

from conftest import random_poly_scalar, random_scalar
from hybridhopf.errors import DimensionMismatch
from hybridhopf.linalg import (
    Matrix,
    in_row_space,
    kernel_basis,
    matvec,
    rank,
    rref,
    span_equal,
)
from hybridhopf.scalar import B, ONE, Scalar, ZERO
from hybridhopf.structure import Variant, build_structure, eps_t
from hybridhopf.hybrid import HybridElement

import paper_values as pv


class TestRref:
    def test_scaling_row(self):
        m = Matrix(2, 2, [2, 0, 0, 0])
        assert rref(m) == Matrix(2, 2, [1, 0, 0, 0])

    def test_identity_fixed(self):
        eye = Matrix(3, 3, [1, 0, 0, 0, 1, 0, 0, 0, 1])
        assert rref(eye) == eye

    def test_dependent_symbolic_rows(self):
        # second row is b times the first
        m = Matrix.from_rows([[B, ONE], [B * B, B]])
        expected = Matrix.from_rows([[ONE, ONE / B], [ZERO, ZERO]])
        assert rref(m) == expected

    def test_idempotent(self):
        rng = random.Random(11)
        for _ in range(10):
            rows, cols = rng.randint(1, 3), rng.randint(1, 4)
            m = Matrix(rows, cols, [random_scalar(rng, 1, 3) for _ in range(rows * cols)])
            r = rref(m)
            assert rref(r) == r


class TestKernel:
    def test_zero_matrix(self):
        basis = kernel_basis(Matrix(2, 4, [0] * 8))
        assert len(basis) == 4
        for k, v in enumerate(basis):
            assert all((c == ONE) == (j == k) for j, c in enumerate(v))

    def test_identity_has_trivial_kernel(self):
        eye = Matrix(4, 4, [1 if i == j else 0 for i in range(4) for j in range(4)])
        assert kernel_basis(eye) == []

    def test_paper_left_system_kernel_is_two_dimensional(self):
        from hybridhopf.integrals import paper_integral_system

        system = paper_integral_system("left", Variant.A)
        assert system.rows == 7 and system.cols == 4
        assert len(kernel_basis(system)) == 2

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(12)
        for _ in range(15):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            m = Matrix(
                rows, cols, [random_scalar(rng, 1, 3) if rng.random() < 0.7 else ZERO for _ in range(rows * cols)]
            )
            for v in kernel_basis(m):
                assert all(not c for c in matvec(m, v))

    def test_rank_nullity(self):
        rng = random.Random(13)
        for _ in range(15):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            m = Matrix(rows, cols, [random_poly_scalar(rng) for _ in range(rows * cols)])
            assert rank(m) + len(kernel_basis(m)) == cols


class TestSpanEqual:
    def test_scaling_does_not_matter(self):
        e1 = (ONE, ZERO)
        assert span_equal([e1], [(Scalar(2), ZERO)])

    def test_distinct_axes(self):
        assert not span_equal([(ONE, ZERO)], [(ZERO, ONE)])

    def test_counital_images_span_the_target_subalgebra(self):
        maps = build_structure(Variant.A)
        target = [v.coeffs for v in pv.TARGET_SUBALGEBRA]
        images = [
            eps_t(maps, HybridElement.basis(1)).coeffs,
            eps_t(maps, HybridElement.basis(2)).coeffs,
        ]
        assert span_equal(target, images)

    def test_length_mismatch_raises(self):
        with pytest.raises(DimensionMismatch):
            span_equal([(ONE, ZERO)], [(ONE, ZERO, ZERO)])

    def test_empty_spans(self):
        assert span_equal([], [])
        assert span_equal([(ZERO, ZERO)], [])


def test_in_row_space():
    m = Matrix.from_rows([[ONE, ZERO, ONE], [ZERO, ONE, ZERO]])
    assert in_row_space(m, (ONE, ONE, ONE))
    assert not in_row_space(m, (ZERO, ZERO, ONE))
