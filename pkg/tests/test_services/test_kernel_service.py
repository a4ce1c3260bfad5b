"""Tests for kernel evaluation and Gram matrices."""

import numpy as np
import pytest

from asdbench.exceptions import KernelError
from asdbench.models.kernel_model import (
    LinearKernel,
    PolynomialKernel,
    RbfKernel,
    SigmoidKernel,
    scale_gamma,
)
from asdbench.services.kernel_service import cross_kernel, gram_matrix, kernel_eval


RESOLVED_SPECS = [
    LinearKernel(),
    PolynomialKernel(degree=3, gamma=0.5, coef0=1.0),
    RbfKernel(gamma=0.7),
    SigmoidKernel(gamma=0.2, coef0=-0.5),
]


class TestKernelEval:
    """Test suite for kernel_eval."""

    def test_rbf_self_similarity(self):
        """Test k(x, x) = 1 for the Gaussian kernel."""
        x = np.array([0.3, -1.2, 4.0])

        assert kernel_eval(RbfKernel(gamma=2.0), x, x) == 1.0

    def test_linear_dot_product(self):
        """Test the linear kernel is the dot product."""
        assert kernel_eval(LinearKernel(), [1, 2], [3, 4]) == 11.0

    def test_polynomial_value(self):
        """Test (1 * 1 + 1)^2 = 4."""
        spec = PolynomialKernel(degree=2, gamma=1.0, coef0=1.0)

        assert kernel_eval(spec, [1, 0], [1, 1]) == 4.0

    def test_polynomial_degree_one_equals_linear(self):
        """Test degree 1, gamma 1, coef0 0 reduces to the dot product."""
        rng = np.random.default_rng(1)
        x, y = rng.normal(size=5), rng.normal(size=5)
        spec = PolynomialKernel(degree=1, gamma=1.0, coef0=0.0)

        assert kernel_eval(spec, x, y) == kernel_eval(LinearKernel(), x, y)

    @pytest.mark.parametrize("spec", RESOLVED_SPECS, ids=lambda s: s.kind)
    def test_symmetry(self, spec):
        """Test k(x, y) = k(y, x)."""
        rng = np.random.default_rng(5)
        for _ in range(20):
            x, y = rng.normal(size=4), rng.normal(size=4)
            assert kernel_eval(spec, x, y) == pytest.approx(kernel_eval(spec, y, x), abs=1e-12)

    def test_rbf_range(self):
        """Test 0 < k < 1 for distinct points."""
        rng = np.random.default_rng(9)
        spec = RbfKernel(gamma=0.1)
        for _ in range(20):
            value = kernel_eval(spec, rng.normal(size=3), rng.normal(size=3))
            assert 0.0 < value < 1.0

    def test_dimension_mismatch(self):
        """Test vectors of different lengths are rejected."""
        with pytest.raises(KernelError, match="dimension mismatch"):
            kernel_eval(LinearKernel(), [1, 2], [1, 2, 3])

    def test_non_finite_input(self):
        """Test NaN input is rejected."""
        with pytest.raises(KernelError, match="NaN"):
            kernel_eval(LinearKernel(), [np.nan, 1], [1, 1])

    def test_unresolved_gamma(self):
        """Test a spec without gamma must be resolved first."""
        with pytest.raises(KernelError, match="resolve"):
            kernel_eval(RbfKernel(), [1.0], [2.0])


class TestGramMatrix:
    """Test suite for gram_matrix and cross_kernel."""

    def test_linear_identity(self):
        """Test the linear Gram matrix of the unit vectors."""
        gram = gram_matrix(LinearKernel(), np.eye(2))

        assert gram.tolist() == [[1.0, 0.0], [0.0, 1.0]]

    @pytest.mark.parametrize("spec", RESOLVED_SPECS, ids=lambda s: s.kind)
    def test_exactly_symmetric(self, spec):
        """Test G equals its transpose bitwise."""
        X = np.random.default_rng(4).normal(size=(15, 3))

        gram = gram_matrix(spec, X)

        assert np.array_equal(gram, gram.T)

    def test_rbf_unit_diagonal(self):
        """Test the Gaussian diagonal is exactly 1."""
        gram = gram_matrix(RbfKernel(gamma=3.0), np.random.default_rng(0).normal(size=(10, 4)))

        assert np.all(np.diag(gram) == 1.0)

    @pytest.mark.parametrize("spec", [LinearKernel(), RbfKernel(gamma=0.5)], ids=["linear", "rbf"])
    def test_positive_semidefinite(self, spec):
        """Test the smallest eigenvalue is not meaningfully negative."""
        X = np.random.default_rng(8).normal(size=(20, 4))

        eigenvalues = np.linalg.eigvalsh(gram_matrix(spec, X))

        assert eigenvalues.min() >= -1e-8

    @pytest.mark.parametrize("spec", RESOLVED_SPECS, ids=lambda s: s.kind)
    def test_entries_match_kernel_eval(self, spec):
        """Test every entry equals the pairwise evaluation."""
        X = np.random.default_rng(6).normal(size=(6, 3))

        gram = gram_matrix(spec, X)

        for i in range(6):
            for j in range(6):
                assert gram[i, j] == pytest.approx(kernel_eval(spec, X[i], X[j]), rel=1e-10, abs=1e-12)

    def test_cross_kernel_shape(self):
        """Test the cross kernel is len(A) x len(B)."""
        A = np.ones((3, 2))
        B = np.zeros((5, 2))

        assert cross_kernel(LinearKernel(), A, B).shape == (3, 5)

    def test_empty_input(self):
        """Test a Gram matrix needs a row."""
        with pytest.raises(KernelError, match="at least one row"):
            gram_matrix(LinearKernel(), np.zeros((0, 2)))


class TestResolvedDefaults:
    """Test suite for data-dependent kernel defaults."""

    def test_scale_gamma(self):
        """Test gamma = 1 / (d * mean variance)."""
        X = np.array([[0.0, 0.0], [2.0, 4.0]])

        assert scale_gamma(X) == pytest.approx(1.0 / (2 * 2.5))

    def test_scale_gamma_constant_data(self):
        """Test constant data falls back to 1 / d."""
        assert scale_gamma(np.ones((4, 5))) == pytest.approx(0.2)

    def test_resolved_keeps_explicit_gamma(self):
        """Test an explicit gamma is not replaced."""
        spec = PolynomialKernel(gamma=0.3)

        assert spec.resolved(np.ones((2, 10))) is spec

    def test_polynomial_and_sigmoid_default_to_inverse_dimension(self):
        """Test unresolved polynomial and sigmoid kernels take gamma = 1 / d."""
        X = np.ones((3, 4))

        assert PolynomialKernel().resolved(X).gamma == 0.25
        assert SigmoidKernel().resolved(X).gamma == 0.25
