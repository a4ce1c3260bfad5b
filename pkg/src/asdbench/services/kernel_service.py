"""Kernel evaluation and Gram matrices for the four SVM kernels.

Kernel specs must be resolved (``gamma`` set) before evaluation; use
``spec.resolved(X)`` on the training matrix.
"""

import numpy as np

from asdbench.exceptions import KernelError
from asdbench.models.kernel_model import (
    KernelSpec,
    LinearKernel,
    PolynomialKernel,
    RbfKernel,
    SigmoidKernel,
)


def _as_matrix(X: np.ndarray, what: str) -> np.ndarray:
    matrix = np.asarray(X, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix[np.newaxis, :]
    if matrix.ndim != 2:
        raise KernelError(f"{what} must be 1-D or 2-D, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise KernelError(f"{what} contains NaN or infinite values")
    return matrix


def _check_resolved(spec: KernelSpec) -> None:
    if not spec.is_resolved:
        raise KernelError(f"{spec.label} kernel has no gamma; resolve it on the training data")


def _from_inner(spec: KernelSpec, inner: np.ndarray) -> np.ndarray:
    match spec:
        case LinearKernel():
            return inner
        case PolynomialKernel():
            return (spec.gamma * inner + spec.coef0) ** spec.degree
        case SigmoidKernel():
            return np.tanh(spec.gamma * inner + spec.coef0)
    raise AssertionError(spec)


def cross_kernel(spec: KernelSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """``len(A) x len(B)`` matrix of ``k(a_i, b_j)``.

    Raises:
        KernelError: Dimension mismatch, non-finite input or output, or an
            unresolved spec.
    """
    _check_resolved(spec)
    A = _as_matrix(A, "left operand")
    B = _as_matrix(B, "right operand")
    if A.shape[1] != B.shape[1]:
        raise KernelError(f"dimension mismatch: {A.shape[1]} vs {B.shape[1]}")

    if isinstance(spec, RbfKernel):
        sq_a = np.einsum("ij,ij->i", A, A)[:, np.newaxis]
        sq_b = np.einsum("ij,ij->i", B, B)[np.newaxis, :]
        # rounding can push tiny distances below zero
        distances = np.maximum(sq_a + sq_b - 2.0 * (A @ B.T), 0.0)
        result = np.exp(-spec.gamma * distances)
    else:
        result = _from_inner(spec, A @ B.T)

    if not np.all(np.isfinite(result)):
        raise KernelError(f"{spec.label} kernel produced non-finite values")
    return result


def kernel_eval(spec: KernelSpec, x: np.ndarray, y: np.ndarray) -> float:
    """``k(x, y)`` for two vectors of equal length.

    Raises:
        KernelError: Dimension mismatch or non-finite input.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.shape != y.shape:
        raise KernelError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
    _check_resolved(spec)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise KernelError("kernel input contains NaN or infinite values")

    if isinstance(spec, RbfKernel):
        diff = x - y
        value = float(np.exp(-spec.gamma * float(diff @ diff)))
    else:
        value = float(_from_inner(spec, np.float64(x @ y)))
    if not np.isfinite(value):
        raise KernelError(f"{spec.label} kernel produced a non-finite value")
    return value


def gram_matrix(spec: KernelSpec, X: np.ndarray) -> np.ndarray:
    """Symmetric ``n x n`` kernel matrix of the rows of ``X``.

    The upper triangle is computed and mirrored, so ``G == G.T`` exactly;
    the RBF diagonal is exactly 1.

    Raises:
        KernelError: Empty input, non-finite input or entries.
    """
    X = _as_matrix(X, "data matrix")
    if X.shape[0] == 0:
        raise KernelError("Gram matrix needs at least one row")
    full = cross_kernel(spec, X, X)
    upper = np.triu(full)
    gram = upper + np.triu(full, k=1).T
    if isinstance(spec, RbfKernel):
        np.fill_diagonal(gram, 1.0)
    return gram
