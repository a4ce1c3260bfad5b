"""Numerically stable scalar functions shared by the learners."""

import numpy as np


def sigmoid(z: np.ndarray | float) -> np.ndarray:
    """Logistic function without overflow for large ``|z|``."""
    z = np.asarray(z, dtype=np.float64)
    flat = np.atleast_1d(z)
    out = np.empty_like(flat)
    positive = flat >= 0
    out[positive] = 1.0 / (1.0 + np.exp(-flat[positive]))
    exp_z = np.exp(flat[~positive])
    out[~positive] = exp_z / (1.0 + exp_z)
    return out.reshape(z.shape)


def log1pexp(z: np.ndarray) -> np.ndarray:
    """``log(1 + exp(z))`` computed stably."""
    z = np.asarray(z, dtype=np.float64)
    return np.logaddexp(0.0, z)


def cross_entropy_from_logits(logits: np.ndarray, y: np.ndarray) -> float:
    """Mean binary cross-entropy of labels ``y`` under ``sigmoid(logits)``.

    Uses ``log(1 + e^z) - y z`` which equals ``-[y log p + (1-y) log(1-p)]``.
    """
    return float(np.mean(log1pexp(logits) - y * logits))

