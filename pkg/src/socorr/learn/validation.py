"""Input validation helpers for the estimator API."""

from __future__ import annotations

import numpy as np


def as_float_matrix(X, n_features: int | None = None) -> np.ndarray:
    """Coerce to a 2-D float64 array, optionally checking the width."""
    matrix = np.asarray(X, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D feature matrix, got ndim={matrix.ndim}")
    if not np.isfinite(matrix).all():
        raise ValueError("feature matrix contains NaN or infinity")
    if n_features is not None and matrix.shape[1] != n_features:
        raise ValueError(
            f"feature dimension mismatch: expected {n_features}, got {matrix.shape[1]}"
        )
    return matrix


def as_binary_labels(y, n_rows: int) -> np.ndarray:
    """Coerce labels to a boolean vector of the given length."""
    labels = np.asarray(y)
    if labels.ndim != 1:
        raise ValueError("labels must be one-dimensional")
    if labels.shape[0] != n_rows:
        raise ValueError(f"got {labels.shape[0]} labels for {n_rows} rows")
    if labels.dtype != np.bool_:
        unique = np.unique(labels)
        if not np.isin(unique, (0, 1)).all():
            raise ValueError("labels must be boolean or 0/1")
        labels = labels.astype(bool)
    return labels


def require_both_classes(labels: np.ndarray) -> None:
    if labels.all() or not labels.any():
        raise ValueError("training data must contain both classes")
