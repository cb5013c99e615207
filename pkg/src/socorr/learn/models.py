"""Logistic regression and one-hidden-layer MLP trained by full-batch descent.

Both models minimize mean binary cross-entropy plus (l2/2) * ||weights||^2
with the bias terms unpenalized. The loss/gradient functions are exposed
separately so gradients can be checked against finite differences.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from .validation import as_binary_labels, as_float_matrix, require_both_classes

DEFAULT_LEARNING_RATE = 0.1
DEFAULT_EPOCHS = 500
DEFAULT_L2 = 1e-4
DEFAULT_HIDDEN_UNITS = 64
DEFAULT_THRESHOLD = 0.5


def sigmoid(z: np.ndarray) -> np.ndarray:
    """Numerically stable logistic function."""
    return np.exp(-np.logaddexp(0.0, -z))


def logistic_loss_grad(
    weights: np.ndarray, bias: float, X: np.ndarray, y: np.ndarray, l2: float
) -> tuple[float, np.ndarray, float]:
    """Mean cross-entropy with l2 on weights; returns (loss, grad_w, grad_b)."""
    y01 = y.astype(np.float64)
    z = X @ weights + bias
    loss = float(np.mean(np.logaddexp(0.0, z) - y01 * z)) + 0.5 * l2 * float(weights @ weights)
    residual = (sigmoid(z) - y01) / X.shape[0]
    grad_w = X.T @ residual + l2 * weights
    grad_b = float(residual.sum())
    return loss, grad_w, grad_b


def mlp_param_sizes(n_features: int, hidden_units: int) -> tuple[int, int, int, int]:
    return (n_features * hidden_units, hidden_units, hidden_units, 1)


def pack_mlp_params(
    W1: np.ndarray, b1: np.ndarray, w2: np.ndarray, b2: float
) -> np.ndarray:
    return np.concatenate([W1.ravel(), b1, w2, [b2]])


def unpack_mlp_params(
    params: np.ndarray, n_features: int, hidden_units: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    sizes = mlp_param_sizes(n_features, hidden_units)
    if params.shape != (sum(sizes),):
        raise ValueError(f"expected {sum(sizes)} parameters, got {params.shape}")
    offset = 0
    W1 = params[offset : offset + sizes[0]].reshape(n_features, hidden_units)
    offset += sizes[0]
    b1 = params[offset : offset + sizes[1]]
    offset += sizes[1]
    w2 = params[offset : offset + sizes[2]]
    offset += sizes[2]
    return W1, b1, w2, float(params[offset])


def init_mlp_params(n_features: int, hidden_units: int, seed: int) -> np.ndarray:
    """Glorot-uniform weights, zero biases, from a seeded generator."""
    rng = np.random.default_rng(seed)
    limit_hidden = math.sqrt(6.0 / (n_features + hidden_units))
    limit_out = math.sqrt(6.0 / (hidden_units + 1))
    W1 = rng.uniform(-limit_hidden, limit_hidden, size=(n_features, hidden_units))
    w2 = rng.uniform(-limit_out, limit_out, size=hidden_units)
    return pack_mlp_params(W1, np.zeros(hidden_units), w2, 0.0)


def mlp_loss_grad(
    params: np.ndarray,
    n_features: int,
    hidden_units: int,
    X: np.ndarray,
    y: np.ndarray,
    l2: float,
) -> tuple[float, np.ndarray]:
    """Loss and flat gradient for the rectifier network."""
    W1, b1, w2, b2 = unpack_mlp_params(params, n_features, hidden_units)
    y01 = y.astype(np.float64)
    n = X.shape[0]
    pre = X @ W1 + b1
    hidden = np.maximum(pre, 0.0)
    z = hidden @ w2 + b2
    loss = float(np.mean(np.logaddexp(0.0, z) - y01 * z)) + 0.5 * l2 * (
        float((W1 * W1).sum()) + float(w2 @ w2)
    )
    residual = (sigmoid(z) - y01) / n
    grad_w2 = hidden.T @ residual + l2 * w2
    grad_b2 = float(residual.sum())
    d_hidden = np.outer(residual, w2) * (pre > 0)
    grad_W1 = X.T @ d_hidden + l2 * W1
    grad_b1 = d_hidden.sum(axis=0)
    return loss, pack_mlp_params(grad_W1, grad_b1, grad_w2, grad_b2)


class LogisticRegressionGD(BaseEstimator, ClassifierMixin):
    """Binary logistic regression fit by full-batch gradient descent.

    Deterministic for a given seed (initialization is all-zero; the seed is
    recorded for provenance). predict_proba returns the positive-class
    probability as a 1-D array.
    """

    def __init__(
        self,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        epochs: int = DEFAULT_EPOCHS,
        l2: float = DEFAULT_L2,
        seed: int = 0,
    ):
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed

    def fit(self, X, y) -> "LogisticRegressionGD":
        matrix = as_float_matrix(X)
        labels = as_binary_labels(y, matrix.shape[0])
        require_both_classes(labels)
        weights = np.zeros(matrix.shape[1])
        bias = 0.0
        history = []
        for _ in range(self.epochs):
            loss, grad_w, grad_b = logistic_loss_grad(weights, bias, matrix, labels, self.l2)
            history.append(loss)
            weights -= self.learning_rate * grad_w
            bias -= self.learning_rate * grad_b
        history.append(logistic_loss_grad(weights, bias, matrix, labels, self.l2)[0])
        self.weights_ = weights
        self.bias_ = bias
        self.loss_history_ = history
        self.n_features_in_ = matrix.shape[1]
        self.classes_ = np.array([False, True])
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "weights_"):
            raise NotFittedError("model is not fitted")

    def decision_function(self, X) -> np.ndarray:
        self._check_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        return matrix @ self.weights_ + self.bias_

    def predict_proba(self, X) -> np.ndarray:
        return sigmoid(self.decision_function(X))

    def predict(self, X, threshold: float = DEFAULT_THRESHOLD) -> np.ndarray:
        return self.predict_proba(X) >= threshold


class MlpClassifier(BaseEstimator, ClassifierMixin):
    """One-hidden-layer rectifier network with a sigmoid output."""

    def __init__(
        self,
        hidden_units: int = DEFAULT_HIDDEN_UNITS,
        learning_rate: float = DEFAULT_LEARNING_RATE,
        epochs: int = DEFAULT_EPOCHS,
        l2: float = DEFAULT_L2,
        seed: int = 0,
    ):
        self.hidden_units = hidden_units
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.l2 = l2
        self.seed = seed

    def fit(self, X, y) -> "MlpClassifier":
        if self.hidden_units < 1:
            raise ValueError("hidden_units must be at least 1")
        matrix = as_float_matrix(X)
        labels = as_binary_labels(y, matrix.shape[0])
        require_both_classes(labels)
        n_features = matrix.shape[1]
        params = init_mlp_params(n_features, self.hidden_units, self.seed)
        history = []
        for _ in range(self.epochs):
            loss, grad = mlp_loss_grad(
                params, n_features, self.hidden_units, matrix, labels, self.l2
            )
            history.append(loss)
            params -= self.learning_rate * grad
        history.append(
            mlp_loss_grad(params, n_features, self.hidden_units, matrix, labels, self.l2)[0]
        )
        W1, b1, w2, b2 = unpack_mlp_params(params, n_features, self.hidden_units)
        self.hidden_weights_ = W1
        self.hidden_bias_ = b1
        self.output_weights_ = w2
        self.output_bias_ = b2
        self.loss_history_ = history
        self.n_features_in_ = n_features
        self.classes_ = np.array([False, True])
        return self

    def _check_fitted(self) -> None:
        if not hasattr(self, "hidden_weights_"):
            raise NotFittedError("model is not fitted")

    def decision_function(self, X) -> np.ndarray:
        self._check_fitted()
        matrix = as_float_matrix(X, self.n_features_in_)
        hidden = np.maximum(matrix @ self.hidden_weights_ + self.hidden_bias_, 0.0)
        return hidden @ self.output_weights_ + self.output_bias_

    def predict_proba(self, X) -> np.ndarray:
        return sigmoid(self.decision_function(X))

    def predict(self, X, threshold: float = DEFAULT_THRESHOLD) -> np.ndarray:
        return self.predict_proba(X) >= threshold


def predict_proba(model, feature_vector) -> float:
    """Positive-class probability for a single feature vector."""
    return float(model.predict_proba(np.asarray(feature_vector).reshape(1, -1))[0])


def classify(model, feature_vector, threshold: float = DEFAULT_THRESHOLD) -> bool:
    """Thresholded prediction; probability at the threshold counts positive."""
    return predict_proba(model, feature_vector) >= threshold


def train_logreg(X, y, config: dict | None = None) -> LogisticRegressionGD:
    """Config-dict convenience wrapper around LogisticRegressionGD."""
    cfg = config or {}
    model = LogisticRegressionGD(
        learning_rate=cfg.get("learning_rate", DEFAULT_LEARNING_RATE),
        epochs=cfg.get("epochs", DEFAULT_EPOCHS),
        l2=cfg.get("l2", DEFAULT_L2),
        seed=cfg.get("seed", 0),
    )
    return model.fit(X, y)


def train_mlp(X, y, config: dict | None = None) -> MlpClassifier:
    """Config-dict convenience wrapper around MlpClassifier."""
    cfg = config or {}
    model = MlpClassifier(
        hidden_units=cfg.get("hidden_units", DEFAULT_HIDDEN_UNITS),
        learning_rate=cfg.get("learning_rate", DEFAULT_LEARNING_RATE),
        epochs=cfg.get("epochs", DEFAULT_EPOCHS),
        l2=cfg.get("l2", DEFAULT_L2),
        seed=cfg.get("seed", 0),
    )
    return model.fit(X, y)
