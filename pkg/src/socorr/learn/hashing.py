"""Signed feature hashing of word n-grams into a fixed-dimension vector."""

from __future__ import annotations

import hashlib
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ..textfeat import word_tokens

DEFAULT_TEXT_DIM = 256
DEFAULT_NGRAM_ORDERS: tuple[int, ...] = (1, 2)
_INDEX_KEY = b"ngram-index"
_SIGN_KEY = b"ngram-sign"


def _validate(dim: int, ngram_orders: Sequence[int]) -> tuple[int, ...]:
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"hash dimension must be a power of two >= 2, got {dim}")
    orders = tuple(ngram_orders)
    if not orders or not set(orders) <= {1, 2}:
        raise ValueError(f"ngram orders must be a non-empty subset of {{1, 2}}, got {orders}")
    return orders


def _hash(data: bytes, key: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(data, digest_size=8, key=key).digest(), "big")


def hashed_text_vector(
    text: str,
    dim: int = DEFAULT_TEXT_DIM,
    ngram_orders: Sequence[int] = DEFAULT_NGRAM_ORDERS,
) -> np.ndarray:
    """L2-normalized signed hash counts of case-folded word n-grams.

    Hashing is keyed (process-independent); empty text maps to the zero
    vector. dim must be a power of two.
    """
    orders = _validate(dim, ngram_orders)
    tokens = [t.casefold() for t in word_tokens(text)]
    vector = np.zeros(dim, dtype=np.float64)
    for order in orders:
        for i in range(len(tokens) - order + 1):
            gram = f"{order}:" + "\x1f".join(tokens[i : i + order])
            data = gram.encode("utf-8")
            index = _hash(data, _INDEX_KEY) & (dim - 1)
            sign = 1.0 if _hash(data, _SIGN_KEY) & 1 else -1.0
            vector[index] += sign
    norm = np.linalg.norm(vector)
    if norm > 0:
        vector /= norm
    return vector


def hash_texts(
    texts: Sequence[str],
    dim: int = DEFAULT_TEXT_DIM,
    ngram_orders: Sequence[int] = DEFAULT_NGRAM_ORDERS,
) -> np.ndarray:
    """Stack hashed vectors for a batch of texts."""
    _validate(dim, ngram_orders)
    if not texts:
        return np.zeros((0, dim), dtype=np.float64)
    return np.vstack([hashed_text_vector(t, dim, ngram_orders) for t in texts])


class HashingTextVectorizer(BaseEstimator, TransformerMixin):
    """Stateless transformer wrapping hashed_text_vector."""

    def __init__(
        self,
        dim: int = DEFAULT_TEXT_DIM,
        ngram_orders: Sequence[int] = DEFAULT_NGRAM_ORDERS,
    ):
        self.dim = dim
        self.ngram_orders = ngram_orders

    def fit(self, X: Sequence[str], y=None) -> "HashingTextVectorizer":
        _validate(self.dim, self.ngram_orders)
        return self

    def transform(self, X: Sequence[str]) -> np.ndarray:
        return hash_texts(list(X), self.dim, self.ngram_orders)
