"""Tweet/reply pair classifier used to fill missing counter labels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..corpus import Corpus
from .hashing import DEFAULT_NGRAM_ORDERS, DEFAULT_TEXT_DIM, hash_texts
from .models import DEFAULT_THRESHOLD, LogisticRegressionGD, train_logreg

Pair = tuple[str, str, bool]


def pair_design_matrix(
    tweet_texts: Sequence[str],
    reply_texts: Sequence[str],
    dim: int = DEFAULT_TEXT_DIM,
    ngram_orders: Sequence[int] = DEFAULT_NGRAM_ORDERS,
) -> np.ndarray:
    """Hashed reply block concatenated with the hashed parent-tweet block."""
    if len(tweet_texts) != len(reply_texts):
        raise ValueError("tweet and reply text lists must align")
    return np.hstack(
        [
            hash_texts(reply_texts, dim, ngram_orders),
            hash_texts(tweet_texts, dim, ngram_orders),
        ]
    )


@dataclass
class PairClassifier:
    model: LogisticRegressionGD
    text_dim: int
    ngram_orders: tuple[int, ...]

    def predict_proba(
        self, tweet_texts: Sequence[str], reply_texts: Sequence[str]
    ) -> np.ndarray:
        X = pair_design_matrix(tweet_texts, reply_texts, self.text_dim, self.ngram_orders)
        return self.model.predict_proba(X)

    def classify(
        self, tweet_text: str, reply_text: str, threshold: float = DEFAULT_THRESHOLD
    ) -> bool:
        return bool(self.predict_proba([tweet_text], [reply_text])[0] >= threshold)


def train_pair_classifier(
    pairs: Sequence[Pair],
    config: dict | None = None,
    dim: int = DEFAULT_TEXT_DIM,
    ngram_orders: Sequence[int] = DEFAULT_NGRAM_ORDERS,
) -> PairClassifier:
    """Fit the logistic pair model on (tweet_text, reply_text, label) triples."""
    if not pairs:
        raise ValueError("no labeled pairs to train on")
    tweets = [p[0] for p in pairs]
    replies = [p[1] for p in pairs]
    labels = np.asarray([p[2] for p in pairs], dtype=bool)
    X = pair_design_matrix(tweets, replies, dim, ngram_orders)
    model = train_logreg(X, labels, config)
    return PairClassifier(model, dim, tuple(ngram_orders))


def labeled_pairs(corpus: Corpus) -> tuple[list[str], list[Pair]]:
    """Collect (tweet_text, reply_text, label) triples and their reply ids."""
    ids: list[str] = []
    pairs: list[Pair] = []
    for tweet in corpus.tweets:
        for reply in tweet.replies:
            if reply.counter_label is not None:
                ids.append(reply.id)
                pairs.append((tweet.text, reply.text, reply.counter_label))
    return ids, pairs
