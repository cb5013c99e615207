"""Feature manifests, standardization, and the RQ1/RQ2 dataset builders."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from ..corpus import TweetRecord, counter_proportion, label_countered
from ..strata import quantile
from .hashing import DEFAULT_NGRAM_ORDERS, DEFAULT_TEXT_DIM, hash_texts, hashed_text_vector

POSITIVE_CLASS_RQ1 = "countered"
POSITIVE_CLASS_RQ2 = "highly_countered"
SKIP_WARN_FRACTION = 0.1


class FeatureError(ValueError):
    """A required attribute is missing from the inputs."""


@dataclass(frozen=True)
class FeatureManifest:
    """Recorded featurization config: dense attribute order, text block, scaling."""

    dense_names: tuple[str, ...]
    text_dim: int = DEFAULT_TEXT_DIM
    ngram_orders: tuple[int, ...] = DEFAULT_NGRAM_ORDERS
    positive_class: str = POSITIVE_CLASS_RQ1
    unscaled: frozenset[str] = field(default_factory=frozenset)
    means: tuple[float, ...] | None = None
    sds: tuple[float, ...] | None = None

    @property
    def total_dim(self) -> int:
        return len(self.dense_names) + self.text_dim

    def with_standardization(self, dense: np.ndarray) -> "FeatureManifest":
        """Derive per-attribute mean/sd from a training block.

        Unscaled attributes keep mean 0 / sd 1; zero-variance attributes get
        sd 0, which standardize() maps to a zero z-score.
        """
        if dense.shape[1] != len(self.dense_names):
            raise FeatureError(
                f"dense block has {dense.shape[1]} columns for {len(self.dense_names)} names"
            )
        if dense.shape[0] == 0:
            means = np.zeros(len(self.dense_names))
            sds = np.ones(len(self.dense_names))
        else:
            means = dense.mean(axis=0)
            sds = dense.std(axis=0, ddof=0)
        for i, name in enumerate(self.dense_names):
            if name in self.unscaled:
                means[i] = 0.0
                sds[i] = 1.0
        return replace(self, means=tuple(means.tolist()), sds=tuple(sds.tolist()))

    def standardize(self, dense: np.ndarray) -> np.ndarray:
        if self.means is None or self.sds is None:
            raise FeatureError("manifest has no standardization parameters yet")
        means = np.asarray(self.means)
        sds = np.asarray(self.sds)
        safe = np.where(sds > 0, sds, 1.0)
        z = (dense - means) / safe
        return np.where(sds > 0, z, 0.0)


def dense_row(
    attributes: Mapping[str, float | None], names: Sequence[str]
) -> np.ndarray:
    """Pull the named attributes into a raw dense row; missing values error."""
    row = np.empty(len(names), dtype=np.float64)
    for i, name in enumerate(names):
        value = attributes.get(name)
        if value is None:
            raise FeatureError(f"attribute {name!r} missing from inputs")
        row[i] = value
    return row


def assemble_features(
    tweet: TweetRecord,
    attributes: Mapping[str, float | None],
    manifest: FeatureManifest,
) -> np.ndarray:
    """Standardized dense block plus hashed text block for one tweet."""
    dense = dense_row(attributes, manifest.dense_names).reshape(1, -1)
    scaled = manifest.standardize(dense)[0]
    text = hashed_text_vector(tweet.text, manifest.text_dim, manifest.ngram_orders)
    return np.concatenate([scaled, text])


@dataclass
class LabeledDataset:
    """Raw dense rows, hashed text rows, labels, and the manifest that shaped them."""

    ids: tuple[str, ...]
    dense: np.ndarray
    text: np.ndarray
    labels: np.ndarray
    manifest: FeatureManifest
    skipped: int = 0

    def __len__(self) -> int:
        return len(self.ids)

    def design_matrix(self, manifest: FeatureManifest | None = None) -> np.ndarray:
        """Standardized dense block concatenated with the text block."""
        which = manifest if manifest is not None else self.manifest
        return np.hstack([which.standardize(self.dense), self.text])


def _collect(
    rows: list[tuple[str, Mapping[str, float | None], str, bool]],
    manifest: FeatureManifest,
    skipped: int,
) -> LabeledDataset:
    ids = []
    dense_rows = []
    texts = []
    labels = []
    for tweet_id, attributes, text, label in rows:
        try:
            dense_rows.append(dense_row(attributes, manifest.dense_names))
        except FeatureError:
            skipped += 1
            continue
        ids.append(tweet_id)
        texts.append(text)
        labels.append(label)
    total = len(ids) + skipped
    if total and skipped / total > SKIP_WARN_FRACTION:
        warnings.warn(
            f"dataset builder skipped {skipped} of {total} candidate tweets",
            stacklevel=3,
        )
    dense = np.vstack(dense_rows) if dense_rows else np.zeros((0, len(manifest.dense_names)))
    text_matrix = hash_texts(texts, manifest.text_dim, manifest.ngram_orders)
    return LabeledDataset(
        ids=tuple(ids),
        dense=dense,
        text=text_matrix,
        labels=np.asarray(labels, dtype=bool),
        manifest=manifest,
        skipped=skipped,
    )


def build_rq1_dataset(
    tweets: Sequence[TweetRecord],
    attributes_by_id: Mapping[str, Mapping[str, float | None]],
    manifest: FeatureManifest,
) -> LabeledDataset:
    """Countered-or-not dataset; positive class = countered.

    Tweets with incomplete reply labels or missing manifest attributes are
    skipped and counted.
    """
    rows = []
    skipped = 0
    for tweet in tweets:
        try:
            label = label_countered(tweet)
        except ValueError:
            skipped += 1
            continue
        rows.append((tweet.id, attributes_by_id[tweet.id], tweet.text, label))
    return _collect(rows, manifest, skipped)


def build_rq2_dataset(
    tweets: Sequence[TweetRecord],
    attributes_by_id: Mapping[str, Mapping[str, float | None]],
    manifest: FeatureManifest,
) -> LabeledDataset:
    """High-vs-low countering intensity dataset over countered tweets.

    Global quartiles of the counter proportion: bottom quartile is the
    negative class, top quartile the positive, the middle half is dropped.
    """
    skipped = 0
    candidates: list[tuple[TweetRecord, float]] = []
    for tweet in tweets:
        try:
            if not label_countered(tweet):
                continue
        except ValueError:
            skipped += 1
            continue
        candidates.append((tweet, counter_proportion(tweet)))
    if not candidates:
        warnings.warn("no countered tweets; intensity dataset is empty", stacklevel=2)
        return _collect([], manifest, skipped)
    proportions = [p for _, p in candidates]
    q1 = quantile(proportions, 0.25)
    q3 = quantile(proportions, 0.75)
    if q1 == q3:
        warnings.warn(
            "degenerate counter-proportion quartiles; intensity dataset is empty",
            stacklevel=2,
        )
        return _collect([], manifest, skipped)
    rows = []
    for tweet, p in candidates:
        if p <= q1:
            rows.append((tweet.id, attributes_by_id[tweet.id], tweet.text, False))
        elif p >= q3:
            rows.append((tweet.id, attributes_by_id[tweet.id], tweet.text, True))
    return _collect(rows, manifest, skipped)
