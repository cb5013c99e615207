"""Precision/recall/F1 and stratified k-fold cross-validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .features import LabeledDataset
from .validation import as_binary_labels


class FoldMetrics(NamedTuple):
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class CvReport:
    k: int
    seed: int
    folds: tuple[FoldMetrics, ...]
    mean_precision: float
    mean_recall: float
    mean_f1: float


def metrics(predictions, labels, positive: bool = True) -> FoldMetrics:
    """Precision, recall and F1 for the chosen positive class.

    Precision is 0 when nothing is predicted positive; F1 is 0 when both
    components are 0. At least one positive label must be present.
    """
    preds = np.asarray(predictions)
    labs = np.asarray(labels)
    if preds.shape != labs.shape:
        raise ValueError(f"length mismatch: {preds.shape} vs {labs.shape}")
    pred_pos = preds == positive
    lab_pos = labs == positive
    if not lab_pos.any():
        raise ValueError("metrics need at least one positive label")
    tp = int((pred_pos & lab_pos).sum())
    fp = int((pred_pos & ~lab_pos).sum())
    fn = int((~pred_pos & lab_pos).sum())
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return FoldMetrics(precision, recall, f1)


def stratified_fold_indices(
    ids: Sequence[str], labels: np.ndarray, k: int, seed: int
) -> list[np.ndarray]:
    """Stratified validation folds from a seeded shuffle.

    Row order is normalized by sorting ids before shuffling, so the folds
    (as id sets) do not depend on input permutation. Within each class the
    shuffled rows are dealt round-robin, keeping class proportions within
    one row per fold.
    """
    labels = as_binary_labels(labels, len(ids))
    if k < 2:
        raise ValueError("k must be at least 2")
    minority = int(min(labels.sum(), (~labels).sum()))
    if k > minority:
        raise ValueError(f"k={k} exceeds the minority class size {minority}")
    order = np.argsort(np.asarray(ids, dtype=object))
    rng = np.random.default_rng(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for value in (False, True):
        class_rows = order[labels[order] == value]
        class_rows = class_rows[rng.permutation(len(class_rows))]
        for i, row in enumerate(class_rows):
            folds[i % k].append(int(row))
    return [np.sort(np.asarray(fold, dtype=int)) for fold in folds]


def kfold_cv(
    dataset: LabeledDataset,
    k: int = 10,
    trainer: Callable[[], object] | None = None,
    seed: int = 0,
) -> CvReport:
    """Stratified k-fold CV with per-training-fold standardization.

    trainer is a zero-argument factory producing a fresh unfit estimator
    for each fold.
    """
    if trainer is None:
        raise ValueError("kfold_cv needs a trainer factory")
    folds = stratified_fold_indices(dataset.ids, dataset.labels, k, seed)
    all_rows = np.arange(len(dataset.ids))
    fold_metrics = []
    for validation_rows in folds:
        train_rows = np.setdiff1d(all_rows, validation_rows)
        manifest = dataset.manifest.with_standardization(dataset.dense[train_rows])
        X_train = np.hstack(
            [manifest.standardize(dataset.dense[train_rows]), dataset.text[train_rows]]
        )
        X_val = np.hstack(
            [manifest.standardize(dataset.dense[validation_rows]), dataset.text[validation_rows]]
        )
        model = trainer()
        model.fit(X_train, dataset.labels[train_rows])
        predictions = model.predict(X_val)
        fold_metrics.append(metrics(predictions, dataset.labels[validation_rows]))
    return CvReport(
        k=k,
        seed=seed,
        folds=tuple(fold_metrics),
        mean_precision=sum(m.precision for m in fold_metrics) / k,
        mean_recall=sum(m.recall for m in fold_metrics) / k,
        mean_f1=sum(m.f1 for m in fold_metrics) / k,
    )
