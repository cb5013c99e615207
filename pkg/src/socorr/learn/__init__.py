"""Feature assembly, hashed text vectors, classifiers, CV, and artifacts."""

from __future__ import annotations

from .artifact import (
    KIND_LOGREG,
    KIND_MLP,
    KIND_PAIR,
    ArtifactError,
    ModelArtifact,
    load_model_artifact,
    save_model_artifact,
)
from .evaluation import CvReport, FoldMetrics, kfold_cv, metrics, stratified_fold_indices
from .features import (
    FeatureError,
    FeatureManifest,
    LabeledDataset,
    POSITIVE_CLASS_RQ1,
    POSITIVE_CLASS_RQ2,
    assemble_features,
    build_rq1_dataset,
    build_rq2_dataset,
    dense_row,
)
from .hashing import (
    DEFAULT_NGRAM_ORDERS,
    DEFAULT_TEXT_DIM,
    HashingTextVectorizer,
    hash_texts,
    hashed_text_vector,
)
from .models import (
    DEFAULT_EPOCHS,
    DEFAULT_HIDDEN_UNITS,
    DEFAULT_L2,
    DEFAULT_LEARNING_RATE,
    DEFAULT_THRESHOLD,
    LogisticRegressionGD,
    MlpClassifier,
    classify,
    init_mlp_params,
    logistic_loss_grad,
    mlp_loss_grad,
    mlp_param_sizes,
    pack_mlp_params,
    predict_proba,
    sigmoid,
    train_logreg,
    train_mlp,
    unpack_mlp_params,
)
from .pairs import PairClassifier, labeled_pairs, pair_design_matrix, train_pair_classifier

__all__ = [
    "ArtifactError",
    "CvReport",
    "DEFAULT_EPOCHS",
    "DEFAULT_HIDDEN_UNITS",
    "DEFAULT_L2",
    "DEFAULT_LEARNING_RATE",
    "DEFAULT_NGRAM_ORDERS",
    "DEFAULT_TEXT_DIM",
    "DEFAULT_THRESHOLD",
    "FeatureError",
    "FeatureManifest",
    "FoldMetrics",
    "HashingTextVectorizer",
    "KIND_LOGREG",
    "KIND_MLP",
    "KIND_PAIR",
    "LabeledDataset",
    "LogisticRegressionGD",
    "MlpClassifier",
    "ModelArtifact",
    "PairClassifier",
    "POSITIVE_CLASS_RQ1",
    "POSITIVE_CLASS_RQ2",
    "assemble_features",
    "build_rq1_dataset",
    "build_rq2_dataset",
    "classify",
    "dense_row",
    "hash_texts",
    "hashed_text_vector",
    "init_mlp_params",
    "kfold_cv",
    "labeled_pairs",
    "load_model_artifact",
    "logistic_loss_grad",
    "metrics",
    "mlp_loss_grad",
    "mlp_param_sizes",
    "pack_mlp_params",
    "pair_design_matrix",
    "predict_proba",
    "save_model_artifact",
    "sigmoid",
    "stratified_fold_indices",
    "train_logreg",
    "train_mlp",
    "train_pair_classifier",
    "unpack_mlp_params",
]
