"""Model artifact files: JSON with weights as decimal strings.

repr() of a Python float round-trips exactly, so saving weights as decimal
strings and parsing them back reproduces the model bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .features import FeatureManifest
from .models import LogisticRegressionGD, MlpClassifier
from .pairs import PairClassifier

KIND_LOGREG = "logistic_regression"
KIND_MLP = "mlp"
KIND_PAIR = "pair_logistic_regression"
_FORMAT = "socorr-model"
_VERSION = 1


class ArtifactError(ValueError):
    """Malformed or incompatible model artifact."""


def _encode_floats(values) -> Any:
    array = np.asarray(values, dtype=np.float64)
    if array.ndim == 0:
        return repr(float(array))
    return [_encode_floats(v) for v in array]


def _decode_floats(values) -> np.ndarray | float:
    if isinstance(values, str):
        return float(values)
    return np.asarray(
        [_decode_floats(v) for v in values], dtype=np.float64
    )


def _manifest_to_json(manifest: FeatureManifest) -> dict[str, Any]:
    return {
        "dense_names": list(manifest.dense_names),
        "text_dim": manifest.text_dim,
        "ngram_orders": list(manifest.ngram_orders),
        "positive_class": manifest.positive_class,
        "unscaled": sorted(manifest.unscaled),
        "means": None if manifest.means is None else _encode_floats(manifest.means),
        "sds": None if manifest.sds is None else _encode_floats(manifest.sds),
    }


def _manifest_from_json(obj: dict[str, Any]) -> FeatureManifest:
    return FeatureManifest(
        dense_names=tuple(obj["dense_names"]),
        text_dim=int(obj["text_dim"]),
        ngram_orders=tuple(obj["ngram_orders"]),
        positive_class=obj["positive_class"],
        unscaled=frozenset(obj["unscaled"]),
        means=None if obj["means"] is None else tuple(float(v) for v in obj["means"]),
        sds=None if obj["sds"] is None else tuple(float(v) for v in obj["sds"]),
    )


@dataclass
class ModelArtifact:
    kind: str
    model: LogisticRegressionGD | MlpClassifier | PairClassifier
    manifest: FeatureManifest | None
    seed: int
    training_config: dict[str, Any]
    config_digest: str


def _weights_payload(model) -> dict[str, Any]:
    if isinstance(model, LogisticRegressionGD):
        return {"weights": _encode_floats(model.weights_), "bias": _encode_floats(model.bias_)}
    if isinstance(model, MlpClassifier):
        return {
            "hidden_weights": _encode_floats(model.hidden_weights_),
            "hidden_bias": _encode_floats(model.hidden_bias_),
            "output_weights": _encode_floats(model.output_weights_),
            "output_bias": _encode_floats(model.output_bias_),
        }
    raise ArtifactError(f"cannot serialize model of type {type(model).__name__}")


def save_model_artifact(
    path: str | Path,
    kind: str,
    model,
    manifest: FeatureManifest | None,
    seed: int,
    training_config: dict[str, Any],
    config_digest: str,
) -> None:
    if kind not in (KIND_LOGREG, KIND_MLP, KIND_PAIR):
        raise ArtifactError(f"unknown artifact kind {kind!r}")
    inner = model.model if isinstance(model, PairClassifier) else model
    payload = {
        "format": _FORMAT,
        "version": _VERSION,
        "kind": kind,
        "config_digest": config_digest,
        "seed": seed,
        "training_config": training_config,
        "manifest": None if manifest is None else _manifest_to_json(manifest),
        "pair_text": None
        if not isinstance(model, PairClassifier)
        else {"text_dim": model.text_dim, "ngram_orders": list(model.ngram_orders)},
        "parameters": _weights_payload(inner),
    }
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, ensure_ascii=False, indent=1, sort_keys=True)
        handle.write("\n")


def _rebuild_logreg(parameters: dict[str, Any], config: dict[str, Any]) -> LogisticRegressionGD:
    model = LogisticRegressionGD(
        learning_rate=config.get("learning_rate", 0.1),
        epochs=config.get("epochs", 500),
        l2=config.get("l2", 1e-4),
        seed=config.get("seed", 0),
    )
    weights = _decode_floats(parameters["weights"])
    model.weights_ = np.atleast_1d(weights)
    model.bias_ = float(_decode_floats(parameters["bias"]))
    model.loss_history_ = []
    model.n_features_in_ = model.weights_.shape[0]
    model.classes_ = np.array([False, True])
    return model


def _rebuild_mlp(parameters: dict[str, Any], config: dict[str, Any]) -> MlpClassifier:
    hidden_weights = np.atleast_2d(_decode_floats(parameters["hidden_weights"]))
    model = MlpClassifier(
        hidden_units=hidden_weights.shape[1],
        learning_rate=config.get("learning_rate", 0.1),
        epochs=config.get("epochs", 500),
        l2=config.get("l2", 1e-4),
        seed=config.get("seed", 0),
    )
    model.hidden_weights_ = hidden_weights
    model.hidden_bias_ = np.atleast_1d(_decode_floats(parameters["hidden_bias"]))
    model.output_weights_ = np.atleast_1d(_decode_floats(parameters["output_weights"]))
    model.output_bias_ = float(_decode_floats(parameters["output_bias"]))
    model.loss_history_ = []
    model.n_features_in_ = hidden_weights.shape[0]
    model.classes_ = np.array([False, True])
    return model


def load_model_artifact(path: str | Path) -> ModelArtifact:
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ArtifactError(f"{path}: invalid JSON: {exc.msg}") from exc
    if not isinstance(payload, dict) or payload.get("format") != _FORMAT:
        raise ArtifactError(f"{path}: not a model artifact")
    kind = payload.get("kind")
    config = payload.get("training_config") or {}
    parameters = payload.get("parameters") or {}
    manifest = None
    if payload.get("manifest") is not None:
        manifest = _manifest_from_json(payload["manifest"])
    if kind == KIND_LOGREG:
        model: Any = _rebuild_logreg(parameters, config)
    elif kind == KIND_MLP:
        model = _rebuild_mlp(parameters, config)
    elif kind == KIND_PAIR:
        pair_text = payload.get("pair_text") or {}
        model = PairClassifier(
            model=_rebuild_logreg(parameters, config),
            text_dim=int(pair_text.get("text_dim", 256)),
            ngram_orders=tuple(pair_text.get("ngram_orders", (1, 2))),
        )
    else:
        raise ArtifactError(f"{path}: unknown artifact kind {kind!r}")
    return ModelArtifact(
        kind=kind,
        model=model,
        manifest=manifest,
        seed=int(payload.get("seed", 0)),
        training_config=config,
        config_digest=str(payload.get("config_digest", "")),
    )
