"""Command-line pipeline: label, analyze, inequality, train, evaluate, predict.

Every command is a pure function of (inputs, config, seed): outputs are
byte-identical across re-runs. Each output file embeds the 16-hex config
digest and the seed, either as leading "#" comment lines (tables) or as a
"meta" record (corpus files).

Exit codes: 0 success, 1 usage/config error, 2 data error.
"""

from __future__ import annotations

import argparse
import copy
import hashlib
import json
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

import numpy as np

from . import default_category_lexicon, default_valence_lexicon
from .attributes import (
    MODEL_INELIGIBLE,
    UNSCALED_ATTRIBUTES,
    attribute_names,
    family_counts,
    featurize_corpus,
)
from .corpus import (
    Corpus,
    CorpusError,
    DEFAULT_KEYWORDS,
    DEFAULT_MIN_REPLIES,
    DEFAULT_TOP_FRACTION,
    counter_proportion,
    filter_for_analysis,
    label_countered,
    load_corpus,
    save_corpus,
)
from .learn import (
    ArtifactError,
    DEFAULT_EPOCHS,
    DEFAULT_HIDDEN_UNITS,
    DEFAULT_L2,
    DEFAULT_LEARNING_RATE,
    DEFAULT_NGRAM_ORDERS,
    DEFAULT_TEXT_DIM,
    DEFAULT_THRESHOLD,
    FeatureManifest,
    KIND_LOGREG,
    KIND_MLP,
    KIND_PAIR,
    LabeledDataset,
    LogisticRegressionGD,
    MlpClassifier,
    POSITIVE_CLASS_RQ1,
    POSITIVE_CLASS_RQ2,
    PairClassifier,
    assemble_features,
    build_rq1_dataset,
    build_rq2_dataset,
    hash_texts,
    kfold_cv,
    labeled_pairs,
    load_model_artifact,
    metrics,
    save_model_artifact,
    stratified_fold_indices,
    train_pair_classifier,
)
from .strata import (
    DEFAULT_ALPHA,
    DEFAULT_STRATA,
    Group,
    StrataPartition,
    StratumSpec,
    TrendUndefined,
    assign_strata,
    compare_attribute,
    group_partition,
    inequality_trend,
    quantile,
    significant_attributes,
    validate_strata,
)
from .textfeat import load_category_lexicon, load_valence_lexicon

PROG = "socorr"


class UsageError(Exception):
    """Bad flags, bad config, or missing input paths."""


class DataError(Exception):
    """Inputs parsed but their content cannot be processed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise UsageError(message)


DEFAULT_CONFIG: dict[str, Any] = {
    "seed": 0,
    "workers": 1,
    "keywords": list(DEFAULT_KEYWORDS),
    "alpha": DEFAULT_ALPHA,
    "filter": {
        "min_replies": DEFAULT_MIN_REPLIES,
        "top_fraction": DEFAULT_TOP_FRACTION,
    },
    "strata": [[s.lower, s.upper] for s in DEFAULT_STRATA],
    "lexicons": {"valence_path": None, "categories_path": None},
    "features": {"text_dim": DEFAULT_TEXT_DIM, "ngram_orders": list(DEFAULT_NGRAM_ORDERS)},
    "model": {
        "learning_rate": DEFAULT_LEARNING_RATE,
        "epochs": DEFAULT_EPOCHS,
        "l2": DEFAULT_L2,
        "hidden_units": DEFAULT_HIDDEN_UNITS,
        "mlp_epochs": None,
        "threshold": DEFAULT_THRESHOLD,
    },
    "cv": {"k": 10},
    "inequality": {"sample_users": 10_000, "n_bins": 10},
    "label": {"model_path": None},
    "misinfo": {"model_path": None, "max_negatives": 8000, "epochs": 200},
}


def _merge(base: dict[str, Any], override: Mapping[str, Any], prefix: str = "") -> None:
    for key, value in override.items():
        if key not in base:
            raise UsageError(f"unknown config key {prefix + str(key)!r}")
        if isinstance(base[key], dict):
            if not isinstance(value, Mapping):
                raise UsageError(f"config key {prefix + str(key)!r} must be an object")
            _merge(base[key], value, prefix + str(key) + ".")
        else:
            base[key] = value


def resolve_config(
    config_path: str | None,
    seed: int | None = None,
    workers: int | None = None,
) -> dict[str, Any]:
    """Defaults, overlaid with the config file, overlaid with flag overrides."""
    resolved = copy.deepcopy(DEFAULT_CONFIG)
    if config_path is not None:
        path = Path(config_path)
        if not path.is_file():
            raise UsageError(f"config file not found: {config_path}")
        try:
            loaded = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc.msg}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        _merge(resolved, loaded)
    if seed is not None:
        resolved["seed"] = seed
    if workers is not None:
        resolved["workers"] = workers
    _validate_config(resolved)
    return resolved


def _validate_config(cfg: dict[str, Any]) -> None:
    if not isinstance(cfg["seed"], int) or isinstance(cfg["seed"], bool):
        raise UsageError("seed must be an integer")
    if not isinstance(cfg["workers"], int) or cfg["workers"] < 1:
        raise UsageError("workers must be a positive integer")
    if not 0.0 < cfg["alpha"] < 1.0:
        raise UsageError("alpha must lie strictly between 0 and 1")
    if cfg["filter"]["min_replies"] < 0:
        raise UsageError("filter.min_replies must be non-negative")
    if not 0.0 <= cfg["filter"]["top_fraction"] < 1.0:
        raise UsageError("filter.top_fraction must lie in [0, 1)")
    try:
        validate_strata(_config_strata(cfg))
    except ValueError as exc:
        raise UsageError(f"bad strata config: {exc}") from exc
    if cfg["cv"]["k"] < 2:
        raise UsageError("cv.k must be at least 2")
    if cfg["inequality"]["sample_users"] < 1 or cfg["inequality"]["n_bins"] < 1:
        raise UsageError("inequality.sample_users and n_bins must be positive")


def _config_strata(cfg: Mapping[str, Any]) -> tuple[StratumSpec, ...]:
    try:
        return tuple(StratumSpec(int(lo), int(hi)) for lo, hi in cfg["strata"])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad strata config: {exc}") from exc


def config_digest(cfg: Mapping[str, Any]) -> str:
    """16-hex digest of the resolved config, ignoring execution-only keys.

    The worker count never changes results, so it is excluded; outputs are
    byte-identical across worker counts.
    """
    semantic = {k: v for k, v in cfg.items() if k != "workers"}
    canonical = json.dumps(semantic, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


# ---------------------------------------------------------------------------
# output helpers

def _fmt(value: Any) -> str:
    if value is None:
        return "NA"
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".6g")


def _write_table(
    path: Path,
    digest: str,
    seed: int,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    extra_comments: Sequence[str] = (),
) -> None:
    lines = [f"# config_digest={digest} seed={seed}"]
    lines.extend(f"# {comment}" for comment in extra_comments)
    lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _require_file(path: str, what: str) -> Path:
    resolved = Path(path)
    if not resolved.is_file():
        raise UsageError(f"{what} not found: {path}")
    return resolved


def _load_corpus(path: str) -> Corpus:
    corpus = load_corpus(_require_file(path, "corpus file"))
    for diagnostic in corpus.diagnostics:
        print(
            f"{PROG}: line {diagnostic.line_number} skipped: {diagnostic.reason}",
            file=sys.stderr,
        )
    return corpus


def _load_lexicons(cfg: Mapping[str, Any]):
    valence_path = cfg["lexicons"]["valence_path"]
    categories_path = cfg["lexicons"]["categories_path"]
    valence = (
        load_valence_lexicon(_require_file(valence_path, "valence lexicon"))
        if valence_path
        else default_valence_lexicon()
    )
    categories = (
        load_category_lexicon(_require_file(categories_path, "category lexicon"))
        if categories_path
        else default_category_lexicon()
    )
    return valence, categories


# ---------------------------------------------------------------------------
# misinformation predictor for poster-history features

class ConstantFalsePredictor:
    """Fallback scorer when no misinformation model can be built."""

    def __call__(self, text: str) -> bool:
        return False


@dataclass
class MisinfoPredictor:
    """Hashed-text logistic scorer; picklable for featurization workers."""

    model: LogisticRegressionGD
    text_dim: int
    ngram_orders: tuple[int, ...]
    threshold: float = DEFAULT_THRESHOLD

    def __call__(self, text: str) -> bool:
        X = hash_texts([text], self.text_dim, self.ngram_orders)
        return bool(self.model.predict_proba(X)[0] >= self.threshold)


def build_misinfo_predictor(corpus: Corpus, cfg: Mapping[str, Any]) -> Callable[[str], bool]:
    """History-post misinformation scorer for the 7-day window proportion.

    Weakly supervised: corpus tweets (known misinformation) are positives,
    poster history posts are negatives. Falls back to a constant-False
    scorer, with a warning, when either side is missing.
    """
    dim = cfg["features"]["text_dim"]
    orders = tuple(cfg["features"]["ngram_orders"])
    model_path = cfg["misinfo"]["model_path"]
    if model_path:
        artifact = load_model_artifact(_require_file(model_path, "misinfo model"))
        if not isinstance(artifact.model, LogisticRegressionGD):
            raise DataError("misinfo model artifact must hold a logistic regression")
        text_cfg = artifact.training_config
        return MisinfoPredictor(
            artifact.model,
            int(text_cfg.get("text_dim", dim)),
            tuple(text_cfg.get("ngram_orders", orders)),
        )
    positives = [t.text for t in corpus.tweets]
    negatives: list[str] = []
    cap = cfg["misinfo"]["max_negatives"]
    for poster in corpus.posters.values():
        for post in poster.history:
            negatives.append(post.text)
            if len(negatives) >= cap:
                break
        if len(negatives) >= cap:
            break
    if not positives or not negatives:
        warnings.warn(
            "not enough text to train a misinformation scorer;"
            " misinformation proportions default to 0",
            stacklevel=2,
        )
        return ConstantFalsePredictor()
    texts = positives + negatives
    labels = np.array([True] * len(positives) + [False] * len(negatives))
    X = hash_texts(texts, dim, orders)
    model = LogisticRegressionGD(
        learning_rate=cfg["model"]["learning_rate"],
        epochs=cfg["misinfo"]["epochs"],
        l2=cfg["model"]["l2"],
        seed=cfg["seed"],
    ).fit(X, labels)
    return MisinfoPredictor(model, dim, orders)


# ---------------------------------------------------------------------------
# featurization shared by analyze / train / evaluate / predict

def _featurize(corpus: Corpus, scored: Corpus, cfg: Mapping[str, Any]):
    """Attribute maps for `scored` tweets; the full corpus trains the scorer."""
    valence, categories = _load_lexicons(cfg)
    predictor = build_misinfo_predictor(corpus, cfg)
    attributes = featurize_corpus(
        scored,
        valence,
        categories,
        keywords=tuple(cfg["keywords"]),
        misinfo_predictor=predictor,
        workers=cfg["workers"],
    )
    return attributes, categories


def _model_manifest(cfg: Mapping[str, Any], category_names: Sequence[str], positive_class: str) -> FeatureManifest:
    dense = tuple(n for n in attribute_names(category_names) if n not in MODEL_INELIGIBLE)
    return FeatureManifest(
        dense_names=dense,
        text_dim=cfg["features"]["text_dim"],
        ngram_orders=tuple(cfg["features"]["ngram_orders"]),
        positive_class=positive_class,
        unscaled=frozenset(UNSCALED_ATTRIBUTES),
    )


def _check_registry(category_names: Sequence[str]) -> None:
    counts = family_counts(category_names)
    expected = {
        "length_sentiment": 4,
        "politeness": 2,
        "categories": len(category_names),
        "engagement": 7,
        "poster": 9,
    }
    if counts != expected:
        raise DataError(f"attribute registry drifted: {counts} != {expected}")


# ---------------------------------------------------------------------------
# subcommands

def cmd_label(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    corpus = _load_corpus(args.corpus)
    seed = cfg["seed"]
    meta = {"command": "label", "config_digest": digest, "seed": seed}

    unlabeled = [
        (tweet, reply)
        for tweet in corpus.tweets
        for reply in tweet.replies
        if reply.counter_label is None
    ]
    if not unlabeled:
        save_corpus(corpus, out / "labeled_corpus.jsonl", meta=meta)
        return 0

    ids, pairs = labeled_pairs(corpus)
    model_cfg = {
        "learning_rate": cfg["model"]["learning_rate"],
        "epochs": cfg["model"]["epochs"],
        "l2": cfg["model"]["l2"],
        "seed": seed,
    }
    dim = cfg["features"]["text_dim"]
    orders = tuple(cfg["features"]["ngram_orders"])
    model_path = cfg["label"]["model_path"]
    if model_path:
        artifact = load_model_artifact(_require_file(model_path, "pair model"))
        if not isinstance(artifact.model, PairClassifier):
            raise DataError("label model artifact must hold a pair classifier")
        classifier = artifact.model
    elif pairs:
        classifier = train_pair_classifier(pairs, model_cfg, dim, orders)
        save_model_artifact(
            out / "pair_model.json", KIND_PAIR, classifier, None, seed, model_cfg, digest
        )
        _pair_cv_table(out, digest, cfg, ids, pairs)
    else:
        raise DataError("corpus has no labeled replies and no pair model was supplied")

    for tweet, reply in unlabeled:
        reply.counter_label = classifier.classify(
            tweet.text, reply.text, cfg["model"]["threshold"]
        )
    save_corpus(corpus, out / "labeled_corpus.jsonl", meta=meta)
    return 0


def _pair_cv_table(
    out: Path,
    digest: str,
    cfg: Mapping[str, Any],
    ids: Sequence[str],
    pairs: Sequence[tuple[str, str, bool]],
) -> None:
    labels = np.asarray([p[2] for p in pairs], dtype=bool)
    minority = int(min(labels.sum(), (~labels).sum()))
    k = min(cfg["cv"]["k"], minority)
    if k < 2:
        return
    seed = cfg["seed"]
    model_cfg = {
        "learning_rate": cfg["model"]["learning_rate"],
        "epochs": cfg["model"]["epochs"],
        "l2": cfg["model"]["l2"],
        "seed": seed,
    }
    dim = cfg["features"]["text_dim"]
    orders = tuple(cfg["features"]["ngram_orders"])
    folds = stratified_fold_indices(ids, labels, k, seed)
    rows: list[list[Any]] = []
    scores = []
    for fold_number, validation in enumerate(folds, start=1):
        mask = np.zeros(len(pairs), dtype=bool)
        mask[validation] = True
        train_pairs = [p for p, held_out in zip(pairs, mask) if not held_out]
        classifier = train_pair_classifier(train_pairs, model_cfg, dim, orders)
        probs = classifier.predict_proba(
            [pairs[i][0] for i in validation], [pairs[i][1] for i in validation]
        )
        fold = metrics(probs >= cfg["model"]["threshold"], labels[validation])
        scores.append(fold)
        rows.append([fold_number, fold.precision, fold.recall, fold.f1])
    rows.append(
        [
            "mean",
            sum(m.precision for m in scores) / k,
            sum(m.recall for m in scores) / k,
            sum(m.f1 for m in scores) / k,
        ]
    )
    _write_table(
        out / "pair_cv_metrics.tsv",
        digest,
        cfg["seed"],
        ["fold", "precision", "recall", "f1"],
        rows,
        extra_comments=[f"k={k} n_pairs={len(pairs)}"],
    )


def cmd_analyze(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seed = cfg["seed"]
    corpus = _load_corpus(args.corpus)
    filtered = filter_for_analysis(
        corpus, cfg["filter"]["min_replies"], cfg["filter"]["top_fraction"]
    )
    strata = _config_strata(cfg)
    partition = assign_strata(filtered, strata)
    assignments, notes = group_partition(partition)
    attributes, categories = _featurize(corpus, filtered, cfg)
    _check_registry(categories.names)
    names = attribute_names(categories.names)
    tweets_by_id = filtered.tweets_by_id()

    comparisons = []
    for name in names:
        def extractor(tweet, _name=name):
            return attributes[tweet.id].get(_name)

        comparisons.append(compare_attribute(extractor, assignments, tweets_by_id, name))
    significant = significant_attributes(comparisons, cfg["alpha"])
    significant_set = set(significant)

    report_rows: list[list[Any]] = []
    means_rows: list[list[Any]] = []
    for comparison in comparisons:
        for stratum_report in comparison.strata:
            spec = stratum_report.stratum
            report_rows.append(
                [
                    comparison.attribute,
                    spec.lower,
                    spec.upper,
                    stratum_report.n_high,
                    stratum_report.n_low,
                    stratum_report.mean_high,
                    stratum_report.mean_low,
                    stratum_report.ci_high.lo if stratum_report.ci_high else None,
                    stratum_report.ci_high.hi if stratum_report.ci_high else None,
                    stratum_report.ci_low.lo if stratum_report.ci_low else None,
                    stratum_report.ci_low.hi if stratum_report.ci_low else None,
                    stratum_report.t,
                    stratum_report.df,
                    stratum_report.p,
                    stratum_report.cohen_d,
                    comparison.pooled_p,
                    comparison.average_cohen_d,
                    comparison.attribute in significant_set,
                    stratum_report.note,
                ]
            )
            for group_name, n, mean, ci in (
                ("highly_countered", stratum_report.n_high, stratum_report.mean_high, stratum_report.ci_high),
                ("low_countered", stratum_report.n_low, stratum_report.mean_low, stratum_report.ci_low),
            ):
                means_rows.append(
                    [
                        comparison.attribute,
                        spec.lower,
                        spec.upper,
                        group_name,
                        n,
                        mean,
                        ci.lo if ci else None,
                        ci.hi if ci else None,
                    ]
                )

    _write_table(
        out / "analysis_report.tsv",
        digest,
        seed,
        [
            "attribute", "stratum_lo", "stratum_hi", "n_high", "n_low",
            "mean_high", "mean_low", "ci_high_lo", "ci_high_hi", "ci_low_lo",
            "ci_low_hi", "t", "df", "p", "cohen_d", "pooled_p", "avg_cohen_d",
            "significant", "note",
        ],
        report_rows,
        extra_comments=[f"alpha={_fmt(cfg['alpha'])}"],
    )
    _write_table(
        out / "attribute_means.tsv",
        digest,
        seed,
        ["attribute", "stratum_lo", "stratum_hi", "group", "n", "mean", "ci_lo", "ci_hi"],
        means_rows,
    )

    lines = [f"# config_digest={digest} seed={seed}"]
    lines.extend(significant)
    (out / "significant_attributes.txt").write_text(
        "\n".join(lines) + "\n", encoding="utf-8", newline="\n"
    )

    distribution: dict[int, int] = {}
    for tweet in filtered.tweets:
        distribution[tweet.reply_count] = distribution.get(tweet.reply_count, 0) + 1
    _write_table(
        out / "reply_distribution.tsv",
        digest,
        seed,
        ["reply_count", "n_tweets"],
        [[count, distribution[count]] for count in sorted(distribution)],
    )

    box_rows = []
    size_rows = []
    group_sizes: dict[StratumSpec, dict[Group, int]] = {}
    for assignment in assignments:
        group_sizes.setdefault(assignment.stratum, {g: 0 for g in Group})[assignment.group] += 1
    for spec in strata:
        tweets = partition.groups[spec]
        if tweets:
            proportions = [counter_proportion(t) for t in tweets]
            box_rows.append(
                [
                    spec.lower, spec.upper, len(proportions),
                    min(proportions),
                    quantile(proportions, 0.25),
                    quantile(proportions, 0.5),
                    quantile(proportions, 0.75),
                    max(proportions),
                ]
            )
        sizes = group_sizes.get(spec)
        if sizes is not None:
            size_rows.append(
                [
                    spec.lower, spec.upper,
                    sizes[Group.HIGHLY_COUNTERED],
                    sizes[Group.MIDDLE],
                    sizes[Group.LOW_COUNTERED],
                ]
            )
    _write_table(
        out / "counter_proportion_box.tsv",
        digest,
        seed,
        ["stratum_lo", "stratum_hi", "n", "min", "q1", "median", "q3", "max"],
        box_rows,
    )
    _write_table(
        out / "group_sizes.tsv",
        digest,
        seed,
        ["stratum_lo", "stratum_hi", "n_high", "n_middle", "n_low"],
        size_rows,
    )

    note_lines = [
        f"# config_digest={digest} seed={seed}",
        f"tweets loaded: {len(corpus.tweets)}",
        f"tweets after filter: {len(filtered.tweets)}",
        f"excluded above top stratum: {partition.excluded_above}",
        f"excluded outside strata: {partition.excluded_other}",
    ]
    note_lines.extend(notes)
    note_lines.append(f"significant attributes: {len(significant)}")
    (out / "analysis_notes.txt").write_text(
        "\n".join(note_lines) + "\n", encoding="utf-8", newline="\n"
    )
    return 0


def cmd_inequality(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    import random

    from .signals import user_ari

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seed = cfg["seed"]
    corpus = _load_corpus(args.corpus)
    if not any(p.history for p in corpus.posters.values()):
        raise DataError("corpus has no poster histories; readability trend undefined")

    countered_by_author: dict[str, bool] = {}
    for tweet in corpus.tweets:
        flag = label_countered(tweet)
        countered_by_author[tweet.author_id] = countered_by_author.get(tweet.author_id, False) or flag

    users = [
        (user_ari(poster), countered_by_author[user_id])
        for user_id, poster in sorted(corpus.posters.items())
        if user_id in countered_by_author
    ]
    if not users:
        raise DataError("no posters authored any tweet; readability trend undefined")

    sample_size = cfg["inequality"]["sample_users"]
    if sample_size < len(users):
        users = random.Random(seed).sample(users, sample_size)
    else:
        warnings.warn(
            f"sample size {sample_size} is at least the population {len(users)}; using all users",
            stacklevel=2,
        )
    try:
        report = inequality_trend(users, cfg["inequality"]["n_bins"])
    except TrendUndefined as exc:
        raise DataError(str(exc)) from exc

    fit_bins = {
        (b.ari_lo, b.ari_hi) for b in report.bins if b.n_users >= 5
    }
    _write_table(
        out / "inequality_report.tsv",
        digest,
        seed,
        ["ari_lo", "ari_hi", "n_users", "countered_fraction", "in_fit"],
        [
            [b.ari_lo, b.ari_hi, b.n_users, b.countered_fraction, (b.ari_lo, b.ari_hi) in fit_bins]
            for b in report.bins
        ],
        extra_comments=[f"slope={report.slope!r}", f"n_users={len(users)}"],
    )
    return 0


def _trainer_factories(cfg: Mapping[str, Any]):
    model_cfg = cfg["model"]
    seed = cfg["seed"]
    mlp_epochs = model_cfg["mlp_epochs"]
    if mlp_epochs is None:
        mlp_epochs = model_cfg["epochs"]

    def logreg_factory() -> LogisticRegressionGD:
        return LogisticRegressionGD(
            learning_rate=model_cfg["learning_rate"],
            epochs=model_cfg["epochs"],
            l2=model_cfg["l2"],
            seed=seed,
        )

    def mlp_factory() -> MlpClassifier:
        return MlpClassifier(
            hidden_units=model_cfg["hidden_units"],
            learning_rate=model_cfg["learning_rate"],
            epochs=mlp_epochs,
            l2=model_cfg["l2"],
            seed=seed,
        )

    return logreg_factory, mlp_factory, mlp_epochs


def _build_task_dataset(
    args: argparse.Namespace, cfg: dict[str, Any], task: str
) -> tuple[LabeledDataset, Corpus]:
    corpus = _load_corpus(args.corpus)
    filtered = filter_for_analysis(
        corpus, cfg["filter"]["min_replies"], cfg["filter"]["top_fraction"]
    )
    attributes, categories = _featurize(corpus, filtered, cfg)
    _check_registry(categories.names)
    positive = POSITIVE_CLASS_RQ1 if task == "rq1" else POSITIVE_CLASS_RQ2
    manifest = _model_manifest(cfg, categories.names, positive)
    builder = build_rq1_dataset if task == "rq1" else build_rq2_dataset
    try:
        dataset = builder(filtered.tweets, attributes, manifest)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    return dataset, corpus


def cmd_train(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seed = cfg["seed"]
    task = args.task
    dataset, _ = _build_task_dataset(args, cfg, task)
    labels = dataset.labels
    if len(dataset) < 2 * cfg["cv"]["k"] or labels.all() or not labels.any():
        raise DataError(
            f"degenerate {task} dataset: {len(dataset)} rows,"
            f" {int(labels.sum())} positive"
        )

    logreg_factory, mlp_factory, mlp_epochs = _trainer_factories(cfg)
    k = cfg["cv"]["k"]
    try:
        logreg_cv = kfold_cv(dataset, k, logreg_factory, seed)
        mlp_cv = kfold_cv(dataset, k, mlp_factory, seed)
    except ValueError as exc:
        raise DataError(str(exc)) from exc

    rows: list[list[Any]] = []
    for model_name, cv in (("logistic_regression", logreg_cv), ("mlp", mlp_cv)):
        for fold_number, fold in enumerate(cv.folds, start=1):
            rows.append([model_name, fold_number, fold.precision, fold.recall, fold.f1])
        rows.append([model_name, "mean", cv.mean_precision, cv.mean_recall, cv.mean_f1])
    _write_table(
        out / f"cv_metrics_{task}.tsv",
        digest,
        seed,
        ["model", "fold", "precision", "recall", "f1"],
        rows,
        extra_comments=[f"task={task} k={k} n={len(dataset)} positives={int(labels.sum())}"],
    )

    fitted_manifest = dataset.manifest.with_standardization(dataset.dense)
    X = dataset.design_matrix(fitted_manifest)
    model_cfg = cfg["model"]
    logreg_config = {
        "learning_rate": model_cfg["learning_rate"],
        "epochs": model_cfg["epochs"],
        "l2": model_cfg["l2"],
        "seed": seed,
        "text_dim": cfg["features"]["text_dim"],
        "ngram_orders": list(cfg["features"]["ngram_orders"]),
    }
    mlp_config = dict(logreg_config, epochs=mlp_epochs, hidden_units=model_cfg["hidden_units"])
    logreg = logreg_factory().fit(X, labels)
    mlp = mlp_factory().fit(X, labels)
    save_model_artifact(
        out / f"model_logreg_{task}.json", KIND_LOGREG, logreg,
        fitted_manifest, seed, logreg_config, digest,
    )
    save_model_artifact(
        out / f"model_mlp_{task}.json", KIND_MLP, mlp,
        fitted_manifest, seed, mlp_config, digest,
    )
    return 0


def cmd_predict(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seed = cfg["seed"]
    artifact = load_model_artifact(_require_file(args.model, "model artifact"))
    if artifact.kind == KIND_PAIR:
        raise DataError("pair models label replies; use the label or evaluate command")
    manifest = artifact.manifest
    if manifest is None or manifest.means is None:
        raise DataError("model artifact has no fitted feature manifest")

    corpus = _load_corpus(args.corpus)
    rows: list[list[Any]] = []
    if corpus.tweets:
        attributes, _ = _featurize(corpus, corpus, cfg)
        threshold = cfg["model"]["threshold"]
        for tweet in corpus.tweets:
            tweet_attributes = attributes[tweet.id]
            missing = [
                name for name in manifest.dense_names if tweet_attributes.get(name) is None
            ]
            if missing:
                raise DataError(
                    f"tweet {tweet.id!r} is missing attributes: {', '.join(missing)}"
                )
            vector = assemble_features(tweet, tweet_attributes, manifest)
            probability = float(artifact.model.predict_proba(vector.reshape(1, -1))[0])
            rows.append([tweet.id, probability, probability >= threshold])
    _write_table(
        out / "predictions.tsv",
        digest,
        seed,
        ["tweet_id", "probability", "label"],
        rows,
        extra_comments=[f"kind={artifact.kind} positive_class={manifest.positive_class}"],
    )
    return 0


def cmd_evaluate(args: argparse.Namespace, cfg: dict[str, Any], digest: str) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seed = cfg["seed"]
    artifact = load_model_artifact(_require_file(args.model, "model artifact"))
    threshold = cfg["model"]["threshold"]
    corpus = _load_corpus(args.corpus)

    if artifact.kind == KIND_PAIR:
        _, pairs = labeled_pairs(corpus)
        if not pairs:
            raise DataError("corpus has no labeled replies to evaluate against")
        classifier = artifact.model
        probs = classifier.predict_proba([p[0] for p in pairs], [p[1] for p in pairs])
        labels = np.asarray([p[2] for p in pairs], dtype=bool)
        predictions = probs >= threshold
        subject = "pairs"
    else:
        manifest = artifact.manifest
        if manifest is None or manifest.means is None:
            raise DataError("model artifact has no fitted feature manifest")
        filtered = filter_for_analysis(
            corpus, cfg["filter"]["min_replies"], cfg["filter"]["top_fraction"]
        )
        attributes, _ = _featurize(corpus, filtered, cfg)
        builder = (
            build_rq1_dataset
            if manifest.positive_class == POSITIVE_CLASS_RQ1
            else build_rq2_dataset
        )
        dataset = builder(filtered.tweets, attributes, manifest)
        if not len(dataset):
            raise DataError("no usable labeled tweets to evaluate against")
        X = dataset.design_matrix()
        predictions = artifact.model.predict_proba(X) >= threshold
        labels = dataset.labels
        subject = "tweets"

    try:
        scored = metrics(predictions, labels)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    _write_table(
        out / "evaluation.tsv",
        digest,
        seed,
        ["kind", "n", "positives", "precision", "recall", "f1"],
        [
            [
                artifact.kind,
                int(labels.shape[0]),
                int(labels.sum()),
                scored.precision,
                scored.recall,
                scored.f1,
            ]
        ],
        extra_comments=[f"subject={subject} threshold={_fmt(threshold)}"],
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", metavar="command")

    def add(name: str, helptext: str, needs_model: bool = False, needs_task: bool = False):
        sub = subparsers.add_parser(name, help=helptext)
        sub.add_argument("--corpus", required=True, help="line-delimited corpus file")
        if needs_model:
            sub.add_argument("--model", required=True, help="model artifact path")
        if needs_task:
            sub.add_argument("--task", required=True, choices=("rq1", "rq2"))
        sub.add_argument("--config", default=None, help="JSON config file")
        sub.add_argument("--seed", type=int, default=None, help="override config seed")
        sub.add_argument("--out", default=".", help="output directory")
        sub.add_argument("--workers", type=int, default=None, help="featurization workers")
        return sub

    add("label", "fill missing reply counter labels")
    add("analyze", "stratified countered-vs-uncountered comparison reports")
    add("inequality", "countered fraction by poster readability")
    add("train", "cross-validate and fit the rq1/rq2 models", needs_task=True)
    add("evaluate", "score a saved model on a labeled corpus", needs_model=True)
    add("predict", "score tweets with a saved model", needs_model=True)
    return parser


_COMMANDS = {
    "label": cmd_label,
    "analyze": cmd_analyze,
    "inequality": cmd_inequality,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "predict": cmd_predict,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required (label, analyze, inequality, train, evaluate, predict)")
        cfg = resolve_config(args.config, args.seed, args.workers)
        digest = config_digest(cfg)
        return _COMMANDS[args.command](args, cfg, digest)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except (CorpusError, DataError, ArtifactError, ValueError) as exc:
        print(f"{PROG}: data error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{PROG}: data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
