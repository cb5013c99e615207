"""Feature manifests, dense rows, and the RQ1/RQ2 dataset builders."""

from __future__ import annotations

import numpy as np
import pytest

from socorr.learn import (
    FeatureError,
    FeatureManifest,
    assemble_features,
    build_rq1_dataset,
    build_rq2_dataset,
    dense_row,
    hashed_text_vector,
)
from tests.test_corpus import make_tweet


def fitted_manifest(dense, names=("a", "b"), **kwargs):
    manifest = FeatureManifest(dense_names=tuple(names), **kwargs)
    return manifest.with_standardization(np.asarray(dense, dtype=float))


def test_standardization_centers_and_scales():
    dense = np.array([[1.0, 10.0], [3.0, 30.0], [5.0, 50.0]])
    manifest = fitted_manifest(dense)
    z = manifest.standardize(dense)
    assert np.allclose(z.mean(axis=0), 0.0)
    assert np.allclose(z.std(axis=0, ddof=0), 1.0)


def test_standardization_keeps_unscaled_attributes():
    dense = np.array([[1.0, 10.0], [3.0, 30.0]])
    manifest = fitted_manifest(dense, unscaled=frozenset({"b"}))
    z = manifest.standardize(dense)
    assert np.allclose(z[:, 1], dense[:, 1])
    assert not np.allclose(z[:, 0], dense[:, 0])


def test_standardization_zero_variance_column_maps_to_zero():
    dense = np.array([[4.0, 1.0], [4.0, 2.0], [4.0, 3.0]])
    manifest = fitted_manifest(dense)
    z = manifest.standardize(dense)
    assert np.all(z[:, 0] == 0.0)
    assert z[:, 1].std() > 0


def test_standardization_errors():
    manifest = FeatureManifest(dense_names=("a", "b"))
    with pytest.raises(FeatureError):
        manifest.standardize(np.zeros((2, 2)))  # not fitted yet
    with pytest.raises(FeatureError):
        manifest.with_standardization(np.zeros((2, 3)))  # width mismatch


def test_standardization_empty_block_is_identity():
    manifest = FeatureManifest(dense_names=("a",)).with_standardization(np.zeros((0, 1)))
    assert manifest.means == (0.0,)
    assert manifest.sds == (1.0,)
    assert np.allclose(manifest.standardize(np.array([[2.5]])), [[2.5]])


def test_dense_row_orders_and_errors():
    attributes = {"x": 1.0, "y": 2.0, "z": None}
    assert np.array_equal(dense_row(attributes, ["y", "x"]), [2.0, 1.0])
    with pytest.raises(FeatureError):
        dense_row(attributes, ["z"])
    with pytest.raises(FeatureError):
        dense_row(attributes, ["missing"])


def test_assemble_features_is_scaled_dense_plus_hashed_text():
    tweet = make_tweet(text="masks do not work at all")
    dense = np.array([[1.0, 4.0], [3.0, 8.0]])
    manifest = fitted_manifest(dense, text_dim=32, ngram_orders=(1, 2))
    attributes = {"a": 2.0, "b": 6.0}
    row = assemble_features(tweet, attributes, manifest)
    assert row.shape == (manifest.total_dim,)
    expected_dense = manifest.standardize(np.array([[2.0, 6.0]]))[0]
    expected_text = hashed_text_vector(tweet.text, 32, (1, 2))
    assert np.allclose(row[:2], expected_dense)
    assert np.allclose(row[2:], expected_text)


def grid_tweets(counts):
    """One tweet per entry with 100 replies and the given counter count."""
    return [
        make_tweet(tweet_id=f"g{k:03d}", n_replies=100, n_counter=k)
        for k in counts
    ]


def flat_attributes(tweets):
    return {t.id: {"a": float(i)} for i, t in enumerate(tweets)}


def test_rq1_labels_and_order():
    tweets = [
        make_tweet(tweet_id="c1", n_counter=2),
        make_tweet(tweet_id="u1", n_counter=0),
        make_tweet(tweet_id="c2", n_counter=1),
    ]
    manifest = FeatureManifest(dense_names=("a",))
    dataset = build_rq1_dataset(tweets, flat_attributes(tweets), manifest)
    assert dataset.ids == ("c1", "u1", "c2")
    assert dataset.labels.tolist() == [True, False, True]
    assert dataset.dense[:, 0].tolist() == [0.0, 1.0, 2.0]
    assert dataset.text.shape == (3, manifest.text_dim)
    assert dataset.skipped == 0


def test_rq1_skips_unlabeled_and_incomplete_rows():
    complete = [make_tweet(tweet_id=f"ok{i}") for i in range(8)]
    unlabeled = make_tweet(tweet_id="nolabel")
    unlabeled.replies[1].counter_label = None
    missing = make_tweet(tweet_id="noattr")
    tweets = complete + [unlabeled, missing]
    attributes = flat_attributes(complete)
    attributes["nolabel"] = {"a": 0.0}
    attributes["noattr"] = {"a": None}
    manifest = FeatureManifest(dense_names=("a",))
    with pytest.warns(UserWarning, match="skipped"):
        dataset = build_rq1_dataset(tweets, attributes, manifest)
    assert dataset.skipped == 2
    assert "nolabel" not in dataset.ids
    assert "noattr" not in dataset.ids
    assert len(dataset) == 8


def test_rq2_quartile_split_on_proportion_grid():
    tweets = grid_tweets(range(1, 101))
    manifest = FeatureManifest(dense_names=("a",))
    dataset = build_rq2_dataset(tweets, flat_attributes(tweets), manifest)
    # proportions 0.01..1.00: q1=0.2575, q3=0.7525, middle half dropped
    assert len(dataset) == 50
    assert int(dataset.labels.sum()) == 25
    low_ids = {f"g{k:03d}" for k in range(1, 26)}
    high_ids = {f"g{k:03d}" for k in range(76, 101)}
    got_low = {i for i, lab in zip(dataset.ids, dataset.labels) if not lab}
    got_high = {i for i, lab in zip(dataset.ids, dataset.labels) if lab}
    assert got_low == low_ids
    assert got_high == high_ids


def test_rq2_uncountered_tweets_are_not_candidates():
    tweets = grid_tweets([10, 40, 70, 100]) + [make_tweet(tweet_id="u0", n_counter=0)]
    manifest = FeatureManifest(dense_names=("a",))
    dataset = build_rq2_dataset(tweets, flat_attributes(tweets), manifest)
    assert "u0" not in dataset.ids
    assert dataset.skipped == 0


def test_rq2_degenerate_quartiles_warn_and_empty():
    tweets = [make_tweet(tweet_id=f"e{i}", n_replies=4, n_counter=2) for i in range(6)]
    manifest = FeatureManifest(dense_names=("a",))
    with pytest.warns(UserWarning, match="degenerate"):
        dataset = build_rq2_dataset(tweets, flat_attributes(tweets), manifest)
    assert len(dataset) == 0
    assert dataset.dense.shape == (0, 1)


def test_rq2_no_countered_tweets_warns():
    tweets = [make_tweet(tweet_id=f"n{i}", n_counter=0) for i in range(4)]
    manifest = FeatureManifest(dense_names=("a",))
    with pytest.warns(UserWarning, match="no countered"):
        dataset = build_rq2_dataset(tweets, flat_attributes(tweets), manifest)
    assert len(dataset) == 0


def test_design_matrix_accepts_frozen_manifest():
    tweets = [make_tweet(tweet_id=f"d{i}", n_counter=i % 2) for i in range(6)]
    manifest = FeatureManifest(dense_names=("a",), text_dim=16)
    dataset = build_rq1_dataset(tweets, flat_attributes(tweets), manifest)
    frozen = dataset.manifest.with_standardization(dataset.dense[:3])
    X = dataset.design_matrix(frozen)
    assert X.shape == (6, frozen.total_dim)
    assert np.allclose(X[:, 0], frozen.standardize(dataset.dense)[:, 0])
    assert np.allclose(X[:, 1:], dataset.text)
    with pytest.raises(FeatureError):
        dataset.design_matrix()  # stored manifest has no scaling parameters
