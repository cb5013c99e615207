"""Strata assignment, quartile grouping, and attribute comparisons."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from socorr import (
    Corpus,
    DEFAULT_STRATA,
    Group,
    StratumSpec,
    StratumTooSmall,
    cohen_d,
    compare_attribute,
    group_partition,
    quantile,
    significant_attributes,
    welch_t,
)
from socorr.strata import assign_strata, group_quartiles, validate_strata

from test_corpus import make_tweet


def test_default_strata_cover_3_to_50_uniquely():
    for count in range(3, 51):
        assert sum(spec.contains(count) for spec in DEFAULT_STRATA) == 1
    assert not any(spec.contains(2) for spec in DEFAULT_STRATA)
    assert not any(spec.contains(51) for spec in DEFAULT_STRATA)


def test_stratum_spec_validation():
    with pytest.raises(ValueError):
        StratumSpec(5, 3)
    with pytest.raises(ValueError):
        validate_strata((StratumSpec(3, 5), StratumSpec(5, 9)))


def test_assign_strata_exclusions():
    strata = (StratumSpec(3, 5), StratumSpec(8, 10))
    tweets = [
        make_tweet("low", n_replies=2),
        make_tweet("gap", n_replies=6),
        make_tweet("in1", n_replies=4),
        make_tweet("in2", n_replies=9),
        make_tweet("high", n_replies=11),
    ]
    partition = assign_strata(Corpus(tweets=tweets), strata)
    assert [t.id for t in partition.groups[strata[0]]] == ["in1"]
    assert [t.id for t in partition.groups[strata[1]]] == ["in2"]
    assert partition.excluded_above == 1
    assert partition.excluded_other == 2


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9, 17, 24, 40])
def test_quartile_group_sizes_for_distinct_proportions(n):
    spec = StratumSpec(46, 50)
    # distinct proportions via a fixed reply count of 48
    tweets = [make_tweet(f"t{k}", n_replies=48, n_counter=k) for k in range(1, n + 1)]
    assignments = group_quartiles(spec, tweets)
    sizes = {g: 0 for g in Group}
    for assignment in assignments:
        sizes[assignment.group] += 1
    target = math.ceil(n / 4)
    assert abs(sizes[Group.LOW_COUNTERED] - target) <= 1
    assert abs(sizes[Group.HIGHLY_COUNTERED] - target) <= 1
    assert sum(sizes.values()) == n


def test_quartile_groups_are_ordered():
    spec = StratumSpec(46, 50)
    tweets = [make_tweet(f"t{k}", n_replies=48, n_counter=k) for k in range(48)]
    by_id = {t.id: t for t in tweets}
    assignments = group_quartiles(spec, tweets)
    # every low proportion sits below every highly countered proportion
    lows = [sum(r.counter_label for r in by_id[a.tweet_id].replies)
            for a in assignments if a.group is Group.LOW_COUNTERED]
    highs = [sum(r.counter_label for r in by_id[a.tweet_id].replies)
             for a in assignments if a.group is Group.HIGHLY_COUNTERED]
    assert max(lows) < min(highs)


def test_all_equal_proportions_go_middle_with_warning():
    spec = StratumSpec(3, 5)
    tweets = [make_tweet(f"t{i}", n_replies=4, n_counter=2) for i in range(6)]
    with pytest.warns(UserWarning):
        assignments = group_quartiles(spec, tweets)
    assert all(a.group is Group.MIDDLE for a in assignments)


def test_stratum_too_small():
    spec = StratumSpec(3, 5)
    tweets = [make_tweet(f"t{i}", n_replies=3, n_counter=i) for i in range(3)]
    with pytest.raises(StratumTooSmall):
        group_quartiles(spec, tweets)


def test_group_partition_collects_notes():
    strata = (StratumSpec(3, 5), StratumSpec(6, 10))
    tweets = [make_tweet(f"t{i}", n_replies=6 + i % 5, n_counter=1 + i % 4) for i in range(12)]
    tweets.append(make_tweet("only", n_replies=3))
    partition = assign_strata(Corpus(tweets=tweets), strata)
    assignments, notes = group_partition(partition)
    assert len(notes) == 1
    assert "[3, 5]" in notes[0]
    assert {a.stratum for a in assignments} == {strata[1]}


def test_assignment_invariant_under_permutation():
    rng = random.Random(5)
    tweets = [
        make_tweet(f"t{i}", n_replies=3 + i % 48, n_counter=(i * 7) % (3 + i % 48))
        for i in range(160)
    ]
    shuffled = tweets[:]
    rng.shuffle(shuffled)
    a, _ = group_partition(assign_strata(Corpus(tweets=tweets)))
    b, _ = group_partition(assign_strata(Corpus(tweets=shuffled)))
    assert {(x.tweet_id, x.stratum, x.group) for x in a} == {
        (x.tweet_id, x.stratum, x.group) for x in b
    }


def attribute_extractor(values):
    def extract(tweet):
        return values.get(tweet.id)

    return extract


def test_compare_attribute_single_stratum_matches_stats():
    spec = StratumSpec(46, 50)
    tweets = [make_tweet(f"t{k}", n_replies=48, n_counter=k) for k in range(1, 17)]
    by_id = {t.id: t for t in tweets}
    assignments = group_quartiles(spec, tweets)
    rng = np.random.default_rng(2)
    values = {}
    high_vals, low_vals = [], []
    for a in assignments:
        value = float(rng.normal(3.0 if a.group is Group.HIGHLY_COUNTERED else 1.0, 0.5))
        values[a.tweet_id] = value
        if a.group is Group.HIGHLY_COUNTERED:
            high_vals.append(value)
        elif a.group is Group.LOW_COUNTERED:
            low_vals.append(value)
    comparison = compare_attribute(attribute_extractor(values), assignments, by_id, "attr")
    report = comparison.strata[0]
    want = welch_t(high_vals, low_vals)
    assert report.n_high == len(high_vals)
    assert report.n_low == len(low_vals)
    assert report.t == pytest.approx(want.t, abs=1e-12)
    assert report.p == pytest.approx(want.p, abs=1e-12)
    assert report.cohen_d == pytest.approx(cohen_d(high_vals, low_vals), abs=1e-12)
    assert report.mean_high == pytest.approx(sum(high_vals) / len(high_vals))
    assert comparison.pooled_p == pytest.approx(want.p, abs=1e-12)
    assert comparison.average_cohen_d == pytest.approx(report.cohen_d, abs=1e-12)


def test_compare_attribute_drops_missing_values():
    spec = StratumSpec(46, 50)
    tweets = [make_tweet(f"t{k}", n_replies=48, n_counter=k) for k in range(1, 13)]
    by_id = {t.id: t for t in tweets}
    assignments = group_quartiles(spec, tweets)
    values = {t.id: 1.0 + i * 0.1 for i, t in enumerate(tweets)}
    high_ids = [a.tweet_id for a in assignments if a.group is Group.HIGHLY_COUNTERED]
    values[high_ids[0]] = None
    comparison = compare_attribute(attribute_extractor(values), assignments, by_id, "attr")
    assert comparison.strata[0].n_high == len(high_ids) - 1


def test_compare_attribute_small_groups_not_computed():
    spec = StratumSpec(3, 5)
    tweets = [make_tweet(f"t{k}", n_replies=4, n_counter=min(k, 4)) for k in range(4)]
    by_id = {t.id: t for t in tweets}
    assignments = group_quartiles(spec, tweets)
    values = {t.id: float(i) for i, t in enumerate(tweets)}
    comparison = compare_attribute(attribute_extractor(values), assignments, by_id, "attr")
    report = comparison.strata[0]
    assert not report.computed
    assert report.note == "group too small"
    assert comparison.pooled_p is None


def test_planted_shift_is_detectable():
    # one-sigma-wide groups separated by a full unit: d = 1 / 0.1 = 10
    rng = np.random.default_rng(11)
    strata = (StratumSpec(3, 5), StratumSpec(6, 10))
    tweets, values = [], {}
    assignments = []
    from socorr.strata import GroupAssignment

    for s_index, spec in enumerate(strata):
        for i in range(60):
            tweet = make_tweet(f"s{s_index}_{i}", n_replies=spec.lower)
            tweets.append(tweet)
            group = Group.HIGHLY_COUNTERED if i % 2 else Group.LOW_COUNTERED
            assignments.append(GroupAssignment(tweet.id, spec, group))
            mu = 1.0 if group is Group.HIGHLY_COUNTERED else 0.0
            values[tweet.id] = float(rng.normal(mu, 0.1))
    by_id = {t.id: t for t in tweets}
    comparison = compare_attribute(attribute_extractor(values), assignments, by_id, "attr")
    assert comparison.pooled_p < 0.001
    assert comparison.average_cohen_d > 2.0


def test_significant_attributes_sorted_and_strict():
    from socorr.strata import AttributeComparison

    comparisons = [
        AttributeComparison("zeta", (), 0.0005, 1.0),
        AttributeComparison("alpha", (), 0.0009, 1.0),
        AttributeComparison("mid", (), 0.001, 1.0),
        AttributeComparison("none", (), None, None),
    ]
    assert significant_attributes(comparisons, alpha=0.001) == ["alpha", "zeta"]


def test_quantile_matches_numpy():
    rng = np.random.default_rng(4)
    for _ in range(50):
        data = rng.normal(size=rng.integers(1, 40)).tolist()
        for q in (0.0, 0.25, 0.5, 0.75, 1.0, 0.13):
            assert quantile(data, q) == pytest.approx(
                float(np.quantile(data, q)), abs=1e-12
            )
    with pytest.raises(ValueError):
        quantile([], 0.5)
    with pytest.raises(ValueError):
        quantile([1.0], 1.5)
