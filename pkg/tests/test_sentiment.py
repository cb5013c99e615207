"""Rule-based sentiment scoring: closed-form oracles for each rule."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from socorr.textfeat import SentimentScores, load_valence_lexicon, normalize_valence, vader_scores
from socorr.textfeat.sentiment import (
    BOOSTER_STEP,
    CAPS_EMPHASIS,
    EXCLAIM_STEP,
    MAX_EXCLAIM,
    NEGATION_SCALAR,
)


def norm(total: float) -> float:
    return total / math.sqrt(total * total + 15.0)


def test_normalize_valence_closed_form():
    for value in (-8.0, -1.0, 0.0, 0.5, 3.3, 20.0):
        assert normalize_valence(value) == pytest.approx(norm(value), abs=1e-12)
    assert normalize_valence(0.0) == 0.0


def test_single_token_compound(valence):
    for token in ("good", "great", "bad", "hate"):
        value = valence[token]
        scores = vader_scores(token, valence)
        assert scores.compound == pytest.approx(norm(value), abs=1e-9)


def test_single_positive_token_ratios(valence):
    scores = vader_scores("good", valence)
    assert (scores.positive, scores.negative, scores.neutral) == (1.0, 0.0, 0.0)


def test_single_negative_token_ratios(valence):
    scores = vader_scores("bad", valence)
    assert (scores.positive, scores.negative, scores.neutral) == (0.0, 1.0, 0.0)


def test_negation_closed_form(valence):
    value = valence["good"]
    scores = vader_scores("not good", valence)
    assert scores.compound == pytest.approx(norm(NEGATION_SCALAR * value), abs=1e-9)


def test_negation_lookback_window(valence):
    value = valence["good"]
    # two unknown fillers still inside the 3-token lookback
    within = vader_scores("not zzz qqq good", valence)
    assert within.compound == pytest.approx(norm(NEGATION_SCALAR * value), abs=1e-9)
    # three fillers push the negator out of range
    outside = vader_scores("not zzz qqq ppp good", valence)
    assert outside.compound == pytest.approx(norm(value), abs=1e-9)


def test_booster_amplifies(valence):
    value = valence["good"]
    scores = vader_scores("very good", valence)
    assert scores.compound == pytest.approx(norm(value + BOOSTER_STEP), abs=1e-9)


def test_dampener_reduces(valence):
    value = valence["good"]
    scores = vader_scores("slightly good", valence)
    assert scores.compound == pytest.approx(norm(value - BOOSTER_STEP), abs=1e-9)


def test_booster_on_negative_token(valence):
    value = valence["bad"]
    scores = vader_scores("very bad", valence)
    assert scores.compound == pytest.approx(norm(value - BOOSTER_STEP), abs=1e-9)


def test_caps_emphasis_needs_mixed_case(valence):
    value = valence["good"]
    mixed = vader_scores("GOOD day", valence)
    assert mixed.compound == pytest.approx(norm(value + CAPS_EMPHASIS), abs=1e-9)
    # an all-caps text gets no differential emphasis
    uniform = vader_scores("GOOD", valence)
    assert uniform.compound == pytest.approx(norm(value), abs=1e-9)


def test_exclamation_amplifies_and_caps_at_three(valence):
    value = valence["good"]
    one = vader_scores("good!", valence)
    assert one.compound == pytest.approx(norm(value + EXCLAIM_STEP), abs=1e-9)
    many = vader_scores("good!!!!!!", valence)
    assert many.compound == pytest.approx(norm(value + MAX_EXCLAIM * EXCLAIM_STEP), abs=1e-9)


def test_exclamation_pushes_negative_total_down(valence):
    value = valence["bad"]
    scores = vader_scores("bad!", valence)
    assert scores.compound == pytest.approx(norm(value - EXCLAIM_STEP), abs=1e-9)


def test_unknown_tokens_are_neutral(valence):
    assert vader_scores("zzz qqq", valence) == SentimentScores(0.0, 0.0, 1.0, 0.0)


def test_empty_text(valence):
    scores = vader_scores("", valence)
    assert scores.compound == 0.0
    assert scores.positive == scores.negative == scores.neutral == 0.0


def test_ratios_sum_to_one(valence):
    scores = vader_scores("good bad zzz", valence)
    assert scores.positive + scores.negative + scores.neutral == pytest.approx(1.0)


@given(st.lists(st.sampled_from(["good", "bad", "great", "zzz", "not", "very"]), max_size=12))
def test_compound_bounded(tokens):
    lexicon = {"good": 1.9, "bad": -2.5, "great": 3.1}
    scores = vader_scores(" ".join(tokens), lexicon)
    assert -1.0 <= scores.compound <= 1.0


def test_load_valence_lexicon(tmp_path):
    path = tmp_path / "valence.tsv"
    path.write_text("# comment\nGood\t1.9\n\nbad\t-2.5\n", encoding="utf-8")
    lexicon = load_valence_lexicon(path)
    assert lexicon == {"good": 1.9, "bad": -2.5}


def test_load_valence_lexicon_rejects_bad_rows(tmp_path):
    for body in ("good 1.9\n", "good\tx\n", "good\t9.5\n"):
        path = tmp_path / "bad.tsv"
        path.write_text(body, encoding="utf-8")
        with pytest.raises(ValueError):
            load_valence_lexicon(path)
