"""Category lexicon parsing and counting, checked against a naive recount."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from socorr.textfeat import CategoryLexicon, category_counts, load_category_lexicon


def naive_counts(tokens, raw_categories):
    """Brute-force recount straight from the pattern definitions."""
    counts = {}
    for name, patterns in raw_categories.items():
        hits = 0
        for token in tokens:
            matched = False
            for pattern in patterns:
                folded = pattern.casefold()
                if folded.endswith("*"):
                    matched = token.startswith(folded[:-1])
                else:
                    matched = token == folded
                if matched:
                    break
            hits += matched
        counts[name] = hits
    return counts


SAMPLE = {
    "anger": ["rage*", "mad", "hate*"],
    "calm": ["calm", "seren*"],
    "overlap": ["mad", "ma*"],
}


def test_literal_and_prefix_match():
    lexicon = CategoryLexicon(SAMPLE)
    assert lexicon.match("mad") == frozenset({"anger", "overlap"})
    assert lexicon.match("rager") == frozenset({"anger"})
    assert lexicon.match("rage") == frozenset({"anger"})
    assert lexicon.match("serene") == frozenset({"calm"})
    assert lexicon.match("zen") == frozenset()


def test_token_counts_once_per_category():
    lexicon = CategoryLexicon(SAMPLE)
    # "mad" matches both the literal and the prefix of "overlap" once
    assert category_counts(["mad"], lexicon)["overlap"] == 1


def test_all_categories_present_in_result():
    lexicon = CategoryLexicon(SAMPLE)
    counts = category_counts([], lexicon)
    assert set(counts) == set(SAMPLE)
    assert all(v == 0 for v in counts.values())


def test_patterns_stored_case_folded():
    lexicon = CategoryLexicon({"x": ["HaTe*"]})
    assert lexicon.match("hateful") == frozenset({"x"})
    # tokens are matched as given; callers fold them first
    assert lexicon.match("HATEFUL") == frozenset()


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        CategoryLexicon({"": ["a"]})
    with pytest.raises(ValueError):
        CategoryLexicon({"x": ["*"]})
    with pytest.raises(ValueError):
        CategoryLexicon({"x": ["a*b"]})


def test_load_category_lexicon(tmp_path):
    path = tmp_path / "cats.txt"
    path.write_text("# header\n[anger]\nrage*\nmad\n\n[calm]\ncalm\n", encoding="utf-8")
    lexicon = load_category_lexicon(path)
    assert lexicon.names == ("anger", "calm")
    assert lexicon.categories["anger"] == ("rage*", "mad")


def test_load_rejects_malformed_files(tmp_path):
    cases = {
        "orphan.txt": "mad\n[anger]\n",
        "dup.txt": "[a]\nx\n[a]\ny\n",
        "empty_header.txt": "[]\nx\n",
    }
    for name, body in cases.items():
        path = tmp_path / name
        path.write_text(body, encoding="utf-8")
        with pytest.raises(ValueError):
            load_category_lexicon(path)


def test_counts_match_naive_recount_on_bundled_lexicon(categories):
    rng = random.Random(0)
    pool = ["rage", "raged", "mad", "madden", "love", "zzz", "hate", "hateful", "we"]
    for _ in range(300):
        tokens = [rng.choice(pool) for _ in range(rng.randint(0, 10))]
        assert category_counts(tokens, categories) == naive_counts(tokens, categories.categories)


@given(
    st.lists(
        st.text(alphabet="abcdehmrstz", min_size=1, max_size=7), max_size=10
    )
)
def test_counts_match_naive_recount_random_tokens(tokens):
    lexicon = CategoryLexicon(SAMPLE)
    assert category_counts(tokens, lexicon) == naive_counts(tokens, SAMPLE)
