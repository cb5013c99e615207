"""Tokenizer and sentence splitter behavior."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from socorr.textfeat import is_word_token, sentence_split, tokenize, word_tokens


def test_plain_words():
    assert tokenize("the cat sat") == ["the", "cat", "sat"]


def test_edge_punctuation_peels_off():
    assert tokenize("Hello, world!") == ["Hello", ",", "world", "!"]
    assert tokenize('"quoted"') == ['"', "quoted", '"']


def test_interior_punctuation_stays():
    assert tokenize("don't over-react") == ["don't", "over-react"]


def test_urls_kept_whole():
    assert tokenize("see https://x.co/a?b=1, ok") == ["see", "https://x.co/a?b=1,", "ok"]
    assert tokenize("WWW.example.com") == ["WWW.example.com"]


def test_mentions_keep_at_sign():
    assert tokenize("@user123: hi") == ["@user123", ":", "hi"]
    assert tokenize("cc @a-b,") == ["cc", "@a-b", ","]


def test_lone_at_sign():
    assert tokenize("@ x") == ["@", "x"]


def test_empty_and_whitespace():
    assert tokenize("") == []
    assert tokenize("   \t\n ") == []


def test_is_word_token():
    assert is_word_token("cat")
    assert is_word_token("don't")
    assert is_word_token("3")
    assert not is_word_token("!")
    assert not is_word_token("...")


def test_word_tokens_filters_punctuation():
    assert word_tokens("Hi, there!") == ["Hi", "there"]


def test_sentence_split_basic():
    assert sentence_split("One. Two! Three?") == ["One", "Two", "Three"]


def test_sentence_split_runs_collapse():
    assert sentence_split("What?! Really...") == ["What", "Really"]


def test_sentence_split_no_terminator():
    assert sentence_split("no terminator here") == ["no terminator here"]


def test_sentence_split_empty():
    assert sentence_split("") == []
    assert sentence_split("...") == []


@given(st.text(max_size=200))
def test_tokens_preserve_non_whitespace(text):
    # every chunk is rebuilt exactly from its tokens
    assert "".join(tokenize(text)) == "".join(text.split())


@given(st.text(max_size=200))
def test_word_tokens_subset_of_tokens(text):
    tokens = tokenize(text)
    assert [t for t in tokens if is_word_token(t)] == word_tokens(text)
