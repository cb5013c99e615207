"""Tweet linguistic attributes: tokens, sentiment, politeness, categories, ARI."""

from __future__ import annotations

from dataclasses import dataclass

from .categories import CategoryLexicon, category_counts, load_category_lexicon
from .politeness import (
    NEGATIVE_STRATEGIES,
    POSITIVE_STRATEGIES,
    PolitenessProfile,
    politeness_profile,
)
from .readability import UndefinedReadability, ari
from .sentiment import (
    SentimentScores,
    load_valence_lexicon,
    normalize_valence,
    vader_scores,
)
from .tokens import is_word_token, sentence_split, tokenize, word_tokens

__all__ = [
    "CategoryLexicon",
    "LinguisticFeatures",
    "NEGATIVE_STRATEGIES",
    "POSITIVE_STRATEGIES",
    "PolitenessProfile",
    "SentimentScores",
    "UndefinedReadability",
    "ari",
    "category_counts",
    "is_word_token",
    "linguistic_features",
    "load_category_lexicon",
    "load_valence_lexicon",
    "normalize_valence",
    "politeness_profile",
    "sentence_split",
    "tokenize",
    "vader_scores",
    "word_tokens",
]


@dataclass(frozen=True)
class LinguisticFeatures:
    word_count: int
    sentiment: SentimentScores
    politeness: PolitenessProfile
    category_counts: dict[str, int]
    ari: float | None


def linguistic_features(
    text: str,
    valence_lexicon: dict[str, float],
    category_lexicon: CategoryLexicon,
) -> LinguisticFeatures:
    """Bundle the per-tweet linguistic attributes.

    word_count is the full token count of the tokenizer. Category matching
    case-folds tokens; ARI is None when undefined for the text.
    """
    tokens = tokenize(text)
    try:
        readability = ari(text)
    except UndefinedReadability:
        readability = None
    return LinguisticFeatures(
        word_count=len(tokens),
        sentiment=vader_scores(text, valence_lexicon),
        politeness=politeness_profile(text),
        category_counts=category_counts([t.casefold() for t in tokens], category_lexicon),
        ari=readability,
    )
