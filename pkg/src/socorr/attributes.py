"""Registry of the per-tweet analysis attributes and batch featurization.

Attribute families: 4 length/sentiment, 2 politeness, one "lex:<name>" per
category-lexicon category, 7 engagement, 9 poster. Values are floats, or
None when unavailable (no poster profile; no keyword posts in the window).
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .corpus import Corpus, DEFAULT_KEYWORDS, TweetRecord
from .signals import EngagementFeatures, PosterFeatures, engagement_features, poster_features
from .textfeat import CategoryLexicon, LinguisticFeatures, linguistic_features

LENGTH_SENTIMENT_ATTRIBUTES: tuple[str, ...] = (
    "word_count",
    "vader_pos",
    "vader_neg",
    "vader_compound",
)
POLITENESS_ATTRIBUTES: tuple[str, ...] = ("politeness", "impoliteness")
ENGAGEMENT_ATTRIBUTES: tuple[str, ...] = (
    "reply_count",
    "like_count",
    "retweet_count",
    "quote_count",
    "likes_per_reply",
    "rts_per_reply",
    "qts_per_reply",
)
POSTER_ATTRIBUTES: tuple[str, ...] = (
    "follower_count",
    "following_count",
    "verified",
    "total_tweet_count",
    "avg_tweets_per_day_7d",
    "median_likes_7d",
    "median_rts_7d",
    "vaccine_tweet_count_7d",
    "misinfo_proportion_7d",
)
CATEGORY_PREFIX = "lex:"

# reported but never fed to models: the only attribute that can be missing
# on tweets whose poster profile resolves
MODEL_INELIGIBLE: frozenset[str] = frozenset({"misinfo_proportion_7d"})
UNSCALED_ATTRIBUTES: frozenset[str] = frozenset({"verified"})


def category_attribute(name: str) -> str:
    return CATEGORY_PREFIX + name


def attribute_names(category_names: Sequence[str]) -> tuple[str, ...]:
    """Full registry in report order."""
    return (
        LENGTH_SENTIMENT_ATTRIBUTES
        + POLITENESS_ATTRIBUTES
        + tuple(category_attribute(c) for c in category_names)
        + ENGAGEMENT_ATTRIBUTES
        + POSTER_ATTRIBUTES
    )


def family_counts(category_names: Sequence[str]) -> dict[str, int]:
    return {
        "length_sentiment": len(LENGTH_SENTIMENT_ATTRIBUTES),
        "politeness": len(POLITENESS_ATTRIBUTES),
        "categories": len(category_names),
        "engagement": len(ENGAGEMENT_ATTRIBUTES),
        "poster": len(POSTER_ATTRIBUTES),
    }


def attribute_values(
    linguistic: LinguisticFeatures,
    engagement: EngagementFeatures,
    poster: PosterFeatures | None,
) -> dict[str, float | None]:
    """Flatten the three feature bundles into the named attribute map."""
    values: dict[str, float | None] = {
        "word_count": float(linguistic.word_count),
        "vader_pos": linguistic.sentiment.positive,
        "vader_neg": linguistic.sentiment.negative,
        "vader_compound": linguistic.sentiment.compound,
        "politeness": float(linguistic.politeness.politeness_score),
        "impoliteness": float(linguistic.politeness.impoliteness_score),
    }
    for name, count in linguistic.category_counts.items():
        values[category_attribute(name)] = float(count)
    values.update(
        reply_count=float(engagement.reply_count),
        like_count=float(engagement.like_count),
        retweet_count=float(engagement.retweet_count),
        quote_count=float(engagement.quote_count),
        likes_per_reply=engagement.likes_per_reply,
        rts_per_reply=engagement.rts_per_reply,
        qts_per_reply=engagement.qts_per_reply,
    )
    if poster is None:
        values.update(dict.fromkeys(POSTER_ATTRIBUTES, None))
    else:
        values.update(
            follower_count=float(poster.follower_count),
            following_count=float(poster.following_count),
            verified=float(poster.verified01),
            total_tweet_count=float(poster.total_tweet_count),
            avg_tweets_per_day_7d=poster.avg_tweets_per_day_7d,
            median_likes_7d=float(poster.median_likes_7d),
            median_rts_7d=float(poster.median_rts_7d),
            vaccine_tweet_count_7d=float(poster.vaccine_tweet_count_7d),
            misinfo_proportion_7d=poster.misinfo_proportion_7d,
        )
    return values


@dataclass(frozen=True)
class TweetFeatures:
    tweet_id: str
    attributes: dict[str, float | None]


@dataclass(frozen=True)
class _FeaturizeContext:
    valence_lexicon: dict[str, float]
    category_lexicon: CategoryLexicon
    keywords: tuple[str, ...]
    misinfo_predictor: Callable[[str], bool] | None


_WORKER_CONTEXT: _FeaturizeContext | None = None


def _init_worker(context: _FeaturizeContext) -> None:
    global _WORKER_CONTEXT
    _WORKER_CONTEXT = context


def _featurize_one(
    payload: tuple[TweetRecord, object], context: _FeaturizeContext | None = None
) -> TweetFeatures:
    tweet, profile = payload
    ctx = context or _WORKER_CONTEXT
    assert ctx is not None
    linguistic = linguistic_features(tweet.text, ctx.valence_lexicon, ctx.category_lexicon)
    engagement = engagement_features(tweet)
    poster = None
    if profile is not None:
        poster = poster_features(
            profile, tweet.created_at, ctx.keywords, ctx.misinfo_predictor
        )
    return TweetFeatures(tweet.id, attribute_values(linguistic, engagement, poster))


def featurize_corpus(
    corpus: Corpus,
    valence_lexicon: dict[str, float],
    category_lexicon: CategoryLexicon,
    keywords: Iterable[str] = DEFAULT_KEYWORDS,
    misinfo_predictor: Callable[[str], bool] | None = None,
    workers: int = 1,
) -> dict[str, dict[str, float | None]]:
    """Attribute maps for every corpus tweet, keyed by tweet id.

    Featurization is per-tweet pure, so a worker pool never changes the
    result; order follows the corpus.
    """
    context = _FeaturizeContext(
        valence_lexicon, category_lexicon, tuple(keywords), misinfo_predictor
    )
    payloads = [(t, corpus.posters.get(t.author_id)) for t in corpus.tweets]
    if workers <= 1 or len(payloads) < 2:
        features = [_featurize_one(p, context) for p in payloads]
    else:
        with multiprocessing.Pool(
            processes=workers, initializer=_init_worker, initargs=(context,)
        ) as pool:
            features = pool.map(_featurize_one, payloads, chunksize=64)
    return {f.tweet_id: f.attributes for f in features}
