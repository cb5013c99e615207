"""Engagement attributes and 7-day poster-history attributes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .corpus import DEFAULT_KEYWORDS, HistoryPost, PosterProfile, TweetRecord, keyword_match
from .textfeat import UndefinedReadability, ari

SECONDS_PER_DAY = 86_400
WINDOW_DAYS = 7
WINDOW_SECONDS = WINDOW_DAYS * SECONDS_PER_DAY


@dataclass(frozen=True)
class EngagementFeatures:
    reply_count: int
    like_count: int
    retweet_count: int
    quote_count: int
    likes_per_reply: float
    rts_per_reply: float
    qts_per_reply: float


@dataclass(frozen=True)
class PosterFeatures:
    follower_count: int
    following_count: int
    verified01: int
    total_tweet_count: int
    avg_tweets_per_day_7d: float
    median_likes_7d: float
    median_rts_7d: float
    vaccine_tweet_count_7d: int
    misinfo_proportion_7d: float | None


def engagement_features(tweet: TweetRecord) -> EngagementFeatures:
    """Raw engagement counts and their per-reply ratios."""
    n = tweet.reply_count
    if n < 1:
        raise ValueError(f"tweet {tweet.id!r} has no replies; ratios undefined")
    return EngagementFeatures(
        reply_count=n,
        like_count=tweet.like_count,
        retweet_count=tweet.retweet_count,
        quote_count=tweet.quote_count,
        likes_per_reply=tweet.like_count / n,
        rts_per_reply=tweet.retweet_count / n,
        qts_per_reply=tweet.quote_count / n,
    )


def lower_median(values: Sequence[float]) -> float:
    """Median taking the lower middle element for even-length input."""
    if not values:
        raise ValueError("median of empty sample")
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


def window_posts(profile: PosterProfile, misinfo_time: int) -> list[HistoryPost]:
    """History posts in the half-open window [misinfo_time - 7d, misinfo_time)."""
    start = misinfo_time - WINDOW_SECONDS
    return [p for p in profile.history if start <= p.created_at < misinfo_time]


def poster_features(
    profile: PosterProfile,
    misinfo_time: int,
    keywords: Iterable[str] = DEFAULT_KEYWORDS,
    misinfo_predictor: Callable[[str], bool] | None = None,
) -> PosterFeatures:
    """Profile attributes plus aggregates over the 7-day pre-post window.

    An empty window yields zero counts and medians; the misinformation
    proportion is None exactly when the window has no keyword-matching
    posts. The result does not depend on history ordering.
    """
    posts = window_posts(profile, misinfo_time)
    vaccine_posts = [p for p in posts if keyword_match(p.text, keywords)]
    proportion: float | None = None
    if vaccine_posts:
        if misinfo_predictor is None:
            raise ValueError("misinfo_predictor required when the window has keyword posts")
        flagged = sum(1 for p in vaccine_posts if misinfo_predictor(p.text))
        proportion = flagged / len(vaccine_posts)
    return PosterFeatures(
        follower_count=profile.follower_count,
        following_count=profile.following_count,
        verified01=int(profile.verified),
        total_tweet_count=profile.total_tweet_count,
        avg_tweets_per_day_7d=len(posts) / WINDOW_DAYS,
        median_likes_7d=lower_median([p.like_count for p in posts]) if posts else 0.0,
        median_rts_7d=lower_median([p.retweet_count for p in posts]) if posts else 0.0,
        vaccine_tweet_count_7d=len(vaccine_posts),
        misinfo_proportion_7d=proportion,
    )


def user_ari(profile: PosterProfile) -> float | None:
    """Mean readability over history posts where ARI is defined; None if none."""
    scores: list[float] = []
    for post in profile.history:
        try:
            scores.append(ari(post.text))
        except UndefinedReadability:
            continue
    if not scores:
        return None
    return sum(scores) / len(scores)
