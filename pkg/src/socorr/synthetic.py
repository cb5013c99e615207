"""Deterministic synthetic corpus generation with plantable signals.

The generator builds a full corpus (tweets, replies, poster profiles with
7-day histories) around a latent per-tweet counter intensity. Knobs plant
measurable structure on top of noise:

- anger_enrichment: anger-word rate in the tweet text rises with intensity,
  so high-p(m) tweets carry roughly +1 standard deviation more anger terms.
- rq1_signal / rq2_signal: marker vocabularies correlated with the realized
  countered flag (rq1) and with the latent counter-proportion quartile
  (rq2); tokens flip to the opposing pool with probability
  FLIP_NOISE * (1 - signal).
- poster_signal: follower count and 7-day posting rate rise with intensity.
- countered_by_education: ties counter intensity to the poster's readability
  target (decreasing in ARI) instead of drawing it uniformly.
- labeled_fraction: fraction of replies that keep their counter label; the
  rest are emitted unlabeled for label-propagation runs.

Reply counts are a heavy-tailed mixture that exercises every downstream
filter: a below-floor slice, a reply-restricted slice, and a top tail that
the percentile trim removes.
"""

from __future__ import annotations

import math
import random

from .corpus import Corpus, HistoryPost, PosterProfile, ReplyRecord, TweetRecord, parse_timestamp

BASE_TIME = parse_timestamp("2021-06-01T00:00:00Z")
FLIP_NOISE = 0.35
INTENSITY_LO = 0.05
INTENSITY_HI = 0.95
# latent quartile cutoffs of Uniform(INTENSITY_LO, INTENSITY_HI)
_RQ2_LOW_CUT = 0.275
_RQ2_HIGH_CUT = 0.725

# attributes the generator makes separable between Highly and Low Countered
PLANTED_ANALYSIS_ATTRIBUTES: tuple[str, ...] = (
    "lex:anger",
    "avg_tweets_per_day_7d",
    "follower_count",
)

ANGER_WORDS: tuple[str, ...] = (
    "angry",
    "furious",
    "outraged",
    "livid",
    "irate",
    "fuming",
    "mad",
    "hateful",
    "rage",
    "hate",
)
FILLER_WORDS: tuple[str, ...] = (
    "the",
    "a",
    "this",
    "that",
    "new",
    "latest",
    "report",
    "update",
    "from",
    "local",
    "official",
    "media",
    "story",
    "claims",
    "study",
    "data",
    "research",
    "about",
    "more",
    "vaccine",
)
COUNTERED_MARKERS: tuple[str, ...] = (
    "microchip",
    "nanobots",
    "plandemic",
    "shedding",
    "magnetized",
    "depopulation",
)
UNCOUNTERED_MARKERS: tuple[str, ...] = (
    "appointment",
    "reminder",
    "schedule",
    "newsletter",
    "weather",
    "recipe",
)
HIGH_PROPORTION_MARKERS: tuple[str, ...] = (
    "bioweapon",
    "tyranny",
    "sheeple",
    "globalist",
    "nuremberg",
    "agenda",
)
LOW_PROPORTION_MARKERS: tuple[str, ...] = (
    "gardening",
    "crochet",
    "podcast",
    "playlist",
    "marathon",
    "brunch",
)
COUNTER_REPLY_WORDS: tuple[str, ...] = (
    "false",
    "misinformation",
    "lie",
    "debunked",
    "fact",
    "check",
    "wrong",
    "source",
    "fake",
    "misleading",
)
SUPPORT_REPLY_WORDS: tuple[str, ...] = (
    "agree",
    "exactly",
    "true",
    "totally",
    "thanks",
    "sharing",
    "this",
    "love",
    "absolutely",
    "finally",
)

_ARI_CONSONANTS = "bcdfghjklmnpqrstvwz"
_ARI_WORDS_PER_SENTENCE = 8
_HISTORY_KEYWORD = "vaccines"
SECONDS_PER_DAY = 86_400
_WINDOW_SECONDS = 7 * SECONDS_PER_DAY


def _poisson(rng: random.Random, lam: float) -> int:
    """Knuth's product method; fine for the small rates used here."""
    bound = math.exp(-lam)
    count = 0
    product = rng.random()
    while product > bound:
        count += 1
        product *= rng.random()
    return count


def _clamp(value: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, value))


def _marker(rng: random.Random, pools: tuple[tuple[str, ...], tuple[str, ...]], hit: bool, signal: float) -> str:
    """Token from the pool matching `hit`, flipped with the residual noise."""
    if rng.random() < FLIP_NOISE * (1.0 - signal):
        hit = not hit
    return rng.choice(pools[0] if hit else pools[1])


def _ari_sentence(rng: random.Random, target_ari: float, extra_word: str | None = None) -> str:
    """One-sentence text whose readability lands on target_ari.

    With W words in one sentence the index is 4.71*(chars/W) + 0.5*W - 21.43,
    so the total character budget is solved exactly and split across
    synthetic words (an optional real word is charged against the budget).
    """
    words_total = _ARI_WORDS_PER_SENTENCE
    budget = round(words_total * (target_ari + 21.43 - 0.5 * words_total) / 4.71)
    words: list[str] = []
    if extra_word is not None:
        words.append(extra_word)
        budget -= len(extra_word)
    slots = words_total - len(words)
    base, leftover = divmod(max(budget, 2 * slots), slots)
    for slot in range(slots):
        length = base + (1 if slot < leftover else 0)
        words.append("".join(rng.choice(_ARI_CONSONANTS) for _ in range(length)))
    rng.shuffle(words)
    return " ".join(words) + "."


def _reply_count(rng: random.Random) -> tuple[int, str]:
    """Heavy-tailed (count, reply_setting) mixture covering all filter paths."""
    u = rng.random()
    if u < 0.03:
        return rng.randint(3, 30), "restricted"
    if u < 0.10:
        return rng.randint(0, 2), "everyone"
    if u < 0.12:
        return rng.randint(60, 200), "everyone"
    if u < 0.32:
        return rng.randint(3, 50), "everyone"
    return 3 + min(47, int(rng.expovariate(1.0 / 6.0))), "everyone"


def _tweet_text(
    rng: random.Random,
    intensity: float,
    countered: bool,
    anger_enrichment: float,
    rq1_signal: float,
    rq2_signal: float,
) -> str:
    words = [rng.choice(FILLER_WORDS) for _ in range(10)]
    anger_rate = 0.04 + 0.30 * anger_enrichment * intensity
    for _ in range(6):
        if rng.random() < anger_rate:
            words.append(rng.choice(ANGER_WORDS))
    for _ in range(3):
        words.append(_marker(rng, (COUNTERED_MARKERS, UNCOUNTERED_MARKERS), countered, rq1_signal))
    if countered and intensity >= _RQ2_HIGH_CUT:
        for _ in range(2):
            words.append(_marker(rng, (HIGH_PROPORTION_MARKERS, LOW_PROPORTION_MARKERS), True, rq2_signal))
    elif countered and intensity <= _RQ2_LOW_CUT:
        for _ in range(2):
            words.append(_marker(rng, (HIGH_PROPORTION_MARKERS, LOW_PROPORTION_MARKERS), False, rq2_signal))
    rng.shuffle(words)
    return " ".join(words) + "."


def _replies(
    rng: random.Random, tweet_id: str, count: int, intensity: float, labeled_fraction: float
) -> tuple[list[ReplyRecord], bool]:
    replies: list[ReplyRecord] = []
    any_counter = False
    for j in range(count):
        counter = rng.random() < intensity
        any_counter = any_counter or counter
        pool = COUNTER_REPLY_WORDS if counter else SUPPORT_REPLY_WORDS
        text = " ".join(rng.choice(pool) for _ in range(4)) + "."
        label: bool | None = counter
        if rng.random() >= labeled_fraction:
            label = None
        replies.append(ReplyRecord(id=f"{tweet_id}_r{j}", text=text, parent_id=tweet_id, counter_label=label))
    return replies, any_counter


def _poster(
    rng: random.Random,
    user_id: str,
    tweet_time: int,
    intensity: float,
    poster_signal: float,
    target_ari: float,
) -> PosterProfile:
    followers = max(1, int(150 + 1500 * poster_signal * intensity + rng.gauss(0.0, 120.0)))
    window_count = _poisson(rng, 3.0 + 9.0 * poster_signal * intensity)
    history: list[HistoryPost] = []
    for _ in range(window_count):
        keyword = _HISTORY_KEYWORD if rng.random() < 0.5 else None
        history.append(
            HistoryPost(
                text=_ari_sentence(rng, target_ari, keyword),
                created_at=tweet_time - rng.randint(1, _WINDOW_SECONDS),
                like_count=rng.randint(0, 50),
                retweet_count=rng.randint(0, 20),
            )
        )
    for _ in range(3):
        history.append(
            HistoryPost(
                text=_ari_sentence(rng, target_ari),
                created_at=tweet_time - rng.randint(8, 30) * SECONDS_PER_DAY,
                like_count=rng.randint(0, 50),
                retweet_count=rng.randint(0, 20),
            )
        )
    return PosterProfile(
        user_id=user_id,
        account_created_at=tweet_time - rng.randint(100, 2000) * SECONDS_PER_DAY,
        verified=rng.random() < 0.1,
        follower_count=followers,
        following_count=rng.randint(50, 1500),
        total_tweet_count=rng.randint(200, 20_000),
        history=history,
    )


def synthetic_corpus(
    n_tweets: int = 2000,
    seed: int = 0,
    *,
    anger_enrichment: float = 1.0,
    rq1_signal: float = 1.0,
    rq2_signal: float = 1.0,
    poster_signal: float = 1.0,
    labeled_fraction: float = 1.0,
    countered_by_education: float = 0.0,
) -> Corpus:
    """Build a corpus of n_tweets with one poster per tweet.

    All randomness comes from a single seeded generator, so equal arguments
    reproduce the corpus exactly.
    """
    if n_tweets < 1:
        raise ValueError("n_tweets must be positive")
    for name, value in (
        ("anger_enrichment", anger_enrichment),
        ("rq1_signal", rq1_signal),
        ("rq2_signal", rq2_signal),
        ("poster_signal", poster_signal),
        ("countered_by_education", countered_by_education),
    ):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1]")
    if not 0.0 < labeled_fraction <= 1.0:
        raise ValueError("labeled_fraction must lie in (0, 1]")

    rng = random.Random(seed)
    corpus = Corpus()
    for i in range(n_tweets):
        tweet_id = f"t{i:05d}"
        user_id = f"u{i:05d}"
        tweet_time = BASE_TIME + i * 3600 + rng.randint(0, 3599)
        target_ari = rng.uniform(2.0, 16.0)
        uniform_intensity = rng.uniform(INTENSITY_LO, INTENSITY_HI)
        education_intensity = _clamp(1.0 - 0.065 * target_ari, 0.02, 0.98)
        intensity = (
            countered_by_education * education_intensity
            + (1.0 - countered_by_education) * uniform_intensity
        )
        count, setting = _reply_count(rng)
        replies, countered = _replies(rng, tweet_id, count, intensity, labeled_fraction)
        text = _tweet_text(rng, intensity, countered, anger_enrichment, rq1_signal, rq2_signal)
        corpus.tweets.append(
            TweetRecord(
                id=tweet_id,
                text=text,
                author_id=user_id,
                created_at=tweet_time,
                like_count=rng.randint(0, 400),
                retweet_count=rng.randint(0, 150),
                quote_count=rng.randint(0, 40),
                reply_setting=setting,
                replies=replies,
            )
        )
        corpus.posters[user_id] = _poster(rng, user_id, tweet_time, intensity, poster_signal, target_ari)
    return corpus
