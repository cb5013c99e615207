"""Post/reply/poster data model, line-delimited ingestion, and filtering rules."""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable

DEFAULT_KEYWORDS: tuple[str, ...] = (
    "vaccine",
    "pfizer",
    "moderna",
    "astrazeneca",
    "sputnik",
    "sinopharm",
)
REPLY_SETTINGS = ("everyone", "restricted")
DEFAULT_MIN_REPLIES = 3
DEFAULT_TOP_FRACTION = 0.02


class CorpusError(ValueError):
    """Fatal corpus problem: unreadable schema, duplicate ids, and the like."""


@dataclass
class ReplyRecord:
    id: str
    text: str
    parent_id: str
    counter_label: bool | None = None


@dataclass
class TweetRecord:
    id: str
    text: str
    author_id: str
    created_at: int
    like_count: int
    retweet_count: int
    quote_count: int
    reply_setting: str
    replies: list[ReplyRecord] = field(default_factory=list)

    @property
    def reply_count(self) -> int:
        return len(self.replies)


@dataclass
class HistoryPost:
    text: str
    created_at: int
    like_count: int
    retweet_count: int


@dataclass
class PosterProfile:
    user_id: str
    account_created_at: int
    verified: bool
    follower_count: int
    following_count: int
    total_tweet_count: int
    history: list[HistoryPost] = field(default_factory=list)


@dataclass(frozen=True)
class LoadDiagnostic:
    line_number: int
    reason: str


@dataclass
class Corpus:
    tweets: list[TweetRecord] = field(default_factory=list)
    posters: dict[str, PosterProfile] = field(default_factory=dict)
    diagnostics: list[LoadDiagnostic] = field(default_factory=list)

    def tweets_by_id(self) -> dict[str, TweetRecord]:
        return {t.id: t for t in self.tweets}

    def missing_profile_ids(self) -> set[str]:
        """Tweet ids whose author has no poster profile."""
        return {t.id for t in self.tweets if t.author_id not in self.posters}


def parse_timestamp(value: str) -> int:
    """ISO-8601 UTC string to integer epoch seconds (naive means UTC)."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    moment = datetime.fromisoformat(text)
    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=timezone.utc)
    return int(moment.timestamp())


def format_timestamp(epoch: int) -> str:
    return datetime.fromtimestamp(epoch, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _require(obj: dict[str, Any], key: str, kinds: tuple[type, ...]) -> Any:
    if key not in obj:
        raise ValueError(f"missing field {key!r}")
    value = obj[key]
    if isinstance(value, bool) and bool not in kinds:
        raise ValueError(f"field {key!r} has wrong type")
    if not isinstance(value, kinds):
        raise ValueError(f"field {key!r} has wrong type")
    return value


def _count(obj: dict[str, Any], key: str) -> int:
    value = _require(obj, key, (int,))
    if value < 0:
        raise ValueError(f"field {key!r} must be non-negative")
    return value


def _parse_reply(obj: Any, parent_id: str) -> ReplyRecord:
    if not isinstance(obj, dict):
        raise ValueError("reply entries must be objects")
    reply_id = _require(obj, "id", (str,))
    if not reply_id:
        raise ValueError("reply id must be non-empty")
    label = obj.get("counter_label")
    if label is not None and not isinstance(label, bool):
        raise ValueError("counter_label must be a boolean or null")
    return ReplyRecord(
        id=reply_id,
        text=_require(obj, "text", (str,)),
        parent_id=parent_id,
        counter_label=label,
    )


def _parse_tweet(obj: dict[str, Any]) -> TweetRecord:
    tweet_id = _require(obj, "id", (str,))
    if not tweet_id:
        raise ValueError("tweet id must be non-empty")
    setting = _require(obj, "reply_setting", (str,))
    if setting not in REPLY_SETTINGS:
        raise ValueError(f"unknown reply_setting {setting!r}")
    replies_obj = _require(obj, "replies", (list,))
    replies = [_parse_reply(r, tweet_id) for r in replies_obj]
    return TweetRecord(
        id=tweet_id,
        text=_require(obj, "text", (str,)),
        author_id=_require(obj, "author_id", (str,)),
        created_at=parse_timestamp(_require(obj, "created_at", (str,))),
        like_count=_count(obj, "like_count"),
        retweet_count=_count(obj, "retweet_count"),
        quote_count=_count(obj, "quote_count"),
        reply_setting=setting,
        replies=replies,
    )


def _parse_history_post(obj: Any) -> HistoryPost:
    if not isinstance(obj, dict):
        raise ValueError("history entries must be objects")
    return HistoryPost(
        text=_require(obj, "text", (str,)),
        created_at=parse_timestamp(_require(obj, "created_at", (str,))),
        like_count=_count(obj, "like_count"),
        retweet_count=_count(obj, "retweet_count"),
    )


def _parse_poster(obj: dict[str, Any]) -> PosterProfile:
    user_id = _require(obj, "user_id", (str,))
    if not user_id:
        raise ValueError("poster user_id must be non-empty")
    history_obj = _require(obj, "history", (list,))
    return PosterProfile(
        user_id=user_id,
        account_created_at=parse_timestamp(_require(obj, "account_created_at", (str,))),
        verified=_require(obj, "verified", (bool,)),
        follower_count=_count(obj, "follower_count"),
        following_count=_count(obj, "following_count"),
        total_tweet_count=_count(obj, "total_tweet_count"),
        history=[_parse_history_post(p) for p in history_obj],
    )


def load_corpus(path: str | Path) -> Corpus:
    """Read a line-delimited corpus file.

    Malformed lines are skipped and recorded as diagnostics; duplicate tweet
    or poster ids abort the load. Lines of kind "meta" (run provenance
    written by the CLI) are ignored.
    """
    corpus = Corpus()
    seen_tweets: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                corpus.diagnostics.append(LoadDiagnostic(line_no, f"invalid JSON: {exc.msg}"))
                continue
            if not isinstance(obj, dict):
                corpus.diagnostics.append(LoadDiagnostic(line_no, "record is not an object"))
                continue
            kind = obj.get("kind")
            try:
                if kind == "tweet":
                    tweet = _parse_tweet(obj)
                    if tweet.id in seen_tweets:
                        raise CorpusError(f"line {line_no}: duplicate tweet id {tweet.id!r}")
                    seen_tweets.add(tweet.id)
                    corpus.tweets.append(tweet)
                elif kind == "poster":
                    poster = _parse_poster(obj)
                    if poster.user_id in corpus.posters:
                        raise CorpusError(
                            f"line {line_no}: duplicate poster user_id {poster.user_id!r}"
                        )
                    corpus.posters[poster.user_id] = poster
                elif kind == "meta":
                    continue
                else:
                    raise ValueError(f"unknown record kind {kind!r}")
            except CorpusError:
                raise
            except ValueError as exc:
                corpus.diagnostics.append(LoadDiagnostic(line_no, str(exc)))
    return corpus


def _reply_to_json(reply: ReplyRecord) -> dict[str, Any]:
    obj: dict[str, Any] = {"id": reply.id, "text": reply.text}
    if reply.counter_label is not None:
        obj["counter_label"] = reply.counter_label
    return obj


def tweet_to_json(tweet: TweetRecord) -> dict[str, Any]:
    return {
        "kind": "tweet",
        "id": tweet.id,
        "text": tweet.text,
        "author_id": tweet.author_id,
        "created_at": format_timestamp(tweet.created_at),
        "like_count": tweet.like_count,
        "retweet_count": tweet.retweet_count,
        "quote_count": tweet.quote_count,
        "reply_setting": tweet.reply_setting,
        "replies": [_reply_to_json(r) for r in tweet.replies],
    }


def poster_to_json(poster: PosterProfile) -> dict[str, Any]:
    return {
        "kind": "poster",
        "user_id": poster.user_id,
        "account_created_at": format_timestamp(poster.account_created_at),
        "verified": poster.verified,
        "follower_count": poster.follower_count,
        "following_count": poster.following_count,
        "total_tweet_count": poster.total_tweet_count,
        "history": [
            {
                "text": p.text,
                "created_at": format_timestamp(p.created_at),
                "like_count": p.like_count,
                "retweet_count": p.retweet_count,
            }
            for p in poster.history
        ],
    }


def save_corpus(corpus: Corpus, path: str | Path, meta: dict[str, Any] | None = None) -> None:
    """Write the corpus in canonical line-delimited form (UTF-8, sorted nowhere)."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        if meta is not None:
            handle.write(json.dumps({"kind": "meta", **meta}, ensure_ascii=False) + "\n")
        for tweet in corpus.tweets:
            handle.write(json.dumps(tweet_to_json(tweet), ensure_ascii=False) + "\n")
        for poster in corpus.posters.values():
            handle.write(json.dumps(poster_to_json(poster), ensure_ascii=False) + "\n")


def filter_for_analysis(
    corpus: Corpus,
    min_replies: int = DEFAULT_MIN_REPLIES,
    top_fraction: float = DEFAULT_TOP_FRACTION,
) -> Corpus:
    """Apply the analysis filters: open replies, reply floor, top-tail trim.

    The trim threshold is the nearest-rank percentile at (1 - top_fraction)
    over the reply-open tweets before the floor is applied; tweets strictly
    above it are dropped, ties at the threshold are retained.
    """
    open_tweets = [t for t in corpus.tweets if t.reply_setting == "everyone"]
    kept = open_tweets
    if open_tweets and top_fraction > 0:
        counts = sorted(t.reply_count for t in open_tweets)
        rank = max(1, math.ceil((1.0 - top_fraction) * len(counts)))
        threshold = counts[rank - 1]
        kept = [t for t in open_tweets if t.reply_count <= threshold]
    kept = [t for t in kept if t.reply_count >= min_replies]
    if not kept:
        warnings.warn("analysis filter produced an empty corpus", stacklevel=2)
    return Corpus(tweets=kept, posters=corpus.posters, diagnostics=[])


def counter_proportion(tweet: TweetRecord) -> float:
    """Fraction of the tweet's replies that counter it."""
    if not tweet.replies:
        raise ValueError(f"tweet {tweet.id!r} has no replies")
    hits = 0
    for reply in tweet.replies:
        if reply.counter_label is None:
            raise ValueError(f"tweet {tweet.id!r} has an unlabeled reply {reply.id!r}")
        hits += reply.counter_label
    return hits / len(tweet.replies)


def label_countered(tweet: TweetRecord) -> bool:
    """True when the tweet has at least one counter-labeled reply."""
    hit = False
    for reply in tweet.replies:
        if reply.counter_label is None:
            raise ValueError(f"tweet {tweet.id!r} has an unlabeled reply {reply.id!r}")
        hit = hit or reply.counter_label
    return hit


def keyword_match(text: str, keywords: Iterable[str] = DEFAULT_KEYWORDS) -> bool:
    """Case-folded substring match against any keyword."""
    folded = text.casefold()
    return any(keyword in folded for keyword in keywords)
