"""Reply-count strata, quartile grouping, attribute comparisons, ARI trend."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

from .corpus import Corpus, TweetRecord, counter_proportion
from .stats import (
    ConfidenceInterval,
    DegenerateSampleError,
    WelchResult,
    cohen_d,
    mean_ci95,
    welch_t,
)

DEFAULT_ALPHA = 0.001
MIN_STRATUM_SIZE = 4
MIN_BIN_USERS = 5
TREND_RANGE_LO = 0.05
TREND_RANGE_HI = 0.95


@dataclass(frozen=True, order=True)
class StratumSpec:
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"stratum bounds out of order: [{self.lower}, {self.upper}]")

    def contains(self, reply_count: int) -> bool:
        return self.lower <= reply_count <= self.upper


DEFAULT_STRATA: tuple[StratumSpec, ...] = (StratumSpec(3, 5),) + tuple(
    StratumSpec(lo, lo + 4) for lo in range(6, 50, 5)
)


class Group(Enum):
    HIGHLY_COUNTERED = "highly_countered"
    LOW_COUNTERED = "low_countered"
    MIDDLE = "middle"


@dataclass(frozen=True)
class GroupAssignment:
    tweet_id: str
    stratum: StratumSpec
    group: Group


@dataclass(frozen=True)
class StrataPartition:
    groups: dict[StratumSpec, list[TweetRecord]]
    excluded_above: int
    excluded_other: int


class StratumTooSmall(ValueError):
    """Raised when a stratum has too few tweets for quartile grouping."""


def validate_strata(strata: Sequence[StratumSpec]) -> None:
    for earlier, later in zip(strata, strata[1:]):
        if earlier.upper >= later.lower:
            raise ValueError(f"strata overlap or are unordered: {earlier} vs {later}")


def assign_strata(
    corpus: Corpus, strata: Sequence[StratumSpec] = DEFAULT_STRATA
) -> StrataPartition:
    """Partition tweets into reply-count strata.

    Tweets above the last stratum's upper bound are excluded and counted
    separately from tweets below the first bound or inside a gap.
    """
    validate_strata(strata)
    groups: dict[StratumSpec, list[TweetRecord]] = {s: [] for s in strata}
    excluded_above = 0
    excluded_other = 0
    top = strata[-1].upper
    for tweet in corpus.tweets:
        count = tweet.reply_count
        if count > top:
            excluded_above += 1
            continue
        for spec in strata:
            if spec.contains(count):
                groups[spec].append(tweet)
                break
        else:
            excluded_other += 1
    return StrataPartition(groups, excluded_above, excluded_other)


def quantile(values: Sequence[float], q: float) -> float:
    """Quantile by linear interpolation between closest ranks."""
    if not values:
        raise ValueError("quantile of empty sample")
    if not 0.0 <= q <= 1.0:
        raise ValueError("quantile level must be in [0, 1]")
    ordered = sorted(values)
    position = (len(ordered) - 1) * q
    lo = math.floor(position)
    hi = math.ceil(position)
    if lo == hi:
        return ordered[lo]
    fraction = position - lo
    return ordered[lo] + fraction * (ordered[hi] - ordered[lo])


def group_quartiles(stratum: StratumSpec, tweets: Sequence[TweetRecord]) -> list[GroupAssignment]:
    """Assign tweets of one stratum to quartile groups of counter proportion.

    Values at or below Q1 are LowCountered, at or above Q3 HighlyCountered,
    the rest Middle. A value qualifying for both (only possible when
    Q1 == Q3) goes to Middle; all-equal proportions warn.
    """
    if len(tweets) < MIN_STRATUM_SIZE:
        raise StratumTooSmall(
            f"stratum [{stratum.lower}, {stratum.upper}] has {len(tweets)} tweets;"
            f" needs {MIN_STRATUM_SIZE}"
        )
    proportions = [counter_proportion(t) for t in tweets]
    q1 = quantile(proportions, 0.25)
    q3 = quantile(proportions, 0.75)
    if min(proportions) == max(proportions):
        warnings.warn(
            f"stratum [{stratum.lower}, {stratum.upper}]: all counter proportions equal;"
            " every tweet assigned to Middle",
            stacklevel=2,
        )
    assignments = []
    for tweet, p in zip(tweets, proportions):
        low = p <= q1
        high = p >= q3
        if low and high:
            group = Group.MIDDLE
        elif low:
            group = Group.LOW_COUNTERED
        elif high:
            group = Group.HIGHLY_COUNTERED
        else:
            group = Group.MIDDLE
        assignments.append(GroupAssignment(tweet.id, stratum, group))
    return assignments


def group_partition(
    partition: StrataPartition,
) -> tuple[list[GroupAssignment], list[str]]:
    """Quartile-group every stratum, collecting skip diagnostics."""
    assignments: list[GroupAssignment] = []
    notes: list[str] = []
    for stratum, tweets in partition.groups.items():
        try:
            assignments.extend(group_quartiles(stratum, tweets))
        except StratumTooSmall as exc:
            notes.append(str(exc))
    return assignments, notes


@dataclass(frozen=True)
class StratumReport:
    stratum: StratumSpec
    n_high: int
    n_low: int
    mean_high: float | None
    mean_low: float | None
    ci_high: ConfidenceInterval | None
    ci_low: ConfidenceInterval | None
    t: float | None
    df: float | None
    p: float | None
    cohen_d: float | None
    computed: bool
    note: str = ""


@dataclass(frozen=True)
class AttributeComparison:
    attribute: str
    strata: tuple[StratumReport, ...]
    pooled_p: float | None
    average_cohen_d: float | None


def _stratum_report(
    stratum: StratumSpec, high: list[float], low: list[float]
) -> StratumReport:
    mean_high = sum(high) / len(high) if high else None
    mean_low = sum(low) / len(low) if low else None
    ci_high = mean_ci95(high) if len(high) >= 2 else None
    ci_low = mean_ci95(low) if len(low) >= 2 else None
    if len(high) < 2 or len(low) < 2:
        return StratumReport(
            stratum, len(high), len(low), mean_high, mean_low, ci_high, ci_low,
            None, None, None, None, computed=False, note="group too small",
        )
    try:
        result: WelchResult = welch_t(high, low)
        d = cohen_d(high, low)
    except DegenerateSampleError as exc:
        return StratumReport(
            stratum, len(high), len(low), mean_high, mean_low, ci_high, ci_low,
            None, None, None, None, computed=False, note=str(exc),
        )
    return StratumReport(
        stratum, len(high), len(low), mean_high, mean_low, ci_high, ci_low,
        result.t, result.df, result.p, d, computed=True,
    )


def compare_attribute(
    extractor: Callable[[TweetRecord], float | None],
    assignments: Sequence[GroupAssignment],
    tweets_by_id: Mapping[str, TweetRecord],
    attribute: str = "",
) -> AttributeComparison:
    """Compare HighlyCountered vs LowCountered attribute values per stratum.

    Missing extractor values are dropped. The pooled p-value applies the
    Welch test to the cross-strata unions and drives the significance mark.
    """
    strata_order: list[StratumSpec] = []
    per_stratum: dict[StratumSpec, tuple[list[float], list[float]]] = {}
    for assignment in assignments:
        if assignment.stratum not in per_stratum:
            strata_order.append(assignment.stratum)
            per_stratum[assignment.stratum] = ([], [])
        if assignment.group is Group.MIDDLE:
            continue
        value = extractor(tweets_by_id[assignment.tweet_id])
        if value is None:
            continue
        high, low = per_stratum[assignment.stratum]
        if assignment.group is Group.HIGHLY_COUNTERED:
            high.append(float(value))
        else:
            low.append(float(value))

    reports = []
    pooled_high: list[float] = []
    pooled_low: list[float] = []
    for stratum in strata_order:
        high, low = per_stratum[stratum]
        pooled_high.extend(high)
        pooled_low.extend(low)
        reports.append(_stratum_report(stratum, high, low))

    pooled_p: float | None = None
    if len(pooled_high) >= 2 and len(pooled_low) >= 2:
        try:
            pooled_p = welch_t(pooled_high, pooled_low).p
        except DegenerateSampleError:
            pooled_p = None
    ds = [r.cohen_d for r in reports if r.cohen_d is not None]
    average_d = sum(ds) / len(ds) if ds else None
    return AttributeComparison(attribute, tuple(reports), pooled_p, average_d)


def significant_attributes(
    comparisons: Sequence[AttributeComparison], alpha: float = DEFAULT_ALPHA
) -> list[str]:
    """Attribute names with pooled p strictly below alpha, in name order."""
    names = [c.attribute for c in comparisons if c.pooled_p is not None and c.pooled_p < alpha]
    return sorted(names)


@dataclass(frozen=True)
class AriBin:
    ari_lo: float
    ari_hi: float
    n_users: int
    countered_fraction: float


@dataclass(frozen=True)
class InequalityReport:
    bins: tuple[AriBin, ...]
    slope: float


class TrendUndefined(ValueError):
    """Raised when the readability trend cannot be fitted."""


def inequality_trend(
    users: Sequence[tuple[float | None, bool]], n_bins: int = 10
) -> InequalityReport:
    """Countered fraction per readability bin with an OLS slope.

    Bins are equal-width over the [p5, p95] readability range; bins with
    fewer than 5 users are excluded from the fit.
    """
    if n_bins < 1:
        raise ValueError("n_bins must be positive")
    defined = [(a, c) for a, c in users if a is not None]
    if len(defined) < 2:
        raise TrendUndefined("need at least 2 users with defined readability")
    scores = [a for a, _ in defined]
    lo = quantile(scores, TREND_RANGE_LO)
    hi = quantile(scores, TREND_RANGE_HI)
    if hi <= lo:
        raise TrendUndefined("degenerate readability range; slope undefined")
    width = (hi - lo) / n_bins
    totals = [0] * n_bins
    countered = [0] * n_bins
    for score, flag in defined:
        if score < lo or score > hi:
            continue
        index = min(int((score - lo) / width), n_bins - 1)
        totals[index] += 1
        countered[index] += flag
    bins = []
    points = []
    for i in range(n_bins):
        bin_lo = lo + i * width
        bin_hi = lo + (i + 1) * width
        fraction = countered[i] / totals[i] if totals[i] else 0.0
        bins.append(AriBin(bin_lo, bin_hi, totals[i], fraction))
        if totals[i] >= MIN_BIN_USERS:
            points.append(((bin_lo + bin_hi) / 2.0, fraction))
    if len(points) < 2:
        raise TrendUndefined("fewer than 2 populated bins; slope undefined")
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    sxx = sum((x - mean_x) ** 2 for x, _ in points)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in points)
    return InequalityReport(tuple(bins), sxy / sxx)
