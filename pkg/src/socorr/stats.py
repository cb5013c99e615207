"""Two-sample statistics: Welch's t-test, Cohen's d, and normal 95% CIs.

The Student-t tail probability is computed through the regularized
incomplete beta function, evaluated by a modified Lentz continued
fraction to absolute accuracy better than 1e-10.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

CI95_Z = 1.96

_CF_MAX_ITERATIONS = 400
_CF_EPS = 1e-15
_CF_TINY = 1e-300


class DegenerateSampleError(ValueError):
    """Raised when a sample is too small or has zero variance."""


class WelchResult(NamedTuple):
    t: float
    df: float
    p: float


class ConfidenceInterval(NamedTuple):
    mean: float
    lo: float
    hi: float


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def _sample_variance(values: Sequence[float], mean: float) -> float:
    return math.fsum((v - mean) ** 2 for v in values) / (len(values) - 1)


def _check_sample(values: Sequence[float], label: str) -> tuple[float, float]:
    if len(values) < 2:
        raise DegenerateSampleError(f"{label} has fewer than 2 observations")
    mean = _mean(values)
    variance = _sample_variance(values, mean)
    if variance == 0.0:
        raise DegenerateSampleError(f"{label} has zero variance")
    return mean, variance


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITERATIONS + 1):
        m2 = 2 * m
        coeff = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + coeff / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coeff * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + coeff / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    log_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    # continued fraction converges fast for x below the distribution bulk
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with df degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if t == 0.0:
        return 1.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def welch_t(a: Sequence[float], b: Sequence[float]) -> WelchResult:
    """Welch's unequal-variances t-test with a two-sided p-value.

    Both samples need at least two observations and nonzero variance;
    degrees of freedom follow Welch-Satterthwaite.
    """
    mean_a, var_a = _check_sample(a, "first sample")
    mean_b, var_b = _check_sample(b, "second sample")
    na, nb = len(a), len(b)
    se_a, se_b = var_a / na, var_b / nb
    t = (mean_a - mean_b) / math.sqrt(se_a + se_b)
    df = (se_a + se_b) ** 2 / (se_a**2 / (na - 1) + se_b**2 / (nb - 1))
    return WelchResult(t, df, student_t_two_sided_p(t, df))


def cohen_d(a: Sequence[float], b: Sequence[float]) -> float:
    """Standardized mean difference with pooled standard deviation."""
    mean_a, var_a = _check_sample(a, "first sample")
    mean_b, var_b = _check_sample(b, "second sample")
    na, nb = len(a), len(b)
    pooled = ((na - 1) * var_a + (nb - 1) * var_b) / (na + nb - 2)
    if pooled == 0.0:
        raise DegenerateSampleError("pooled variance is zero")
    return (mean_a - mean_b) / math.sqrt(pooled)


def mean_ci95(sample: Sequence[float]) -> ConfidenceInterval:
    """Mean with a normal-approximation 95% interval (mean +- 1.96 * s/sqrt(n))."""
    if len(sample) < 2:
        raise DegenerateSampleError("confidence interval needs at least 2 observations")
    mean = _mean(sample)
    half = CI95_Z * math.sqrt(_sample_variance(sample, mean) / len(sample))
    return ConfidenceInterval(mean, mean - half, mean + half)
