"""Welch t-test, Cohen's d, and CI oracles against scipy and closed forms."""

from __future__ import annotations

import math

import numpy as np
import pytest
import scipy.special
import scipy.stats
from hypothesis import given
from hypothesis import strategies as st

from socorr import (
    DegenerateSampleError,
    cohen_d,
    mean_ci95,
    student_t_two_sided_p,
    welch_t,
)
from socorr.stats import regularized_incomplete_beta


def test_worked_example():
    a, b = [1.0, 2.0, 3.0], [4.0, 5.0, 6.0]
    result = welch_t(a, b)
    assert result.t == pytest.approx(-3.6742, abs=5e-5)
    assert result.df == pytest.approx(4.0, abs=1e-9)
    assert cohen_d(a, b) == pytest.approx(-3.0, abs=1e-12)


def test_welch_against_scipy_random_pairs():
    rng = np.random.default_rng(8)
    for _ in range(300):
        na, nb = rng.integers(2, 60, size=2)
        a = rng.normal(rng.uniform(-2, 2), rng.uniform(0.2, 3.0), size=na)
        b = rng.normal(rng.uniform(-2, 2), rng.uniform(0.2, 3.0), size=nb)
        got = welch_t(list(a), list(b))
        want = scipy.stats.ttest_ind(a, b, equal_var=False)
        assert got.t == pytest.approx(want.statistic, abs=1e-6)
        assert got.p == pytest.approx(want.pvalue, abs=1e-6)
        assert got.df == pytest.approx(want.df, abs=1e-6)


def test_cohen_d_closed_form():
    rng = np.random.default_rng(9)
    for _ in range(100):
        a = rng.normal(0.0, 1.0, size=rng.integers(2, 40))
        b = rng.normal(1.0, 2.0, size=rng.integers(2, 40))
        pooled = ((len(a) - 1) * a.var(ddof=1) + (len(b) - 1) * b.var(ddof=1)) / (
            len(a) + len(b) - 2
        )
        want = (a.mean() - b.mean()) / math.sqrt(pooled)
        assert cohen_d(list(a), list(b)) == pytest.approx(want, abs=1e-9)


def test_antisymmetry():
    a, b = [1.0, 3.0, 4.0], [2.0, 2.5, 6.0, 7.0]
    ab, ba = welch_t(a, b), welch_t(b, a)
    assert ab.t == pytest.approx(-ba.t, abs=1e-12)
    assert ab.p == pytest.approx(ba.p, abs=1e-12)
    assert cohen_d(a, b) == pytest.approx(-cohen_d(b, a), abs=1e-12)


def test_identical_means_give_p_one():
    assert student_t_two_sided_p(0.0, 5.0) == 1.0


def test_degenerate_samples():
    with pytest.raises(DegenerateSampleError):
        welch_t([1.0], [1.0, 2.0])
    with pytest.raises(DegenerateSampleError):
        welch_t([1.0, 1.0], [1.0, 2.0])
    with pytest.raises(DegenerateSampleError):
        cohen_d([2.0, 2.0], [3.0, 3.0])
    with pytest.raises(DegenerateSampleError):
        mean_ci95([4.0])


def test_student_t_tail_against_scipy():
    for t in (0.01, 0.5, 1.0, 2.5, 7.0, 30.0, 80.0):
        for df in (1.0, 2.0, 4.5, 17.0, 200.0, 1e4):
            want = 2.0 * scipy.stats.t.sf(t, df)
            assert student_t_two_sided_p(t, df) == pytest.approx(want, abs=1e-10)
            assert student_t_two_sided_p(-t, df) == pytest.approx(want, abs=1e-10)


def test_incomplete_beta_against_scipy():
    grid = (0.2, 0.5, 1.0, 2.5, 8.0, 40.0)
    for a in grid:
        for b in grid:
            for x in (0.0, 1e-6, 0.1, 0.5, 0.9, 1.0 - 1e-6, 1.0):
                want = scipy.special.betainc(a, b, x)
                assert regularized_incomplete_beta(a, b, x) == pytest.approx(want, abs=1e-10)


def test_incomplete_beta_domain():
    with pytest.raises(ValueError):
        regularized_incomplete_beta(0.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        student_t_two_sided_p(1.0, 0.0)


def test_mean_ci95_closed_form():
    sample = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]
    mean = sum(sample) / len(sample)
    sd = math.sqrt(sum((v - mean) ** 2 for v in sample) / (len(sample) - 1))
    half = 1.96 * sd / math.sqrt(len(sample))
    ci = mean_ci95(sample)
    assert ci.mean == pytest.approx(mean, abs=1e-12)
    assert ci.lo == pytest.approx(mean - half, abs=1e-12)
    assert ci.hi == pytest.approx(mean + half, abs=1e-12)


@given(
    st.lists(st.floats(-50, 50), min_size=2, max_size=25),
    st.lists(st.floats(-50, 50), min_size=2, max_size=25),
)
def test_p_in_unit_interval_and_d_sign(a, b):
    try:
        result = welch_t(a, b)
        d = cohen_d(a, b)
    except DegenerateSampleError:
        return
    assert 0.0 < result.p <= 1.0
    mean_gap = math.fsum(a) / len(a) - math.fsum(b) / len(b)
    if mean_gap != 0.0:
        assert math.copysign(1.0, d) == math.copysign(1.0, mean_gap)
        assert math.copysign(1.0, result.t) == math.copysign(1.0, mean_gap)
