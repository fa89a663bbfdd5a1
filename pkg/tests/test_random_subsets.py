import math
from fractions import Fraction

import numpy as np
import pytest

import multfree as mf
from multfree.random_subsets import _scan_batched, _scan_scalar
from conftest import family

M2 = mf.reduce_multiplier(2, 1)
M32 = mf.reduce_multiplier(3, 2)


def explicit_level_probability(i, p):
    """Term-by-term finite sum: p * ((1-p) + p**2 (1-p) + ... [+ p**i])."""
    terms = sum(p ** (2 * r) * (1 - p) for r in range((i + 1) // 2))
    if i % 2 == 0:
        terms += p**i
    return p * terms


def flat_expectation(n, m, p):
    """Expectation by enumerating every subset of [n] directly."""
    total = p * 0
    for mask in range(1 << n):
        present = [v for v in range(1, n + 1) if mask >> (v - 1) & 1]
        if not present:
            continue
        weight = p ** len(present) * (1 - p) ** (n - len(present))
        total += weight * mf.max_set_size_in_subset(mf.ExplicitSubset(n, present), m)
    return total


def test_solver_examples():
    assert mf.max_set_size_in_subset(mf.ExplicitSubset(8, [1, 2, 4, 8]), M2) == 2
    assert mf.max_set_size_in_subset(mf.ExplicitSubset(8, [2, 4, 8]), M2) == 2
    assert mf.max_set_size_in_subset(mf.ExplicitSubset(8, []), M2) == 0
    # derived by brute force over the 16 subsets of the path 1-2-4-8
    assert mf.brute_force_max([1, 2, 4, 8], M2) == 2
    assert mf.brute_force_max([2, 4, 8], M2) == 2


def test_level_counts_on_explicit_run():
    total, star = _scan_scalar(mf.ExplicitSubset(8, [2, 4, 8]), M2)
    # 2 starts its run (even distance), 4 is at odd distance, 8 at even
    assert star == [0, 1, 0, 1]
    assert total == 2


def test_level_counts_full_sample():
    sample = mf.sample_subset(mf.SampleSpec(n=10, p=1.0, seed=3))
    stats = mf.level_counts(sample, M2)
    for s in stats:
        assert s.star_count == (s.level_total if s.index % 2 == 0 else 0)
    assert sum(s.star_count for s in stats) == mf.max_set_size(10, M2)


def test_level_counts_empty_sample():
    sample = mf.sample_subset(mf.SampleSpec(n=50, p=0.0, seed=3))
    assert all(s.star_count == 0 for s in mf.level_counts(sample, M32))


def test_decomposition_identity():
    for m in family():
        for seed in range(5):
            sample = mf.sample_subset(mf.SampleSpec(n=500, p=0.6, seed=seed))
            stats = mf.level_counts(sample, m)
            assert sum(s.star_count for s in stats) == mf.max_set_size_in_subset(sample, m)


def test_solver_matches_oracles_on_samples():
    for m in family():
        for n in (1, 6, 12, 16):
            for seed in range(10):
                p = (0.25, 0.5, 0.75)[seed % 3]
                sample = mf.sample_subset(mf.SampleSpec(n=n, p=p, seed=seed))
                present = list(sample.elements())
                want = mf.brute_force_max(present, m)
                assert mf.max_set_size_in_subset(sample, m) == want
                assert mf.path_dp_max(present, m) == want


def test_scalar_and_batched_scans_agree():
    for m in (M2, M32, mf.reduce_multiplier(7, 4)):
        for n in (1, 17, 1000, 33_333):
            for p in (0.0, 0.2, 0.5, 0.9, 1.0):
                sample = mf.sample_subset(mf.SampleSpec(n=n, p=p, seed=1234, trial=3))
                assert _scan_scalar(sample, m) == _scan_batched(sample, m)
                assert _scan_batched(sample, m) == _scan_batched(sample, m, threads=4)


def test_level_probability_examples():
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        assert mf.level_probability(0, p) == p
        assert mf.level_probability(1, p) == pytest.approx(p * (1 - p), abs=1e-15)
        assert mf.level_probability(2, p) == pytest.approx(p * ((1 - p) + p * p), abs=1e-15)


def test_level_probability_matches_explicit_sums():
    for i in range(0, 12):
        for p in (0.1, 0.25, 0.5, 0.75, 0.9):
            assert abs(mf.level_probability(i, p) - explicit_level_probability(i, p)) <= 1e-12
        for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            assert mf.level_probability(i, p) == explicit_level_probability(i, p)


def test_level_probability_limits():
    for i in range(8):
        assert mf.level_probability(i, 1.0) == (1.0 if i % 2 == 0 else 0.0)
        assert mf.level_probability(i, 0.0) == 0.0
        for p in (0.3, 0.8):
            assert 0 <= mf.level_probability(i, p) <= p


def test_level_probability_empirical():
    # simulate runs of present elements below a level-i element and compare
    # the kept frequency with the closed form, three rates, 10**6 runs each
    sims = 10**6
    rng = np.random.default_rng(20260809)
    for p in (0.25, 0.5, 0.75):
        bits = rng.random((sims, 7)) < p
        for i in range(7):
            run = np.zeros(sims, dtype=np.int64)
            alive = np.ones(sims, dtype=bool)
            for j in range(i - 1, -1, -1):
                alive &= bits[:, j]
                run += alive
            freq = float(np.mean(bits[:, i] & (run % 2 == 0)))
            pi = mf.level_probability(i, p)
            se = math.sqrt(pi * (1 - pi) / sims)
            assert abs(freq - pi) <= 4 * se, (i, p, freq, pi)


def test_expected_level():
    # 3/8 derived from the exhaustive expectation decomposition at n=4
    assert mf.expected_level(4, M2, Fraction(1, 2), 2) == Fraction(3, 8)
    assert mf.expected_level(4, M2, 0.5, 2) == 0.375
    for n in (5, 40):
        for p in (0.2, 0.9):
            assert mf.expected_level(n, M2, p, 0) == mf.level_size(n, 2, 0) * p
    assert mf.expected_level(100, M2, 1.0, 1) == 0
    with pytest.raises(mf.LevelOutOfRange):
        mf.expected_level(10, M2, 0.5, 4)


def test_expected_total_values():
    assert mf.expected_total(4, M2, 0.5) == 1.625
    assert mf.expected_total(4, M2, Fraction(1, 2)) == Fraction(13, 8)
    assert mf.expected_total(100, M2, 0.0) == 0
    for m in family():
        for n in (1, 10, 1000):
            assert mf.expected_total(n, m, 1.0) == mf.max_set_size(n, m)


def test_exhaustive_expectation_examples():
    got = mf.exhaustive_expectation(4, M2, Fraction(1, 2))
    assert got == Fraction(13, 8)
    # chain (1,2,4) contributes 9/8, the singleton (3) contributes 1/2
    assert Fraction(9, 8) + Fraction(1, 2) == got
    assert mf.exhaustive_expectation(1, M32, Fraction(2, 7)) == Fraction(2, 7)
    assert mf.exhaustive_expectation(6, M32, Fraction(1)) == mf.max_set_size(6, M32)
    with pytest.raises(mf.TooLargeForOracle):
        mf.exhaustive_expectation(21, M2, 0.5)


def test_expectation_identity_exact():
    # per-level closed forms agree exactly with full enumeration in rationals
    for m in family():
        for n in range(1, 11):
            for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                assert mf.exhaustive_expectation(n, m, p) == mf.expected_total(n, m, p)


def test_exhaustive_matches_flat_enumeration():
    for m in (M2, M32, mf.reduce_multiplier(5, 3)):
        for n in (1, 5, 9):
            for p in (Fraction(1, 2), Fraction(1, 4)):
                assert flat_expectation(n, m, p) == mf.exhaustive_expectation(n, m, p)
    assert flat_expectation(14, M2, Fraction(1, 2)) == mf.exhaustive_expectation(14, M2, Fraction(1, 2))
    assert flat_expectation(14, M32, Fraction(3, 4)) == mf.exhaustive_expectation(14, M32, Fraction(3, 4))


def test_closed_form_consistency_small():
    # exact per-level expectation stays within 1 of the smooth closed form
    for m in family():
        b = m.b
        for n in (100, 5000):
            for p in (0.3, 0.7):
                for i in range(mf.max_level_index(n, b) + 1):
                    smooth = (b - 1) / (b * (1 + p)) * p * n * (b ** -i + (-p / b) ** i * p)
                    assert abs(mf.expected_level(n, m, p, i) - smooth) <= 1.0
