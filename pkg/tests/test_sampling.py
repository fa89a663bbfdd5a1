import hashlib
import math

import numpy as np
import pytest

import multfree as mf
from multfree.sampling import _stream_key, _u53, _u53_array


def test_spec_validation():
    with pytest.raises(ValueError):
        mf.SampleSpec(n=10, p=1.5, seed=0)
    with pytest.raises(ValueError):
        mf.SampleSpec(n=-1, p=0.5, seed=0)
    with pytest.raises(ValueError):
        mf.SampleSpec(n=10, p=0.5, seed=0, trial=-1)


def test_extreme_rates():
    empty = mf.sample_subset(mf.SampleSpec(n=64, p=0.0, seed=9))
    full = mf.sample_subset(mf.SampleSpec(n=64, p=1.0, seed=9))
    assert not list(empty.elements())
    assert list(full.elements()) == list(range(1, 65))


def test_membership_is_pure():
    sample = mf.sample_subset(mf.SampleSpec(n=1000, p=0.5, seed=42, trial=3))
    first = [sample.contains(v) for v in range(1, 1001)]
    again = [sample.contains(v) for v in range(1, 1001)]
    rebuilt = mf.sample_subset(mf.SampleSpec(n=1000, p=0.5, seed=42, trial=3))
    assert first == again == [rebuilt.contains(v) for v in range(1, 1001)]


def test_trials_differ():
    a = mf.sample_subset(mf.SampleSpec(n=200, p=0.5, seed=42, trial=0))
    b = mf.sample_subset(mf.SampleSpec(n=200, p=0.5, seed=42, trial=1))
    assert list(a.elements()) != list(b.elements())


def test_rate_coupling_is_monotone():
    lo = mf.sample_subset(mf.SampleSpec(n=500, p=0.3, seed=99))
    hi = mf.sample_subset(mf.SampleSpec(n=500, p=0.7, seed=99))
    for v in range(1, 501):
        assert not lo.contains(v) or hi.contains(v)


def test_vectorised_membership_matches_scalar():
    key = _stream_key(20260809, 5)
    values = np.arange(1, 20_001, dtype=np.uint64)
    vec = _u53_array(key, values)
    assert all(int(vec[v - 1]) == _u53(key, v) for v in range(1, 20_001, 97))
    sample = mf.sample_subset(mf.SampleSpec(n=20_000, p=0.47, seed=20260809, trial=5))
    mask = sample.contains_array(values)
    assert all(bool(mask[v - 1]) == sample.contains(v) for v in range(1, 20_001, 53))


def test_bitmap_is_reproducible():
    # same digest on repeated evaluation of a large membership bitmap
    def digest():
        sample = mf.sample_subset(mf.SampleSpec(n=10**6, p=0.5, seed=42, trial=0))
        h = hashlib.sha256()
        for lo in range(1, 10**6 + 1, 1 << 18):
            values = np.arange(lo, min(lo + (1 << 18), 10**6 + 1), dtype=np.uint64)
            h.update(np.packbits(sample.contains_array(values)).tobytes())
        return h.hexdigest()

    assert digest() == digest()


def test_empirical_rate():
    n = 100_000
    for p in (0.25, 0.5, 0.75):
        sample = mf.sample_subset(mf.SampleSpec(n=n, p=p, seed=7))
        count = int(np.count_nonzero(sample.contains_array(np.arange(1, n + 1, dtype=np.uint64))))
        assert abs(count - p * n) <= 4 * math.sqrt(p * (1 - p) * n)


def test_explicit_subset():
    subset = mf.ExplicitSubset(10, [2, 4, 8])
    assert subset.contains(4) and not subset.contains(3)
    assert list(subset.elements()) == [2, 4, 8]
    with pytest.raises(ValueError):
        mf.ExplicitSubset(5, [6])
