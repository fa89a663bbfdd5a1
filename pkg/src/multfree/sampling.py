"""Reproducible random subsets of {1, ..., n}.

Membership is a pure function of (seed, trial, element): element v is kept
when u(v) < p, where u(v) is a 53-bit uniform deviate produced by a keyed
64-bit mixer (the splitmix64 finalizer evaluated in counter mode).  Nothing
is stored, so membership can be queried during chain traversal, in any
order, from any number of threads, and the vectorised numpy evaluation
returns bit-identical answers to the scalar path.

The mixer is fixed: streams for different trials share the underlying
counter sequence at key-dependent offsets, which is statistically harmless
for the sampling done here (overlap probability ~ n / 2**64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix64(z: int) -> int:
    """splitmix64 finalizer, scalar form."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def _stream_key(seed: int, trial: int) -> int:
    """Collapse (seed, trial) into the 64-bit key of one sampling stream."""
    return _mix64(_mix64(seed & _MASK64) + (trial + 1) * _GAMMA)


def _u53(key: int, v: int) -> int:
    """53-bit uniform deviate of element v under `key`."""
    return _mix64(key + v * _GAMMA) >> 11


def _u53_array(key: int, values: np.ndarray) -> np.ndarray:
    """Vectorised twin of `_u53`: uint64 in, uint64 out, identical bits."""
    z = np.uint64(key) + values * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return z >> np.uint64(11)


def _threshold(p) -> int:
    """Integer acceptance threshold: u53 < threshold  <=>  u53 / 2**53 < p."""
    return math.ceil(p * (1 << 53))


@dataclass(frozen=True)
class SampleSpec:
    """Parameters that fully determine one random-subset realisation."""

    n: int
    p: float
    seed: int
    trial: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if self.trial < 0:
            raise ValueError("trial must be >= 0")


class SubsetSample:
    """A realisation of the random subset; stores a key, never a bitmap."""

    def __init__(self, spec: SampleSpec):
        self.spec = spec
        self._key = _stream_key(spec.seed, spec.trial)
        self._threshold = _threshold(spec.p)

    @property
    def n(self) -> int:
        return self.spec.n

    def contains(self, v: int) -> bool:
        return _u53(self._key, v) < self._threshold

    def contains_array(self, values: np.ndarray) -> np.ndarray:
        """Membership of a uint64 array of elements, bit-identical to contains()."""
        return _u53_array(self._key, values) < np.uint64(self._threshold)

    def elements(self):
        """Iterate the present elements in increasing order (small n only)."""
        key, thr = self._key, self._threshold
        for v in range(1, self.spec.n + 1):
            if _u53(key, v) < thr:
                yield v


class ExplicitSubset:
    """Adapter giving an explicit element set the SubsetSample walk interface."""

    def __init__(self, n: int, elements):
        self.n = n
        self._elements = frozenset(elements)
        if self._elements:
            lo, hi = min(self._elements), max(self._elements)
            if lo < 1 or hi > n:
                raise ValueError(f"elements must lie in [1, {n}]")

    def contains(self, v: int) -> bool:
        return v in self._elements

    def elements(self):
        return iter(sorted(self._elements))


def sample_subset(spec: SampleSpec) -> SubsetSample:
    """Materialise the membership predicate for `spec`."""
    return SubsetSample(spec)
