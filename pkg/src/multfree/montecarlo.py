"""Deterministic Monte Carlo driver for sampled maximum multiple-free sets."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bounds import concentration_envelope
from .core import Multiplier, max_level_index
from .random_subsets import _level_scan, expected_total
from .sampling import SampleSpec, sample_subset


@dataclass(frozen=True)
class TrialSummary:
    """Aggregate of one Monte Carlo run (sizes are exact integers)."""

    sizes: tuple[int, ...]
    mean: float
    sample_stddev: float
    per_level_means: tuple[float, ...]
    analytic_total: float
    envelope: float  # NaN when n < 16


def monte_carlo(
    n: int,
    m: Multiplier,
    p: float,
    trials: int,
    seed: int,
    threads: int = 1,
) -> TrialSummary:
    """Run `trials` independent samples of [n] at rate p and aggregate.

    The summary is a pure function of (n, m, p, trials, seed): all
    randomness comes from the keyed sampler, per-trial results are integers,
    and they are reduced in trial order, so the thread count never changes
    one bit of the output.  Memory stays bounded by the scan window, never
    by n.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    top = max_level_index(n, m.b)

    def one(trial: int) -> tuple[int, list[int]]:
        sample = sample_subset(SampleSpec(n=n, p=p, seed=seed, trial=trial))
        inner = threads if trials == 1 else 1
        return _level_scan(sample, m, threads=inner)

    if trials > 1 and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(t) for t in range(trials)]

    sizes = tuple(total for total, _ in results)
    level_sums = [0] * (top + 1)
    for _, star in results:
        for i, c in enumerate(star):
            level_sums[i] += c

    mean = sum(sizes) / trials
    if trials > 1:
        stddev = math.sqrt(sum((s - mean) ** 2 for s in sizes) / (trials - 1))
    else:
        stddev = 0.0
    envelope = concentration_envelope(n, p, 1.0) if n >= 16 else math.nan
    return TrialSummary(
        sizes=sizes,
        mean=mean,
        sample_stddev=stddev,
        per_level_means=tuple(c / trials for c in level_sums),
        analytic_total=float(expected_total(n, m, p)),
        envelope=envelope,
    )
