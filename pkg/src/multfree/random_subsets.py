"""Maximum multiple-free subsets of random samples, level by level.

Restricting the conflict graph to a sample splits every chain at its absent
elements; each maximal run of consecutively present elements is a path and
contributes ceil(run / 2) independent vertices -- exactly the present
elements at an even distance from the first element of their run.  That
distance only looks downward, so one upward pass per chain computes both
the total and the per-valuation-level tallies, whose element probabilities
are geometric sums in p with stable closed forms.

The probability and expectation routines are written without float-only
operations, so passing `fractions.Fraction` values of p keeps every result
exact; this backs the small-n identity tests.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import Multiplier, chains, level_size, max_level_index
from .errors import TooLargeForOracle
from .extremal import brute_force_max
from .sampling import SubsetSample

_EXPECTATION_LIMIT = 20
_WINDOW = 1 << 19


@dataclass(frozen=True)
class LevelStats:
    """One valuation level of a sample: observed tallies next to closed forms."""

    index: int
    level_total: int
    star_count: int
    probability: float
    expected: float


def _scan_scalar(sample, m: Multiplier) -> tuple[int, list[int]]:
    """Reference chain scan, pure Python: (kept total, kept count per level).

    An element is kept exactly when it is present and the run of present
    elements directly below it has even length, i.e. when its run becomes
    odd-sized as it joins.
    """
    n = sample.n
    star = [0] * (max_level_index(n, m.b) + 1)
    total = 0
    a, b = m.a, m.b
    contains = sample.contains
    for s in range(1, n + 1):
        if s % b == 0:
            continue
        x, level, run_odd = s, 0, False
        while True:
            if contains(x):
                run_odd = not run_odd
                if run_odd:
                    star[level] += 1
                    total += 1
            else:
                run_odd = False
            if x % a == 0:
                nxt = (x // a) * b
                if nxt <= n:
                    x, level = nxt, level + 1
                    continue
            break
    return total, star


def _scan_window(sample: SubsetSample, m: Multiplier, top: int, lo: int, hi: int):
    """Tallies for the chains starting in [lo, hi), all walked in numpy lockstep."""
    a, b, n = np.uint64(m.a), np.uint64(m.b), np.uint64(sample.n)
    zero = np.uint64(0)
    cand = np.arange(lo, hi, dtype=np.uint64)
    cur = cand[cand % b != zero]
    run_odd = np.zeros(cur.shape, dtype=bool)
    star = [0] * (top + 1)
    total = 0
    level = 0
    while cur.size:
        present = sample.contains_array(cur)
        run_odd = present & ~run_odd
        kept = int(np.count_nonzero(run_odd))
        star[level] += kept
        total += kept
        if m.a > 1:
            alive = cur % a == zero
            cur, run_odd = cur[alive], run_odd[alive]
        cur = (cur // a) * b
        inside = cur <= n
        cur, run_odd = cur[inside], run_odd[inside]
        level += 1
    return total, star


def _scan_batched(sample: SubsetSample, m: Multiplier, threads: int = 1) -> tuple[int, list[int]]:
    """Windowed vector scan: same tallies as `_scan_scalar`, bounded memory.

    Chain starts are generated window by window and all chains of a window
    advance together one multiplication at a time.  Window boundaries do not
    depend on the thread count and all tallies are integers, so the result
    is identical for any `threads`.
    """
    n = sample.n
    top = max_level_index(n, m.b)
    star = [0] * (top + 1)
    if n < 1:
        return 0, star
    spans = [(lo, min(lo + _WINDOW, n + 1)) for lo in range(1, n + 1, _WINDOW)]
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda span: _scan_window(sample, m, top, *span), spans))
    else:
        parts = [_scan_window(sample, m, top, lo, hi) for lo, hi in spans]
    total = 0
    for part_total, part_star in parts:
        total += part_total
        for i, c in enumerate(part_star):
            star[i] += c
    return total, star


def _level_scan(sample, m: Multiplier, threads: int = 1) -> tuple[int, list[int]]:
    if isinstance(sample, SubsetSample):
        return _scan_batched(sample, m, threads=threads)
    return _scan_scalar(sample, m)


def max_set_size_in_subset(sample, m: Multiplier, threads: int = 1) -> int:
    """Size of a maximum multiple-free subset of the sampled elements.

    Accepts a SubsetSample (vector scan) or any object with `.n` and
    `.contains` such as ExplicitSubset (scalar scan).
    """
    total, _ = _level_scan(sample, m, threads=threads)
    return total


def level_counts(sample: SubsetSample, m: Multiplier, threads: int = 1) -> list[LevelStats]:
    """Per-level tallies of one sample next to their closed-form counterparts."""
    total, star = _level_scan(sample, m, threads=threads)
    n, p = sample.spec.n, sample.spec.p
    out = []
    for i, count in enumerate(star):
        size = level_size(n, m.b, i)
        pi = level_probability(i, p)
        out.append(
            LevelStats(index=i, level_total=size, star_count=count, probability=pi, expected=size * pi)
        )
    assert total == sum(s.star_count for s in out)
    return out


def level_probability(i: int, p):
    """Probability that a level-i element is kept from a p-sample.

    Kept means: present, with an even-length run of present elements
    directly below it.  Runs below a level-i element live on its i
    predecessors, giving the geometric sum
    p * ((1-p) + p**2 (1-p) + ... + [p**i if i is even]), evaluated here in
    the factored form p * (1 +- p**(i+1)) / (1 + p), which is exact at both
    endpoints p = 0 and p = 1.
    """
    if i < 0:
        raise ValueError("level index must be >= 0")
    if p == 1:
        # limits: even levels are always kept, odd levels never
        return p if i % 2 == 0 else 1 - p
    q = p**i
    if i % 2 == 0:
        return p * ((1 - q) / (1 + p) + q)
    return p * (1 - q * p) / (1 + p)


def expected_level(n: int, m: Multiplier, p, i: int):
    """Exact expected kept count at level i: level_size * level_probability."""
    return level_size(n, m.b, i) * level_probability(i, p)


def expected_total(n: int, m: Multiplier, p):
    """Expected maximum multiple-free subset size of a p-sample of [n].

    Sum of the exact per-level expectations; approaches b/(b+p) * p * n to
    within O(log n).
    """
    total = p * 0  # typed zero so Fraction input stays exact
    for i in range(max_level_index(n, m.b) + 1):
        total += expected_level(n, m, p, i)
    return total


def exhaustive_expectation(n: int, m: Multiplier, p):
    """Expectation referee: enumerate every subset of every chain.

    Chains are hit independently, so the expectation adds over chains;
    within a chain all 2**length subsets are enumerated and each one is
    scored with `brute_force_max`, never with the production scan.
    """
    if n > _EXPECTATION_LIMIT:
        raise TooLargeForOracle(f"n = {n} exceeds the enumeration limit of {_EXPECTATION_LIMIT}")
    total = p * 0
    for chain in chains(n, m):
        elems = chain.elements
        k = len(elems)
        for mask in range(1 << k):
            present = [elems[idx] for idx in range(k) if mask >> idx & 1]
            if not present:
                continue
            weight = p ** len(present) * (1 - p) ** (k - len(present))
            total += weight * brute_force_max(present, m)
    return total
