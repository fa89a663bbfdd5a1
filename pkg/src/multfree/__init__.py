"""Toolkit for maximum multiple-free subsets of {1, ..., n}, exact and sampled.

A set is (b/a)-multiple-free when it never contains both x and (b/a)*x.
The package computes exact maximum sizes on full ranges via the chain
decomposition of the multiply-by-b/a graph, solves reproducible random
subsets, evaluates the closed-form level probabilities and expectations,
and runs deterministic Monte Carlo experiments against tail bounds.
"""

from .bounds import (
    TailBound,
    chernoff_lower,
    chernoff_two_sided,
    chernoff_upper,
    concentration_envelope,
    tail_bounds,
)
from .core import (
    Chain,
    Multiplier,
    chain_containing,
    chain_from,
    chain_starts,
    chains,
    level_size,
    max_level_index,
    predecessor,
    reduce_multiplier,
    subpower_index,
    successor,
)
from .errors import (
    DomainError,
    LambdaOutOfRange,
    LevelOutOfRange,
    MultfreeError,
    NotAChainStart,
    RatioNotGreaterThanOne,
    TooLargeForOracle,
)
from .extremal import (
    ExtremalResult,
    brute_force_max,
    dense_residual,
    is_multiple_free,
    max_set,
    max_set_size,
    max_set_size_prefix,
    path_dp_max,
    residual_of,
)
from .montecarlo import TrialSummary, monte_carlo
from .random_subsets import (
    LevelStats,
    exhaustive_expectation,
    expected_level,
    expected_total,
    level_counts,
    level_probability,
    max_set_size_in_subset,
)
from .sampling import ExplicitSubset, SampleSpec, SubsetSample, sample_subset

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "DomainError",
    "ExplicitSubset",
    "ExtremalResult",
    "LambdaOutOfRange",
    "LevelOutOfRange",
    "LevelStats",
    "Multiplier",
    "MultfreeError",
    "NotAChainStart",
    "RatioNotGreaterThanOne",
    "SampleSpec",
    "SubsetSample",
    "TailBound",
    "TooLargeForOracle",
    "TrialSummary",
    "brute_force_max",
    "chain_containing",
    "chain_from",
    "chain_starts",
    "chains",
    "chernoff_lower",
    "chernoff_two_sided",
    "chernoff_upper",
    "concentration_envelope",
    "dense_residual",
    "exhaustive_expectation",
    "expected_level",
    "expected_total",
    "is_multiple_free",
    "level_counts",
    "level_probability",
    "level_size",
    "max_level_index",
    "max_set",
    "max_set_size",
    "max_set_size_in_subset",
    "max_set_size_prefix",
    "monte_carlo",
    "path_dp_max",
    "predecessor",
    "reduce_multiplier",
    "residual_of",
    "sample_subset",
    "subpower_index",
    "successor",
    "tail_bounds",
]
