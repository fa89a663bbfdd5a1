"""Tail bounds for sums of independent indicators, and the deviation envelope."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, LambdaOutOfRange


def chernoff_upper(lam: float, mean: float) -> float:
    """exp(-lam**2 * mean / (2 + lam)): bound on P[X >= (1 + lam) * mean]."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if mean < 0:
        raise ValueError("mean must be >= 0")
    return math.exp(-lam * lam * mean / (2 + lam))


def chernoff_lower(lam: float, mean: float) -> float:
    """exp(-lam**2 * mean / 2): bound on P[X <= (1 - lam) * mean]."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if mean < 0:
        raise ValueError("mean must be >= 0")
    return math.exp(-lam * lam * mean / 2)


def chernoff_two_sided(lam: float, mean: float) -> float:
    """2 * exp(-lam**2 * mean / 3): bound on P[|X - mean| >= lam * mean].

    Only valid for 0 <= lam <= 1; the raw value may exceed 1 and should be
    capped when quoted as a probability.
    """
    if lam < 0:
        raise ValueError("lam must be >= 0")
    if lam > 1:
        raise LambdaOutOfRange(f"two-sided bound needs lam <= 1, got {lam}")
    if mean < 0:
        raise ValueError("mean must be >= 0")
    return 2 * math.exp(-lam * lam * mean / 3)


@dataclass(frozen=True)
class TailBound:
    """The three bounds evaluated at one (lam, mean) point."""

    lam: float
    mean: float
    upper: float
    lower: float
    two_sided: float  # NaN when lam > 1


def tail_bounds(lam: float, mean: float) -> TailBound:
    """Evaluate all three bounds at once."""
    two = chernoff_two_sided(lam, mean) if lam <= 1 else math.nan
    return TailBound(
        lam=lam,
        mean=mean,
        upper=chernoff_upper(lam, mean),
        lower=chernoff_lower(lam, mean),
        two_sided=two,
    )


def concentration_envelope(n: int, p: float, c: float) -> float:
    """Deviation scale c * sqrt(p*n) * ln(n) * ln(ln(n)).

    Needs n >= 16 so that ln(ln(n)) is safely positive.
    """
    if n < 16:
        raise DomainError(f"envelope needs n >= 16, got {n}")
    return c * math.sqrt(p * n) * math.log(n) * math.log(math.log(n))
