"""Chain arithmetic for the multiply-by-r graph on {1, ..., n}.

For a reduced rational r = b/a > 1, the directed graph on [n] = {1, ..., n}
has an arc x -> y exactly when y = r*x.  In- and out-degrees are at most 1
and every arc increases its endpoint, so the graph is a disjoint union of
directed paths ("chains").  The graph is never materialised: a chain start
is any element not divisible by b (those are exactly the elements with no
predecessor), and walking a chain multiplies by b/a while the result stays
integral and <= n.

The position of an element inside its chain equals its b-adic valuation,
which partitions [n] into levels: level i holds the integers b**i * l with
l not divisible by b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import LevelOutOfRange, NotAChainStart, RatioNotGreaterThanOne


@dataclass(frozen=True)
class Multiplier:
    """Reduced rational multiplier b/a with gcd(a, b) = 1 and a < b."""

    a: int
    b: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.b, self.a)

    def __str__(self) -> str:
        return f"{self.b}/{self.a}"


@dataclass(frozen=True)
class Chain:
    """One directed path: consecutive elements related by multiplication by b/a."""

    elements: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.elements[0]

    @property
    def length(self) -> int:
        return len(self.elements)


def reduce_multiplier(numerator: int, denominator: int) -> Multiplier:
    """Normalise numerator/denominator to a Multiplier in lowest terms.

    Raises RatioNotGreaterThanOne when the reduced ratio is <= 1.
    """
    if numerator < 1 or denominator < 1:
        raise ValueError("numerator and denominator must be positive integers")
    g = math.gcd(numerator, denominator)
    b, a = numerator // g, denominator // g
    if b <= a:
        raise RatioNotGreaterThanOne(
            f"{numerator}/{denominator} reduces to {b}/{a}; the ratio must exceed 1"
        )
    return Multiplier(a=a, b=b)


def successor(x: int, m: Multiplier, n: int) -> int | None:
    """Next chain element r*x, or None when r*x is not an integer <= n."""
    if x % m.a:
        return None
    y = (x // m.a) * m.b  # divide first: exact because a | x
    return y if y <= n else None


def predecessor(x: int, m: Multiplier) -> int | None:
    """Previous chain element x/r, or None when x/r is not an integer.

    The result is always < x (a < b), so no upper bound is needed.
    """
    if x % m.b:
        return None
    return (x // m.b) * m.a


def subpower_index(k: int, b: int) -> int:
    """b-adic valuation of k: the unique i with k = b**i * l and b not dividing l."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if b < 2:
        raise ValueError("b must be at least 2")
    i = 0
    while k % b == 0:
        k //= b
        i += 1
    return i


def max_level_index(n: int, b: int) -> int:
    """Largest i with b**i <= n, by integer exponentiation; -1 when n < 1."""
    if b < 2:
        raise ValueError("b must be at least 2")
    if n < 1:
        return -1
    i, power = 0, 1
    while power * b <= n:
        power *= b
        i += 1
    return i


def level_size(n: int, b: int, i: int) -> int:
    """Exact number of integers in [n] with b-adic valuation i.

    Equals floor(n / b**i) - floor(n / b**(i+1)) and therefore stays within
    1 of the ideal density (b-1)/b * n/b**i.
    """
    if b < 2:
        raise ValueError("b must be at least 2")
    if i < 0:
        raise ValueError("level index must be >= 0")
    power = b**i
    if power > n:
        raise LevelOutOfRange(f"level {i} is empty: {b}**{i} exceeds n = {n}")
    return n // power - n // (power * b)


def chain_starts(n: int, m: Multiplier):
    """Yield the chain starts of [n] in increasing order.

    Starts are the elements with no predecessor, i.e. those not divisible
    by b; there are level_size(n, b, 0) of them.
    """
    for s in range(1, n + 1):
        if s % m.b:
            yield s


def chain_from(start: int, m: Multiplier, n: int) -> Chain:
    """The maximal chain of [n] beginning at `start`.

    Raises NotAChainStart when `start` has a predecessor (b | start).
    """
    if start < 1 or start > n:
        raise ValueError(f"start must lie in [1, {n}], got {start}")
    if start % m.b == 0:
        raise NotAChainStart(f"{start} is divisible by {m.b} and has a predecessor")
    elems = [start]
    while (nxt := successor(elems[-1], m, n)) is not None:
        elems.append(nxt)
    return Chain(tuple(elems))


def chain_containing(v: int, m: Multiplier, n: int) -> tuple[Chain, int]:
    """Return (chain, position of v) for the chain of [n] through v."""
    if v < 1 or v > n:
        raise ValueError(f"v must lie in [1, {n}], got {v}")
    x = v
    while (prev := predecessor(x, m)) is not None:
        x = prev
    chain = chain_from(x, m, n)
    return chain, chain.elements.index(v)


def chains(n: int, m: Multiplier):
    """Yield every chain of [n]; together they partition [n]."""
    for s in chain_starts(n, m):
        yield chain_from(s, m, n)
