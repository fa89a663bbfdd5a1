"""Exact maximum multiple-free subsets of {1, ..., n} and brute-force referees.

A set is (b/a)-multiple-free when it never contains a pair x, y with
b*x = a*y.  On the full range [n] the conflict graph is a union of chains
(see `core`), and keeping the elements at even chain positions is optimal:
a path on k vertices has independence number ceil(k/2).  The brute-force
routines here deliberately avoid the chain structure so they can referee
every other solver in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Multiplier, subpower_index
from .errors import TooLargeForOracle

_ORACLE_LIMIT = 24


@dataclass(frozen=True)
class ExtremalResult:
    """Size, canonical witness and residual against the b/(b+1)*n main term."""

    size: int
    witness: tuple[int, ...] | None
    residual: Fraction


def is_multiple_free(s, m: Multiplier) -> bool:
    """True when no pair x, y in s satisfies b*x = a*y."""
    elems = set(s)
    for x in elems:
        scaled = x * m.b
        if scaled % m.a == 0 and scaled // m.a in elems:
            return False
    return True


def max_set_size(n: int, m: Multiplier) -> int:
    """Size of a maximum multiple-free subset of [n].

    Walks every chain once and adds ceil(length / 2), the independence
    number of a path.
    """
    a, b = m.a, m.b
    total = 0
    for s in range(1, n + 1):
        if s % b == 0:
            continue
        length, x = 1, s
        while x % a == 0:
            nxt = (x // a) * b
            if nxt > n:
                break
            x = nxt
            length += 1
        total += (length + 1) // 2
    return total


def max_set_size_prefix(limit: int, m: Multiplier):
    """Yield max_set_size(n, m) for n = 1, ..., limit in a single pass.

    Element n always enters its chain as the largest element, at position
    equal to its b-adic valuation (every predecessor is smaller, hence
    already in [n-1]).  Extending a path by one vertex raises its
    independence number exactly when the new position is even.
    """
    b = m.b
    total = 0
    for v in range(1, limit + 1):
        if v % b:
            total += 1
        else:
            total += 1 - (subpower_index(v, b) & 1)
        yield total


def max_set(n: int, m: Multiplier) -> ExtremalResult:
    """A canonical maximum multiple-free subset of [n].

    Always returns the even chain positions, so the witness is unique and
    reproducible even when other maximum sets exist.
    """
    a, b = m.a, m.b
    witness: list[int] = []
    for s in range(1, n + 1):
        if s % b == 0:
            continue
        x, pos = s, 0
        while True:
            if pos % 2 == 0:
                witness.append(x)
            if x % a:
                break
            nxt = (x // a) * b
            if nxt > n:
                break
            x, pos = nxt, pos + 1
    witness.sort()
    size = len(witness)
    return ExtremalResult(size=size, witness=tuple(witness), residual=residual_of(size, n, m))


def residual_of(size: int, n: int, m: Multiplier) -> Fraction:
    """Exact rational residual size - b*n/(b+1)."""
    return Fraction(size) - Fraction(m.b * n, m.b + 1)


def dense_residual(n: int, m: Multiplier) -> Fraction:
    """max_set_size(n, m) minus the leading term b*n/(b+1), exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return residual_of(max_set_size(n, m), n, m)


def brute_force_max(elements, m: Multiplier) -> int:
    """Maximum multiple-free subset size by enumerating every subset.

    Validity is extended bit by bit -- a subset is conflict-free iff
    removing its lowest element leaves it conflict-free and that element
    conflicts with nothing kept -- so the scan over all 2**k subsets costs
    O(1) per subset.  Conflicts come straight from the defining equation
    b*x = a*y; the chain decomposition is never consulted.
    """
    elems = sorted(set(elements))
    k = len(elems)
    if k > _ORACLE_LIMIT:
        raise TooLargeForOracle(f"{k} elements exceed the enumeration limit of {_ORACLE_LIMIT}")
    if k == 0:
        return 0
    index = {v: i for i, v in enumerate(elems)}
    conflict = [0] * k
    for i, x in enumerate(elems):
        scaled = x * m.b
        if scaled % m.a == 0:
            j = index.get(scaled // m.a)
            if j is not None:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    best = 0
    free = bytearray(1 << k)
    free[0] = 1
    for mask in range(1, 1 << k):
        low = mask & -mask
        rest = mask ^ low
        if free[rest] and not conflict[low.bit_length() - 1] & rest:
            free[mask] = 1
            c = mask.bit_count()
            if c > best:
                best = c
    return best


def path_dp_max(elements, m: Multiplier) -> int:
    """Maximum multiple-free subset size by take/skip DP along conflict paths.

    Second referee, independent of `brute_force_max`: the conflict graph
    restricted to the given set is a union of paths, and each path is solved
    with the classic independent-set recurrence.
    """
    present = set(elements)
    a, b = m.a, m.b
    total = 0
    for x in present:
        back = x * a
        if back % b == 0 and back // b in present:
            continue  # some smaller element points at x, so x is not a path head
        skip, take = 0, 1
        y = x
        while True:
            fwd = y * b
            if fwd % a or fwd // a not in present:
                break
            y = fwd // a
            skip, take = max(skip, take), skip + 1
        total += max(skip, take)
    return total
