"""Complete-multigraph specialization K_n^m.

Break divisors are characterized by dominance of the sorted vector by
delta = (m(n-1)-1, ..., m-1, 0); parking functions by the sorted bound
a~_i <= m*i - 1; residue tuples live in [0, mn-1]^n with coordinate sum
congruent to the genus mod mn.  The shift map adds m to every
coordinate mod mn and partitions the residue tuples into classes of
size n, each holding exactly one break divisor and exactly one tuple
projecting to a parking function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BudgetExceededError,
    InternalInvariantError,
    PreconditionError,
)

DEFAULT_SET_BUDGET = 2_000_000


@dataclass(frozen=True)
class KnmParams:
    """Parameters of K_n^m with the derived quantities used everywhere."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise PreconditionError("KnmParams requires m >= 1 and n >= 1")

    @property
    def N(self) -> int:
        return self.m * self.n

    @property
    def genus(self) -> int:
        return self.m * self.n * (self.n - 1) // 2 - self.n + 1

    @property
    def delta(self) -> tuple[int, ...]:
        """(m(n-1)-1, m(n-2)-1, ..., m-1, 0); sums to the genus."""
        return tuple(self.m * k - 1 for k in range(self.n - 1, 0, -1)) + (0,)


def sort_orbit_key(x: Sequence[int]) -> tuple[int, ...]:
    """Weakly decreasing rearrangement; canonical S_n-orbit representative."""
    if any(v < 0 for v in x):
        raise PreconditionError("entries must be nonnegative")
    return tuple(sorted(x, reverse=True))


def is_break_mn(p: KnmParams, d: Sequence[int]) -> bool:
    """Sorted-dominance test: d is a break divisor on K_n^m iff it is
    effective of degree g and its decreasing sort is dominated by delta."""
    d = tuple(d)
    if len(d) != p.n:
        raise PreconditionError(f"expected length {p.n}, got {len(d)}")
    if any(v < 0 for v in d):
        return False
    if sum(d) != p.genus:
        return False
    delta = p.delta
    prefix_d = 0
    prefix_delta = 0
    for dv, tv in zip(sorted(d, reverse=True), delta):
        prefix_d += dv
        prefix_delta += tv
        if prefix_d > prefix_delta:
            return False
    return True


def is_parking_mn(p: KnmParams, a: Sequence[int]) -> bool:
    """Vector-parking test: increasing sort a~ satisfies a~_i <= m*i - 1."""
    a = tuple(a)
    if len(a) != p.n - 1:
        raise PreconditionError(f"expected length {p.n - 1}, got {len(a)}")
    if any(v < 0 for v in a):
        return False
    for i, v in enumerate(sorted(a), start=1):
        if v > p.m * i - 1:
            return False
    return True


def _check_budget(size: int, budget: int, what: str):
    if size > budget:
        raise BudgetExceededError(f"|{what}| = {size} exceeds budget {budget}")


@lru_cache(maxsize=None)
def _enumerate_break_cached(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    p = KnmParams(m, n)
    bound = p.delta[0] if n > 1 else 0
    out = []

    def rec(prefix, remaining, parts):
        if parts == 0:
            if remaining == 0:
                d = tuple(prefix)
                if is_break_mn(p, d):
                    out.append(d)
            return
        lo = max(0, remaining - bound * (parts - 1))
        hi = min(bound, remaining)
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(prefix, remaining - v, parts - 1)
            prefix.pop()

    rec([], p.genus, n)
    out.sort()
    return tuple(out)


def enumerate_break(
    p: KnmParams, budget: int = DEFAULT_SET_BUDGET
) -> list[tuple[int, ...]]:
    """All of Break_{m,n}, lexicographically sorted."""
    _check_budget(p.m ** (p.n - 1) * p.n ** max(p.n - 2, 0), budget, "Break")
    return list(_enumerate_break_cached(p.m, p.n))


def enumerate_parking(
    p: KnmParams, budget: int = DEFAULT_SET_BUDGET
) -> list[tuple[int, ...]]:
    """All of Park_{m,n}, lexicographically sorted."""
    _check_budget(p.m ** (p.n - 1) * p.n ** max(p.n - 2, 0), budget, "Park")
    if p.n == 1:
        return [()]
    bound = p.m * (p.n - 1) - 1
    out = [
        a
        for a in itertools.product(range(bound + 1), repeat=p.n - 1)
        if is_parking_mn(p, a)
    ]
    return out


def enumerate_residue_tuples(
    p: KnmParams, budget: int = DEFAULT_SET_BUDGET
) -> list[tuple[int, ...]]:
    """All of D_{m,n}: tuples in [0, N-1]^n with sum = g mod N.

    The last coordinate is determined mod N by the first n-1, so the
    cardinality is N^(n-1).
    """
    _check_budget(p.N ** (p.n - 1), budget, "D")
    g, N = p.genus, p.N
    out = [
        head + ((g - sum(head)) % N,)
        for head in itertools.product(range(N), repeat=p.n - 1)
    ]
    out.sort()
    return out


def _check_residue_tuple(p: KnmParams, x: Sequence[int]) -> tuple[int, ...]:
    x = tuple(x)
    if len(x) != p.n:
        raise PreconditionError(f"expected length {p.n}, got {len(x)}")
    if any(not 0 <= v <= p.N - 1 for v in x):
        raise PreconditionError("residue entries must lie in [0, N-1]")
    if sum(x) % p.N != p.genus % p.N:
        raise PreconditionError("residue sum must be g mod N")
    return x


def shift(p: KnmParams, x: Sequence[int]) -> tuple[int, ...]:
    """Add m to every coordinate mod N."""
    x = _check_residue_tuple(p, x)
    return tuple((v + p.m) % p.N for v in x)


def shift_class(p: KnmParams, x: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The n members {sh^j(x) : 0 <= j < n}, sorted; the first member is
    the canonical class key."""
    x = _check_residue_tuple(p, x)
    members = set()
    cur = x
    for _ in range(p.n):
        members.add(cur)
        cur = tuple((v + p.m) % p.N for v in cur)
    if len(members) != p.n:
        raise InternalInvariantError(
            f"shift class of {x} has size {len(members)}, expected {p.n}"
        )
    return tuple(sorted(members))


def break_representative(p: KnmParams, x: Sequence[int]) -> tuple[int, ...]:
    """The unique break divisor in the shift class of x."""
    hits = [a for a in shift_class(p, x) if is_break_mn(p, a)]
    if len(hits) != 1:
        raise InternalInvariantError(
            f"shift class of {tuple(x)} has {len(hits)} break members"
        )
    return hits[0]


def circular_park(prefs: Sequence[int], spots: int) -> set[int]:
    """Park cars on a circle of `spots` labeled spots.

    Car i takes prefs[i] if free, else the next free spot clockwise.
    Requires fewer cars than spots, so parking always succeeds.
    """
    prefs = list(prefs)
    if len(prefs) >= spots:
        raise PreconditionError("need fewer cars than spots")
    if any(not 0 <= v < spots for v in prefs):
        raise PreconditionError("preferences must lie in [0, spots-1]")
    occupied: set[int] = set()
    for pref in prefs:
        spot = pref
        while spot in occupied:
            spot = (spot + 1) % spots
        occupied.add(spot)
    return occupied


def parking_representative(p: KnmParams, x: Sequence[int]) -> tuple[int, ...]:
    """The projection of the unique class member whose first n-1
    coordinates form a parking function.

    Parks the projected tuple on N circular spots, counts occupancy in
    the n blocks of size m, and rotates per the cycle lemma: exactly one
    rotation has every length-k prefix sum >= k.  Never reads x[n-1], so
    only the coordinate ranges are validated, not the residue sum.
    """
    x = tuple(x)
    if len(x) != p.n:
        raise PreconditionError(f"expected length {p.n}, got {len(x)}")
    if any(not 0 <= v <= p.N - 1 for v in x):
        raise PreconditionError("residue entries must lie in [0, N-1]")
    m, n, N = p.m, p.n, p.N
    occupied = circular_park(x[: n - 1], N)
    counts = [
        sum(1 for s in occupied if m * i <= s < m * (i + 1)) for i in range(n)
    ]
    valid = []
    for j in range(n):
        rotated = counts[j:] + counts[:j]
        prefix = 0
        ok = True
        for k in range(n - 1):
            prefix += rotated[k]
            if prefix < k + 1:
                ok = False
                break
        if ok:
            valid.append(j)
    if len(valid) != 1:
        raise InternalInvariantError(
            f"cycle lemma gave {len(valid)} valid rotations for {x}"
        )
    j = valid[0]
    result = tuple((v + (n - j) * m) % N for v in x[: n - 1])
    if not is_parking_mn(p, result):
        raise InternalInvariantError(
            f"rotation of {x} projected to non-parking tuple {result}"
        )
    return result


def shift_classes(
    p: KnmParams, budget: int = DEFAULT_SET_BUDGET
) -> list[tuple[tuple[int, ...], ...]]:
    """All shift classes of D_{m,n}, keyed by lexicographically smallest
    member, sorted by key."""
    seen = set()
    classes = []
    for x in enumerate_residue_tuples(p, budget):
        if x in seen:
            continue
        cls = shift_class(p, x)
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda cls: cls[0])
    return classes
