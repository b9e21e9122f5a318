"""Symmetric-group machinery for the break-divisor modules.

Characters are stored as class functions: dicts from cycle types
(partitions of n) to integers.  The single irreducible-character engine
is the Murnaghan-Nakayama border-strip recursion; h-to-s conversion
goes through character inner products against it.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

from . import knm
from .errors import InternalInvariantError, PreconditionError

Partition = Tuple[int, ...]
ClassFunction = Dict[Partition, int]


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def _z(lam: Partition) -> int:
    z = 1
    mult: Dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, cnt in mult.items():
        z *= part**cnt * math.factorial(cnt)
    return z


def class_size(lam: Partition) -> int:
    """Size of the conjugacy class of cycle type lam in S_|lam|."""
    n = sum(lam)
    return math.factorial(n) // _z(lam)


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi^lam evaluated on cycle type mu.

    Border strips of length r removable from lam correspond to beta
    numbers b with b - r >= 0 and b - r not a beta number; the strip
    height is the number of beta numbers strictly between b - r and b.
    """
    if sum(lam) != sum(mu):
        raise PreconditionError("partitions must have equal size")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(
            x
            for i, v in enumerate(new_beta)
            if (x := v - (length - 1 - i)) > 0
        )
        sign = -1 if height % 2 else 1
        total += sign * murnaghan_nakayama(new_lam, rest)
    return total


def character_break_closed(m: int, n: int, lam: Partition) -> int:
    """Fixed-point count of a type-lam permutation on the break divisors
    of K_n^m, by closed formula in ell = number of parts and
    d = gcd of the parts."""
    if sum(lam) != n:
        raise PreconditionError("lam must be a partition of n")
    ell = len(lam)
    d = 0
    for part in lam:
        d = math.gcd(d, part)
    base = Fraction(m) ** (ell - 1) * Fraction(n) ** (ell - 2)
    if d == 1:
        value = base
    elif d == 2 and m % 2 == 1 and n % 4 == 2:
        value = 2 * base
    else:
        return 0
    if value.denominator != 1:
        raise InternalInvariantError(
            f"closed character formula non-integral at m={m}, n={n}, lam={lam}"
        )
    return value.numerator


def permutation_of_type(lam: Partition) -> tuple[int, ...]:
    """One permutation of cycle type lam, as a 0-based image tuple."""
    n = sum(lam)
    perm = list(range(n))
    pos = 0
    for part in lam:
        for k in range(part):
            perm[pos + k] = pos + (k + 1) % part
        pos += part
    return tuple(perm)


def _fixed_count(tuples: Iterable[Sequence[int]], perm: Sequence[int]) -> int:
    return sum(
        1
        for t in tuples
        if all(t[i] == t[perm[i]] for i in range(len(perm)))
    )


def character_break_bruteforce(m: int, n: int, lam: Partition) -> int:
    """Count break divisors fixed by one permutation of type lam."""
    perm = permutation_of_type(lam)
    return _fixed_count(knm.enumerate_break(knm.KnmParams(m, n)), perm)


def character_break(m: int, n: int) -> ClassFunction:
    """The closed-form class function on every cycle type of S_n."""
    return {
        lam: character_break_closed(m, n, lam) for lam in partitions_of(n)
    }


def character_parking_bruteforce(m: int, n: int, mu: Partition) -> int:
    """Count parking functions of K_n^m fixed by a type-mu permutation
    of S_{n-1} (acting on the n-1 coordinates)."""
    if sum(mu) != n - 1:
        raise PreconditionError("mu must be a partition of n-1")
    perm = permutation_of_type(mu)
    return _fixed_count(knm.enumerate_parking(knm.KnmParams(m, n)), perm)


def character_parking(m: int, n: int) -> ClassFunction:
    return {
        mu: character_parking_bruteforce(m, n, mu)
        for mu in partitions_of(n - 1)
    }


def character_shift_classes_bruteforce(m: int, n: int) -> ClassFunction:
    """Character of the permutation action on shift classes of the
    residue tuples: a class is fixed when the permuted member set equals
    the original."""
    p = knm.KnmParams(m, n)
    classes = [frozenset(cls) for cls in knm.shift_classes(p)]
    values: ClassFunction = {}
    for lam in partitions_of(n):
        perm = permutation_of_type(lam)
        fixed = 0
        for cls in classes:
            image = frozenset(
                tuple(t[perm[i]] for i in range(n)) for t in cls
            )
            if image == cls:
                fixed += 1
        values[lam] = fixed
    return values


def restrict_character(chi: ClassFunction) -> ClassFunction:
    """Restriction from S_n to S_{n-1}: append a fixed point to each
    cycle type of S_{n-1} and read off the S_n value."""
    n = sum(next(iter(chi)))
    if n < 2:
        raise PreconditionError("restriction needs n >= 2")
    out: ClassFunction = {}
    for mu in partitions_of(n - 1):
        extended = tuple(sorted(mu + (1,), reverse=True))
        out[mu] = chi[extended]
    return out


def orbit_multiplicity_partition(rep: Sequence[int]) -> Partition:
    """The h-index of an orbit: partition of multiplicities of the
    repeated values in a representative."""
    counts: Dict[int, int] = {}
    for v in rep:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.values(), reverse=True))


def perm_module_h_expansion(
    orbit_reps: Iterable[Sequence[int]],
) -> Dict[Partition, int]:
    """Frobenius characteristic of a permutation module as a sum of
    complete homogeneous symmetric functions, one h per orbit."""
    coeffs: Dict[Partition, int] = {}
    for rep in orbit_reps:
        mu = orbit_multiplicity_partition(rep)
        coeffs[mu] = coeffs.get(mu, 0) + 1
    return dict(sorted(coeffs.items()))


@lru_cache(maxsize=None)
def _distributions(cycles: Partition, blocks: Partition) -> int:
    """Ways to assign the (labeled) cycles to the ordered blocks so each
    block's assigned lengths sum to its size."""
    if not blocks:
        return 1 if not cycles else 0
    block = blocks[0]
    rest_blocks = blocks[1:]
    total = 0
    k = len(cycles)
    for r in range(k + 1):
        for combo in itertools.combinations(range(k), r):
            if sum(cycles[i] for i in combo) != block:
                continue
            chosen = set(combo)
            rest = tuple(cycles[i] for i in range(k) if i not in chosen)
            total += _distributions(rest, rest_blocks)
    return total


def h_module_character(coeffs: Dict[Partition, int], n: int) -> ClassFunction:
    """Character of a sum of h-indexed permutation modules: a tabloid is
    fixed by sigma exactly when each row is a union of cycles, so the
    value on class nu counts distributions of the cycles of nu among
    blocks of sizes mu."""
    values: ClassFunction = {}
    for nu in partitions_of(n):
        values[nu] = sum(
            c * _distributions(tuple(nu), tuple(mu))
            for mu, c in coeffs.items()
        )
    return values


def schur_expansion(chi: ClassFunction) -> Dict[Partition, int]:
    """Expand a class function in irreducible characters: coefficient of
    s_lam is the inner product (1/n!) sum class_size * chi * chi^lam."""
    n = sum(next(iter(chi)))
    nfact = math.factorial(n)
    out: Dict[Partition, int] = {}
    for lam in partitions_of(n):
        acc = 0
        for mu in partitions_of(n):
            acc += class_size(mu) * chi[mu] * murnaghan_nakayama(lam, mu)
        coeff = Fraction(acc, nfact)
        if coeff.denominator != 1:
            raise InternalInvariantError(
                f"non-integral multiplicity of s_{lam}: {coeff}"
            )
        if coeff != 0:
            out[lam] = coeff.numerator
    return out


def h_to_s(coeffs: Dict[Partition, int], n: int) -> Dict[Partition, int]:
    """Convert an h-expansion to an s-expansion via the character of the
    corresponding permutation module."""
    return schur_expansion(h_module_character(coeffs, n))


def trivial_multiplicity(chi: ClassFunction) -> int:
    """Multiplicity of the trivial character: (1/n!) sum class_size * chi."""
    n = sum(next(iter(chi)))
    acc = sum(class_size(mu) * chi[mu] for mu in partitions_of(n))
    coeff = Fraction(acc, math.factorial(n))
    if coeff.denominator != 1:
        raise InternalInvariantError("trivial multiplicity not integral")
    return coeff.numerator


def dominated_partition_count(m: int, n: int) -> int:
    """Partitions of the genus with at most n parts dominated by
    (m(n-1)-1, ..., m-1, 0); these index the orbits of break divisors."""
    p = knm.KnmParams(m, n)
    delta = p.delta
    count = 0
    for lam in partitions_of(p.genus):
        if len(lam) > n:
            continue
        padded = lam + (0,) * (n - len(lam))
        prefix_l = prefix_d = 0
        dominated = True
        for i in range(n):
            prefix_l += padded[i]
            prefix_d += delta[i]
            if prefix_l > prefix_d:
                dominated = False
                break
        if dominated:
            count += 1
    return count
