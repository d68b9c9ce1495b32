"""Existence and construction of r-th roots of permutations.

A cycle of length m in pi contributes gcd(m, r) cycles of length
m / gcd(m, r) to pi**r.  Root existence therefore depends only on the cycle
type: for each cycle length the count must decompose into admissible bunch
sizes.  For prime powers r = q**l this collapses to the classical criterion
that every count of cycles whose length is divisible by q is a multiple of r.

Construction stays brute force and is the independent oracle the criteria
are validated against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError
from .permutation import CycleType, Permutation

BRUTE_FORCE_BOUND = 8


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def prime_power_decomposition(r: int) -> tuple[int, int] | None:
    """(q, l) with r = q**l and q prime, or None if r is not a prime power."""
    if r < 2:
        return None
    q = 2
    while q * q <= r:
        if r % q == 0:
            l = 0
            m = r
            while m % q == 0:
                m //= q
                l += 1
            return (q, l) if m == 1 else None
        q += 1
    return (r, 1)


@dataclass(frozen=True)
class RootQuery:
    """A root-existence question, with the prime-power factorization of r
    attached when there is one."""

    target: Permutation
    r: int
    factorization: tuple[int, int] | None

    @classmethod
    def make(cls, target: Permutation, r: int) -> "RootQuery":
        if not isinstance(r, int) or r < 2:
            raise DomainError(f"root degree must be an integer >= 2, got {r!r}")
        return cls(target, r, prime_power_decomposition(r))


def has_root_prime_power(sigma: Permutation, q: int, l: int) -> bool:
    """True iff sigma has a (q**l)-th root: every count of cycles whose
    length is a multiple of q must be a multiple of q**l."""
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if not isinstance(l, int) or l < 1:
        raise DomainError(f"exponent must be a positive integer, got {l!r}")
    r = q**l
    counts: dict[int, int] = {}
    for length in sigma.cycle_lengths():
        counts[length] = counts.get(length, 0) + 1
    return all(length % q != 0 or count % r == 0 for length, count in counts.items())


def bunch_sizes(length: int, r: int) -> tuple[int, ...]:
    """Admissible bunch sizes d for cycles of the given length: a pi-cycle of
    length d*length powers to d cycles of that length exactly when
    gcd(d*length, r) = d."""
    return tuple(d for d in range(1, r + 1) if r % d == 0 and gcd(d * length, r) == d)


@lru_cache(maxsize=None)
def _feasible(count: int, sizes: tuple[int, ...]) -> bool:
    """Can ``count`` be written as a nonnegative integer combination of sizes?"""
    if 1 in sizes:
        return True
    reachable = bytearray(count + 1)
    reachable[0] = 1
    for total in range(1, count + 1):
        for d in sizes:
            if d <= total and reachable[total - d]:
                reachable[total] = 1
                break
    return bool(reachable[count])


@lru_cache(maxsize=None)
def type_has_root(lengths: tuple[int, ...], r: int) -> bool:
    """Root existence from the sorted tuple of cycle lengths."""
    counts: dict[int, int] = {}
    for length in lengths:
        counts[length] = counts.get(length, 0) + 1
    return all(
        _feasible(count, bunch_sizes(length, r)) for length, count in counts.items()
    )


def has_root_general(sigma: Permutation, r: int) -> bool:
    """Root existence for arbitrary r >= 2 via per-length feasibility."""
    if not isinstance(r, int) or r < 2:
        raise DomainError(f"root degree must be an integer >= 2, got {r!r}")
    return type_has_root(tuple(sorted(sigma.cycle_lengths())), r)


def is_qr_divisible(rho: CycleType, q: int, r: int) -> bool:
    """True iff every length in rho is divisible by q and every multiplicity
    is divisible by r; vacuously true for the empty type."""
    for name, value in (("q", q), ("r", r)):
        if not isinstance(value, int) or value < 2:
            raise DomainError(f"{name} must be an integer >= 2, got {value!r}")
    return all(ln % q == 0 and ct % r == 0 for ln, ct in rho.pairs)


# -- brute force ---------------------------------------------------------------

def _power_image(
    img: tuple[int, ...], elems: tuple[int, ...], positions: dict[int, int], r: int
) -> tuple[int, ...]:
    """Image tuple of the r-th power of the permutation given by ``img`` over
    the sorted ground set ``elems``; ``positions`` maps element -> index."""
    n = len(img)
    out = [0] * n
    seen = bytearray(n)
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = 1
        t = positions[img[s]]
        while t != s:
            seen[t] = 1
            cyc.append(t)
            t = positions[img[t]]
        m = len(cyc)
        for i, pos in enumerate(cyc):
            out[pos] = elems[cyc[(i + r) % m]]
    return tuple(out)


def find_root_bruteforce(sigma: Permutation, r: int) -> Permutation | None:
    """The lexicographically least pi with pi**r = sigma, or None.  Bounded
    to ground sets of at most BRUTE_FORCE_BOUND elements."""
    if not isinstance(r, int) or r < 2:
        raise DomainError(f"root degree must be an integer >= 2, got {r!r}")
    if sigma.size > BRUTE_FORCE_BOUND:
        raise DomainError(
            f"brute-force search is limited to {BRUTE_FORCE_BOUND} elements, got {sigma.size}"
        )
    elems = sigma.elements()
    positions = {e: i for i, e in enumerate(elems)}
    target = sigma.one_line()
    for img in itertools.permutations(elems):
        if _power_image(img, elems, positions, r) == target:
            return Permutation.from_one_line(elems, img)
    return None


def brute_force_root_table(n: int, r: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """One pass over S_n: map each one-line permutation with an r-th root to
    its lexicographically least root (also in one-line form)."""
    if n > BRUTE_FORCE_BOUND:
        raise DomainError(
            f"brute-force search is limited to {BRUTE_FORCE_BOUND} elements, got {n}"
        )
    elems = tuple(range(1, n + 1))
    positions = {e: i for i, e in enumerate(elems)}
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for img in itertools.permutations(elems):
        table.setdefault(_power_image(img, elems, positions, r), img)
    return table
