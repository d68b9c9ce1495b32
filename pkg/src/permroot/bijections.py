"""Constructive bijections on cycle structures.

The maps here convert between r-regular permutations and enriched r-cycle
permutations through a chain of smaller bijections:

* ``extract_element`` / ``insert_element`` — remove one distinguished element
  from an r-regular permutation, or put it back as the last entry of the
  first cycle (mutually recursive case analysis on the first-cycle length
  modulo r).
* ``extend_regular`` — the size n -> n+1 bijection
  Reg_r(n) x [n+1] -> Reg_r(n+1) built on insertion.
* ``grow_first_cycle`` / ``shrink_first_cycle`` — lengthen or shorten the
  cycle containing the minimum by one element while keeping every other
  cycle r-regular.
* ``to_nearly_regular`` / ``from_nearly_regular`` — grow the first cycle to
  the next multiple of r and color it with the starting residue, which makes
  the step reversible.
* ``to_enriched_cycles`` / ``from_enriched_cycles`` — iterate the previous
  map, peeling one colored singular cycle per round, until the whole
  permutation consists of colored singular cycles.

"First cycle" always means the cycle containing the ground-set minimum,
which is the first cycle in canonical order.  All functions are pure; all
inputs are validated and violations raise ``DomainError``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import DomainError, InvalidPermutationError
from .families import is_regular
from .permutation import Cycle, EnrichedPermutation, Permutation


class DeltaOutput(NamedTuple):
    """Result of extracting a distinguished element: the element and an
    r-regular permutation of the remaining ground set."""

    distinguished: int
    rest: Permutation


class ColoredFirstCycle(NamedTuple):
    """A singular cycle containing its ground-set minimum, with the color
    recording the residue the first cycle had before it was grown."""

    cycle: Cycle
    color: int


# -- element extraction / insertion (mutually recursive) ---------------------

def _check_r(r) -> None:
    if not isinstance(r, int) or r < 2:
        raise DomainError(f"r must be an integer >= 2, got {r!r}")


def _extract(cycles: tuple[Cycle, ...], r: int) -> tuple[int, tuple[Cycle, ...]]:
    first = cycles[0]
    rest = cycles[1:]
    length = len(first)
    x = first[-1]
    if length == 1:
        return x, rest
    if length % r != 1:
        return x, (first[:-1],) + rest
    # length = 1 mod r and > 1: also pull out the second-to-last entry and
    # re-insert it into the remaining cycles
    second = first[-2]
    return x, (first[:-2],) + _insert(second, rest, r)


def _insert(x: int, cycles: tuple[Cycle, ...], r: int) -> tuple[Cycle, ...]:
    if not cycles or x < cycles[0][0]:
        return ((x,),) + cycles
    first = cycles[0]
    rest = cycles[1:]
    if len(first) % r != r - 1:
        return (first + (x,),) + rest
    # appending one entry would make the first cycle singular, so extract an
    # extra element from the rest and append both
    second, remainder = _extract(rest, r)
    return (first + (second, x),) + remainder


def extract_element(sigma: Permutation, r: int) -> DeltaOutput:
    """Split an r-regular permutation of S (|S| not a multiple of r) into a
    distinguished element x and an r-regular permutation of S minus x."""
    _check_r(r)
    if not sigma.cycles:
        raise DomainError("cannot extract from the empty permutation")
    if sigma.size % r == 0:
        raise DomainError(f"ground-set size {sigma.size} is a multiple of r={r}")
    if not is_regular(sigma, r):
        raise DomainError(f"{sigma} is not {r}-regular")
    x, cycles = _extract(sigma.cycles, r)
    return DeltaOutput(x, Permutation._from_canonical(cycles))


def insert_element(x: int, pi: Permutation, r: int) -> Permutation:
    """Inverse of ``extract_element``: place x as the last entry of the first
    cycle of the result.  Requires |pi| + 1 not a multiple of r."""
    _check_r(r)
    if not isinstance(x, int) or x < 1:
        raise DomainError(f"distinguished element must be a positive integer, got {x!r}")
    if x in pi.ground_set():
        raise DomainError(f"element {x} already occurs in {pi}")
    if (pi.size + 1) % r == 0:
        raise DomainError(f"resulting size {pi.size + 1} would be a multiple of r={r}")
    if not is_regular(pi, r):
        raise DomainError(f"{pi} is not {r}-regular")
    return Permutation._from_canonical(_insert(x, pi.cycles, r))


def extend_regular(sigma: Permutation, j: int, r: int) -> Permutation:
    """The bijection Reg_r(n) x [n+1] -> Reg_r(n+1) (n+1 not a multiple of r):
    relabel [n+1] minus j order-preservingly onto [n], undone by insertion."""
    _check_r(r)
    n = sigma.size
    if sigma.ground_set() != frozenset(range(1, n + 1)):
        raise DomainError(f"ground set is not [{n}]")
    if (n + 1) % r == 0:
        raise DomainError(f"n+1={n + 1} is a multiple of r={r}")
    if not isinstance(j, int) or not 1 <= j <= n + 1:
        raise DomainError(f"j must lie in 1..{n + 1}, got {j!r}")
    if not is_regular(sigma, r):
        raise DomainError(f"{sigma} is not {r}-regular")
    labels = [e for e in range(1, n + 2) if e != j]
    relabeled = sigma.relabel({i + 1: lab for i, lab in enumerate(labels)})
    return insert_element(j, relabeled, r)


# -- first-cycle growth -------------------------------------------------------

def _grow(cycles: tuple[Cycle, ...], r: int) -> tuple[Cycle, ...]:
    x, rest = _extract(cycles[1:], r)
    return (cycles[0] + (x,),) + rest


def _shrink(cycles: tuple[Cycle, ...], r: int) -> tuple[Cycle, ...]:
    first = cycles[0]
    return (first[:-1],) + _insert(first[-1], cycles[1:], r)


def grow_first_cycle(sigma: Permutation, r: int) -> Permutation:
    """Move one element from the r-regular remainder to the end of the cycle
    containing the minimum (first-cycle length k -> k+1).  Requires that
    n - k is not a multiple of r."""
    _check_r(r)
    if not sigma.cycles:
        raise DomainError("cannot grow the empty permutation")
    k = len(sigma.cycles[0])
    if (sigma.size - k) % r == 0:
        raise DomainError(f"n-k={sigma.size - k} is a multiple of r={r}")
    if any(len(c) % r == 0 for c in sigma.cycles[1:]):
        raise DomainError("cycles beyond the first must be r-regular")
    return Permutation._from_canonical(_grow(sigma.cycles, r))


def shrink_first_cycle(pi: Permutation, r: int) -> Permutation:
    """Inverse of ``grow_first_cycle``: drop the last entry of the first
    cycle and re-insert it into the remainder."""
    _check_r(r)
    if not pi.cycles:
        raise DomainError("cannot shrink the empty permutation")
    length = len(pi.cycles[0])
    if length < 2:
        raise DomainError("first cycle has no entry to remove")
    if (pi.size - length + 1) % r == 0:
        raise DomainError(f"n-k={pi.size - length + 1} is a multiple of r={r}")
    if any(len(c) % r == 0 for c in pi.cycles[1:]):
        raise DomainError("cycles beyond the first must be r-regular")
    return Permutation._from_canonical(_shrink(pi.cycles, r))


# -- regular <-> nearly regular <-> enriched cycle permutations ---------------

def _grow_to_singular(cycles: tuple[Cycle, ...], r: int) -> tuple[tuple[Cycle, ...], int]:
    """Grow the first cycle to the next multiple of r; return the new cycles
    and the original residue (the color)."""
    color = len(cycles[0]) % r
    for _ in range(r - color):
        cycles = _grow(cycles, r)
    return cycles, color


def to_nearly_regular(sigma: Permutation, r: int) -> EnrichedPermutation:
    """Grow the first cycle of an r-regular permutation of a set of size rn
    to length r(k+1) and color it with the residue i it started from."""
    _check_r(r)
    if not sigma.cycles:
        raise DomainError("the empty permutation has no first cycle to grow")
    _check_r(r)
    if sigma.size % r != 0:
        raise DomainError(f"ground-set size {sigma.size} is not a multiple of r={r}")
    if not is_regular(sigma, r):
        raise DomainError(f"{sigma} is not {r}-regular")
    cycles, color = _grow_to_singular(sigma.cycles, r)
    colors = (color,) + (None,) * (len(cycles) - 1)
    return EnrichedPermutation(Permutation._from_canonical(cycles), r, colors)


def _require_nearly_regular(tau: EnrichedPermutation) -> int:
    seq = tau.color_seq
    if not seq or seq[0] is None or any(c is not None for c in seq[1:]):
        raise DomainError(
            "expected a nearly regular enrichment: exactly the first cycle colored"
        )
    return seq[0]


def from_nearly_regular(tau: EnrichedPermutation) -> Permutation:
    """Inverse of ``to_nearly_regular``: shrink the colored first cycle back
    to its recorded residue."""
    color = _require_nearly_regular(tau)
    r = tau.r
    cycles = tau.base.cycles
    for _ in range(r - color):
        cycles = _shrink(cycles, r)
    return Permutation._from_canonical(cycles)


def split_nearly_regular(tau: EnrichedPermutation) -> tuple[ColoredFirstCycle, Permutation]:
    """Split a nearly regular enrichment into its colored first cycle and the
    r-regular permutation of the remaining elements."""
    color = _require_nearly_regular(tau)
    cycles = tau.base.cycles
    return ColoredFirstCycle(cycles[0], color), Permutation._from_canonical(cycles[1:])


def to_enriched_cycles(sigma: Permutation, r: int) -> EnrichedPermutation:
    """Decompose an r-regular permutation of a set of size rn into colored
    singular cycles by repeatedly growing-and-peeling the first cycle.  The
    cycle containing the minimum has length r(k+1) when the input first
    cycle had length rk+i, and carries color i."""
    if sigma.size % r != 0:
        raise DomainError(f"ground-set size {sigma.size} is not a multiple of r={r}")
    if not is_regular(sigma, r):
        raise DomainError(f"{sigma} is not {r}-regular")
    work = sigma.cycles
    peeled: list[ColoredFirstCycle] = []
    while work:
        work, color = _grow_to_singular(work, r)
        peeled.append(ColoredFirstCycle(work[0], color))
        work = work[1:]
    # peel order equals increasing-minima order, so this is already canonical
    cycles = tuple(item.cycle for item in peeled)
    colors = tuple(item.color for item in peeled)
    return EnrichedPermutation(Permutation._from_canonical(cycles), r, colors)


def from_enriched_cycles(tau: EnrichedPermutation) -> Permutation:
    """Inverse of ``to_enriched_cycles``: rebuild innermost-first, shrinking
    each colored cycle back into the regular permutation recovered so far."""
    if any(c is None for c in tau.color_seq):
        raise DomainError("every cycle must be singular and colored")
    r = tau.r
    current: tuple[Cycle, ...] = ()
    for cyc, color in reversed(list(zip(tau.base.cycles, tau.color_seq))):
        work = (cyc,) + current
        for _ in range(r - color):
            work = _shrink(work, r)
        current = work
    return Permutation._from_canonical(current)


# -- merging a class of equal-length cycles -----------------------------------

def merge_cycle_class(
    cycles: Sequence[Sequence[int]], break_points: Sequence[int]
) -> Cycle:
    """Merge disjoint equal-length cycles into one long cycle: the first cycle
    is written from its minimum and each later cycle is broken open at its
    break point and appended.  Distinct break-point vectors give distinct
    cycles."""
    cycs = [tuple(c) for c in cycles]
    if len(cycs) < 2:
        raise DomainError("need at least two cycles to merge")
    length = len(cycs[0])
    if length < 1 or any(len(c) != length for c in cycs):
        raise DomainError("cycles must all have the same positive length")
    flat = [e for c in cycs for e in c]
    if len(set(flat)) != len(flat):
        raise InvalidPermutationError("cycles are not disjoint")
    if len(break_points) != len(cycs) - 1:
        raise DomainError(
            f"expected {len(cycs) - 1} break points, got {len(break_points)}"
        )
    head = cycs[0]
    pivot = head.index(min(head))
    merged = list(head[pivot:] + head[:pivot])
    for cyc, bp in zip(cycs[1:], break_points):
        if bp not in cyc:
            raise DomainError(f"break point {bp} is not in cycle {cyc}")
        j = cyc.index(bp)
        merged.extend(cyc[j:] + cyc[:j])
    # canonical rotation of the resulting cycle
    pivot = merged.index(min(merged))
    return tuple(merged[pivot:] + merged[:pivot])
