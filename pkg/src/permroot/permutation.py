"""Permutations of finite sets of positive integers, in cycle notation.

A permutation is stored canonically: every cycle is written starting at its
smallest element and cycles are listed in increasing order of their minima.
The empty permutation (empty ground set) is a valid value.  Values are
immutable and safe to share across threads.

An enriched permutation additionally carries, for a fixed modulus ``r >= 2``,
a color in ``1..r-1`` on every cycle whose length is divisible by ``r``
(a *singular* cycle); cycles of non-divisible length (*regular* cycles) are
never colored.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import CycleNotationError, DomainError, InvalidPermutationError

Cycle = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)\s*\)(?:_(\d+))?")


def _canonical_cycles(cycles: Iterable[Iterable[int]]) -> tuple[Cycle, ...]:
    """Validate disjointness, rotate each cycle to its minimum, sort by minima."""
    seen: set[int] = set()
    out: list[Cycle] = []
    for raw in cycles:
        cyc = tuple(raw)
        if not cyc:
            raise InvalidPermutationError("empty cycle")
        for e in cyc:
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise InvalidPermutationError(f"cycle entries must be positive integers, got {e!r}")
            if e in seen:
                raise InvalidPermutationError(f"element {e} appears in more than one position")
            seen.add(e)
        pivot = cyc.index(min(cyc))
        out.append(cyc[pivot:] + cyc[:pivot])
    out.sort(key=lambda c: c[0])
    return tuple(out)


class Permutation:
    """An immutable permutation of an arbitrary finite set of positive integers."""

    __slots__ = ("_cycles",)

    def __init__(self, cycles: Iterable[Iterable[int]] = ()):
        self._cycles = _canonical_cycles(cycles)

    @classmethod
    def _from_canonical(cls, cycles: tuple[Cycle, ...]) -> "Permutation":
        # trusted constructor: cycles must already be canonical and disjoint
        p = object.__new__(cls)
        p._cycles = cycles
        return p

    @classmethod
    def identity(cls, elements: Iterable[int]) -> "Permutation":
        elems = sorted(set(elements))
        if elems and elems[0] < 1:
            raise InvalidPermutationError("ground-set elements must be positive integers")
        return cls._from_canonical(tuple((e,) for e in elems))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Permutation":
        """Build from an element -> image mapping (must be a bijection of its key set)."""
        keys = set(mapping)
        if set(mapping.values()) != keys:
            raise InvalidPermutationError("mapping is not a bijection of its key set")
        return cls._from_canonical(_walk_cycles(sorted(keys), mapping))

    @classmethod
    def from_one_line(cls, elements: Iterable[int], images: Iterable[int]) -> "Permutation":
        """Build from the images of ``sorted(elements)`` in order."""
        elems = sorted(set(elements))
        imgs = list(images)
        if len(imgs) != len(elems):
            raise InvalidPermutationError("one-line image list has the wrong length")
        return cls.from_mapping(dict(zip(elems, imgs)))

    # -- structure ---------------------------------------------------------

    @property
    def cycles(self) -> tuple[Cycle, ...]:
        return self._cycles

    @property
    def size(self) -> int:
        return sum(len(c) for c in self._cycles)

    def elements(self) -> tuple[int, ...]:
        """Ground set as a sorted tuple."""
        return tuple(sorted(e for c in self._cycles for e in c))

    def ground_set(self) -> frozenset[int]:
        return frozenset(e for c in self._cycles for e in c)

    @property
    def is_identity(self) -> bool:
        return all(len(c) == 1 for c in self._cycles)

    def mapping(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for c in self._cycles:
            n = len(c)
            for i, e in enumerate(c):
                m[e] = c[(i + 1) % n]
        return m

    def apply(self, x: int) -> int:
        for c in self._cycles:
            if x in c:
                return c[(c.index(x) + 1) % len(c)]
        raise DomainError(f"element {x} is not in the ground set")

    def one_line(self) -> tuple[int, ...]:
        m = self.mapping()
        return tuple(m[e] for e in self.elements())

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self._cycles)

    def cycle_containing(self, x: int) -> Cycle:
        for c in self._cycles:
            if x in c:
                return c
        raise DomainError(f"element {x} is not in the ground set")

    def cycle_type(self) -> "CycleType":
        return CycleType.of_lengths(self.cycle_lengths())

    # -- operations ---------------------------------------------------------

    def power(self, e: int) -> "Permutation":
        """The e-th compositional power, e >= 0; power(0) is the identity."""
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"exponent must be a nonnegative integer, got {e!r}")
        m: dict[int, int] = {}
        for c in self._cycles:
            n = len(c)
            for i, x in enumerate(c):
                m[x] = c[(i + e) % n]
        return Permutation._from_canonical(_walk_cycles(self.elements(), m))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self . other)(x) = self(other(x)); both must share a ground set."""
        if self.ground_set() != other.ground_set():
            raise DomainError("compose requires equal ground sets")
        sm, om = self.mapping(), other.mapping()
        return Permutation._from_canonical(
            _walk_cycles(self.elements(), {x: sm[om[x]] for x in om})
        )

    def split_parts(self, q: int) -> tuple["Permutation", "Permutation"]:
        """Split into the q-regular part (cycle lengths not divisible by q)
        and the q-singular part (lengths divisible by q)."""
        if not isinstance(q, int) or q < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {q!r}")
        regular = tuple(c for c in self._cycles if len(c) % q != 0)
        singular = tuple(c for c in self._cycles if len(c) % q == 0)
        return Permutation._from_canonical(regular), Permutation._from_canonical(singular)

    def relabel(self, mapping: Mapping[int, int]) -> "Permutation":
        """Rename every element through ``mapping`` (an injection on the ground set)."""
        return Permutation(tuple(mapping[e] for e in c) for c in self._cycles)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._cycles == other._cycles

    def __hash__(self) -> int:
        return hash(self._cycles)

    def __str__(self) -> str:
        return " ".join("(" + " ".join(str(e) for e in c) + ")" for c in self._cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def to_json_dict(self) -> dict:
        return {"cycles": [list(c) for c in self._cycles]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Permutation":
        return cls(data.get("cycles", ()))


def _walk_cycles(elements_sorted, mapping) -> tuple[Cycle, ...]:
    """Decompose a mapping into cycles; walking minima in increasing order
    yields the canonical form directly."""
    seen: set[int] = set()
    out: list[Cycle] = []
    for s in elements_sorted:
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        t = mapping[s]
        while t != s:
            cyc.append(t)
            seen.add(t)
            t = mapping[t]
        out.append(tuple(cyc))
    return tuple(out)


class EnrichedPermutation:
    """A permutation with a color in ``1..r-1`` on each r-singular cycle."""

    __slots__ = ("_base", "_r", "_color_seq")

    def __init__(self, base: Permutation, r: int, colors):
        """``colors`` is either a mapping {cycle index: color} or a sequence
        aligned with ``base.cycles`` using None on regular cycles."""
        if not isinstance(r, int) or r < 2:
            raise InvalidPermutationError(f"enrichment modulus must be an integer >= 2, got {r!r}")
        cycles = base.cycles
        if isinstance(colors, Mapping):
            seq = [None] * len(cycles)
            for i, c in colors.items():
                idx = int(i)
                if not 0 <= idx < len(cycles):
                    raise InvalidPermutationError(f"color index {i} out of range")
                seq[idx] = c
        else:
            seq = list(colors)
            if len(seq) != len(cycles):
                raise InvalidPermutationError("color sequence length does not match cycle count")
        for cyc, col in zip(cycles, seq):
            if len(cyc) % r == 0:
                if col is None:
                    raise InvalidPermutationError(
                        f"singular cycle {cyc} (length {len(cyc)}, r={r}) must carry a color"
                    )
                if not isinstance(col, int) or not 1 <= col <= r - 1:
                    raise InvalidPermutationError(f"color {col!r} out of range 1..{r - 1}")
            elif col is not None:
                raise InvalidPermutationError(f"regular cycle {cyc} must not carry a color")
        self._base = base
        self._r = r
        self._color_seq = tuple(seq)

    @classmethod
    def from_plain(cls, base: Permutation) -> "EnrichedPermutation":
        """The r = 2 isomorphism: every 2-singular (even) cycle gets the only color, 1."""
        return cls(base, 2, tuple(1 if len(c) % 2 == 0 else None for c in base.cycles))

    @property
    def base(self) -> Permutation:
        return self._base

    @property
    def r(self) -> int:
        return self._r

    @property
    def color_seq(self) -> tuple:
        return self._color_seq

    def colors(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self._color_seq) if c is not None}

    def to_plain(self) -> Permutation:
        return self._base

    @property
    def size(self) -> int:
        return self._base.size

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EnrichedPermutation)
            and self._r == other._r
            and self._base == other._base
            and self._color_seq == other._color_seq
        )

    def __hash__(self) -> int:
        return hash((self._base, self._r, self._color_seq))

    def __str__(self) -> str:
        parts = []
        for cyc, col in zip(self._base.cycles, self._color_seq):
            text = "(" + " ".join(str(e) for e in cyc) + ")"
            parts.append(text if col is None else f"{text}_{col}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"EnrichedPermutation({str(self)!r}, r={self._r})"

    def to_json_dict(self) -> dict:
        return {
            "cycles": [list(c) for c in self._base.cycles],
            "colors": {str(i): c for i, c in self.colors().items()},
            "r": self._r,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "EnrichedPermutation":
        return cls(Permutation(data.get("cycles", ())), data["r"], data.get("colors", {}))


class CycleType:
    """A multiset of cycle lengths, e.g. 1^1 2^2 4^2; the empty type is allowed."""

    __slots__ = ("_pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        merged: dict[int, int] = {}
        for length, count in pairs:
            if not isinstance(length, int) or length < 1:
                raise DomainError(f"cycle length must be a positive integer, got {length!r}")
            if not isinstance(count, int) or count < 1:
                raise DomainError(f"multiplicity must be a positive integer, got {count!r}")
            merged[length] = merged.get(length, 0) + count
        self._pairs = tuple(sorted(merged.items()))

    @classmethod
    def of_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for length in lengths:
            counts[length] = counts.get(length, 0) + 1
        return cls(counts.items())

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    @property
    def total(self) -> int:
        return sum(length * count for length, count in self._pairs)

    def counts(self) -> dict[int, int]:
        return dict(self._pairs)

    def count_of(self, length: int) -> int:
        for ln, ct in self._pairs:
            if ln == length:
                return ct
        return 0

    def lengths(self) -> tuple[int, ...]:
        return tuple(length for length, _ in self._pairs)

    def expand(self) -> tuple[int, ...]:
        """All lengths with multiplicity, sorted."""
        return tuple(ln for ln, ct in self._pairs for _ in range(ct))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycleType) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __str__(self) -> str:
        return " ".join(f"{ln}^{ct}" for ln, ct in self._pairs)

    def __repr__(self) -> str:
        return f"CycleType({str(self)!r})" if self._pairs else "CycleType()"


def parse_cycle_type(text: str) -> CycleType:
    """Parse "1^2,4^2" or "1^2 4^2" (bare "4" means 4^1); "" is the empty type."""
    text = text.strip()
    if not text:
        return CycleType()
    pairs = []
    for token in re.split(r"[,\s]+", text):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
        if m is None:
            raise CycleNotationError(f"bad cycle-type token {token!r}")
        pairs.append((int(m.group(1)), int(m.group(2) or 1)))
    lengths = [ln for ln, _ in pairs]
    if len(set(lengths)) != len(lengths):
        raise CycleNotationError("cycle type lists a length twice")
    return CycleType(pairs)


def parse(text: str, r: int | None = None) -> Permutation | EnrichedPermutation:
    """Parse cycle notation; with ``r`` given the result is enriched and every
    r-singular cycle must carry a ``_color`` subscript.

    Grammar: cycles like "(1 2 4)" optionally subscripted "_2", separated by
    whitespace; the empty string is the empty permutation.
    """
    cycles: list[Cycle] = []
    colors: list[int | None] = []
    pos = 0
    for m in _CYCLE_RE.finditer(text):
        if text[pos : m.start()].strip():
            raise CycleNotationError(f"unexpected text {text[pos:m.start()]!r}")
        pos = m.end()
        cyc = tuple(int(tok) for tok in m.group(1).split())
        if any(e < 1 for e in cyc):
            raise CycleNotationError("cycle entries must be positive integers")
        cycles.append(cyc)
        colors.append(int(m.group(2)) if m.group(2) is not None else None)
    if text[pos:].strip():
        raise CycleNotationError(f"unexpected trailing text {text[pos:]!r}")

    if r is None:
        if any(c is not None for c in colors):
            raise CycleNotationError("color subscripts require an enrichment modulus r")
        return Permutation(cycles)

    # re-canonicalizing may reorder cycles, so colors must travel with them
    order = sorted(range(len(cycles)), key=lambda i: min(cycles[i]))
    base = Permutation(cycles)
    return EnrichedPermutation(base, r, tuple(colors[i] for i in order))
