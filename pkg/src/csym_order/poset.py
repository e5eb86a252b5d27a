"""Finite posets on {1..d}, their ideals and the distributive lattice J(P).

A poset is stored as its transitively closed strict order: for every
element ``i`` we keep the set of elements strictly below it.  Ideals
(down-sets) are plain ``frozenset`` objects of 1-based elements.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import CapExceeded, CycleError, NotAnIdeal, RangeError

MAX_GROUND_SET = 62
MAX_ENUMERATION = 5

PosetIdeal = frozenset


@dataclass(frozen=True)
class Poset:
    """Immutable strict partial order on ``{1..d}``.

    ``below[i - 1]`` holds every element strictly below ``i``.
    """

    d: int
    below: tuple[frozenset, ...]

    def __post_init__(self):
        if not 1 <= self.d <= MAX_GROUND_SET:
            raise RangeError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.d}")
        if len(self.below) != self.d:
            raise ValueError("below must have one entry per element")
        for i, low in enumerate(self.below, start=1):
            if i in low:
                raise ValueError(f"relation is not irreflexive at {i}")
            for j in low:
                if not 1 <= j <= self.d:
                    raise RangeError(f"element {j} outside 1..{self.d}")
                if not self.below[j - 1] <= low:
                    raise ValueError(f"relation is not transitive at {j} < {i}")
                if i in self.below[j - 1]:
                    raise ValueError(f"relation is not antisymmetric at {i}, {j}")

    @property
    def elements(self) -> range:
        return range(1, self.d + 1)

    def less(self, a: int, b: int) -> bool:
        """True iff a < b strictly."""
        return a in self.below[b - 1]

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def principal_ideal(self, a: int) -> frozenset:
        return self.below[a - 1] | {a}

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations (a, b), a < b with nothing strictly between."""
        out = []
        for b in self.elements:
            for a in sorted(self.below[b - 1]):
                if not any(a in self.below[c - 1] for c in self.below[b - 1]):
                    out.append((a, b))
        return out

    def is_ideal(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return all(1 <= a <= self.d and self.below[a - 1] <= s for a in s)

    def encoding(self) -> tuple:
        """Hashable canonical encoding, used to sort sweep output."""
        return (self.d, tuple(tuple(sorted(b)) for b in self.below))

    def to_dict(self) -> dict:
        return {"d": self.d, "covers": [list(c) for c in self.covers()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        try:
            d = int(data["d"])
            covers = [(int(a), int(b)) for a, b in data.get("covers", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed poset record: {exc}") from exc
        return from_cover_relations(d, covers)

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_dict(json.loads(text))


def from_cover_relations(d: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Build the poset generated by relations ``a < b`` (transitive closure)."""
    if not isinstance(d, int) or d < 1:
        raise RangeError(f"d must be a positive integer, got {d!r}")
    if d > MAX_GROUND_SET:
        raise RangeError(f"d={d} exceeds the cap of {MAX_GROUND_SET}")
    up: list[set] = [set() for _ in range(d + 1)]
    for a, b in covers:
        if not (1 <= a <= d and 1 <= b <= d):
            raise RangeError(f"relation ({a}, {b}) outside 1..{d}")
        if a == b:
            raise CycleError(f"self-loop at {a}")
        up[b].add(a)

    # transitive closure by DFS from each element; a revisit of the root is a cycle
    below = []
    for i in range(1, d + 1):
        seen: set = set()
        stack = list(up[i])
        while stack:
            j = stack.pop()
            if j == i:
                raise CycleError(f"cover relations contain a cycle through {i}")
            if j in seen:
                continue
            seen.add(j)
            stack.extend(up[j])
        below.append(frozenset(seen))
    return Poset(d, tuple(below))


def chain(d: int) -> Poset:
    return from_cover_relations(d, [(i, i + 1) for i in range(1, d)])


def antichain(d: int) -> Poset:
    return from_cover_relations(d, [])


def ideal_sort_key(ideal: frozenset) -> tuple:
    return (len(ideal), tuple(sorted(ideal)))


def enumerate_ideals(p: Poset) -> list[frozenset]:
    """All poset ideals of ``p`` (including the empty set and ``P``).

    Breadth-first over the lattice, growing each ideal by one element whose
    down-set is already present.  Output is sorted by cardinality, then
    lexicographically by the sorted element list.
    """
    start = frozenset()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for ideal in frontier:
            for a in p.elements:
                if a not in ideal and p.below[a - 1] <= ideal:
                    bigger = ideal | {a}
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=ideal_sort_key)


def maximal_elements(p: Poset, ideal: Iterable[int]) -> frozenset:
    s = frozenset(ideal)
    return frozenset(a for a in s if not any(a in p.below[b - 1] for b in s))


class IdealOps(NamedTuple):
    union: frozenset
    intersection: frozenset
    incomparable: bool
    maximal_of_I: frozenset


def ideal_lattice_ops(p: Poset, I: Iterable[int], J: Iterable[int]) -> IdealOps:
    I, J = frozenset(I), frozenset(J)
    for name, s in (("I", I), ("J", J)):
        if not p.is_ideal(s):
            raise NotAnIdeal(f"{name}={sorted(s)} is not a poset ideal")
    return IdealOps(
        union=I | J,
        intersection=I & J,
        incomparable=not (I <= J) and not (J <= I),
        maximal_of_I=maximal_elements(p, I),
    )


def has_three_antichain(p: Poset) -> bool:
    """True iff three pairwise incomparable elements exist (width >= 3)."""
    for a, b, c in itertools.combinations(p.elements, 3):
        if not (p.comparable(a, b) or p.comparable(a, c) or p.comparable(b, c)):
            return True
    return False


def enumerate_all_posets(d: int) -> list[Poset]:
    """Every labeled poset on ``{1..d}``, for ``d <= 5``.

    Each unordered pair is assigned one of {incomparable, i<j, j<i}; the
    assignments that are transitive are kept.
    """
    if d > MAX_ENUMERATION:
        raise CapExceeded(f"enumerate_all_posets is capped at d={MAX_ENUMERATION}, got {d}")
    if d < 1:
        raise RangeError(f"d must be positive, got {d}")
    pairs = list(itertools.combinations(range(1, d + 1), 2))
    out = []
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        below = [set() for _ in range(d + 1)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                below[j].add(i)
            elif c == 2:
                below[i].add(j)
        if all(below[j] <= below[i] for i in range(1, d + 1) for j in below[i]):
            out.append(Poset(d, tuple(frozenset(b) for b in below[1:])))
    return out
