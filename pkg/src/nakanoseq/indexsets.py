"""Index subsets of the positive integers used to split sequence spaces.

Every set normalizes to a *periodic* form: a modulus, a residue set, and
finite exception lists.  That form is closed under complement and
intersection, membership is O(1), and counting members in a range is exact,
which the series layer relies on for block-aggregated partial sums.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union


@dataclass(frozen=True)
class Periodic:
    """Normal form: {n >= 1 : n % modulus in residues}, plus/minus exceptions."""

    modulus: int
    residues: frozenset[int]
    plus: frozenset[int] = frozenset()
    minus: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        # keep exceptions genuinely exceptional
        plus = frozenset(n for n in self.plus if n % self.modulus not in self.residues)
        minus = frozenset(n for n in self.minus if n % self.modulus in self.residues)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def contains(self, n: int) -> bool:
        if n in self.plus:
            return True
        if n in self.minus:
            return False
        return n % self.modulus in self.residues

    def is_infinite(self) -> bool:
        return bool(self.residues)

    def complement(self) -> "Periodic":
        all_res = frozenset(range(self.modulus))
        return Periodic(self.modulus, all_res - self.residues, plus=self.minus, minus=self.plus)

    def intersect(self, other: "Periodic") -> "Periodic":
        import math

        m = math.lcm(self.modulus, other.modulus)
        residues = frozenset(
            r for r in range(m) if (r % self.modulus) in self.residues and (r % other.modulus) in other.residues
        )
        base = Periodic(m, residues)
        # exceptions: any index where the naive periodic answer differs
        exceptional = self.plus | self.minus | other.plus | other.minus
        plus, minus = set(), set()
        for n in exceptional:
            actual = self.contains(n) and other.contains(n)
            naive = n % m in residues
            if actual and not naive:
                plus.add(n)
            elif naive and not actual:
                minus.add(n)
        return Periodic(m, residues, frozenset(plus), frozenset(minus))

    def members(self, start: int = 1) -> Iterator[int]:
        for n in itertools.count(start):
            if self.contains(n):
                yield n

    def first(self, count: int) -> list[int]:
        return list(itertools.islice(self.members(), count))

    def count_in_range(self, lo: int, hi: int) -> int:
        """Number of members n with lo <= n <= hi (exact, O(modulus))."""
        if hi < lo:
            return 0
        total = 0
        for r in self.residues:
            # count n in [lo, hi] with n % m == r
            first = lo + ((r - lo) % self.modulus)
            if first <= hi:
                total += (hi - first) // self.modulus + 1
        total += sum(1 for n in self.plus if lo <= n <= hi)
        total -= sum(1 for n in self.minus if lo <= n <= hi)
        return total


class IndexSet:
    """Abstract index set; concrete sets normalize through :meth:`periodic`."""

    def periodic(self) -> Periodic:
        raise NotImplementedError

    def contains(self, n: int) -> bool:
        return self.periodic().contains(n)

    def is_infinite(self) -> bool:
        return self.periodic().is_infinite()

    def first(self, count: int) -> list[int]:
        return self.periodic().first(count)


@dataclass(frozen=True)
class All(IndexSet):
    def periodic(self) -> Periodic:
        return Periodic(1, frozenset({0}))


@dataclass(frozen=True)
class Evens(IndexSet):
    def periodic(self) -> Periodic:
        return Periodic(2, frozenset({0}))


@dataclass(frozen=True)
class Odds(IndexSet):
    def periodic(self) -> Periodic:
        return Periodic(2, frozenset({1}))


@dataclass(frozen=True)
class Thinned(IndexSet):
    """Either every ``stride``-th index, or an explicit finite index list."""

    stride: int | None = None
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.stride is None and not self.indices:
            raise ValueError("Thinned needs a stride or an explicit index list")
        if self.stride is not None and self.stride < 1:
            raise ValueError("stride must be positive")
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    def periodic(self) -> Periodic:
        if self.stride is not None:
            return Periodic(self.stride, frozenset({0}))
        return Periodic(1, frozenset(), plus=frozenset(self.indices))


@dataclass(frozen=True)
class Complement(IndexSet):
    inner: IndexSet

    def periodic(self) -> Periodic:
        return self.inner.periodic().complement()


def complement(s: IndexSet) -> IndexSet:
    """Complement with Complement(Complement(S)) collapsing to S."""
    if isinstance(s, Complement):
        return s.inner
    return Complement(s)


def index_set_to_json(s: IndexSet) -> dict:
    if isinstance(s, All):
        return {"kind": "all"}
    if isinstance(s, Evens):
        return {"kind": "evens"}
    if isinstance(s, Odds):
        return {"kind": "odds"}
    if isinstance(s, Thinned):
        if s.stride is not None:
            return {"kind": "thinned", "stride": s.stride}
        return {"kind": "thinned", "indices": list(s.indices)}
    if isinstance(s, Complement):
        return {"kind": "complement", "inner": index_set_to_json(s.inner)}
    raise TypeError(f"not an IndexSet: {s!r}")


def index_set_from_json(obj: dict) -> IndexSet:
    kind = obj["kind"]
    if kind == "all":
        return All()
    if kind == "evens":
        return Evens()
    if kind == "odds":
        return Odds()
    if kind == "thinned":
        if "stride" in obj:
            return Thinned(stride=obj["stride"])
        return Thinned(indices=tuple(obj["indices"]))
    if kind == "complement":
        return complement(index_set_from_json(obj["inner"]))
    raise ValueError(f"unknown index set kind {kind!r}")
