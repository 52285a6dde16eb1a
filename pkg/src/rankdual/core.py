"""Ground sets, bitmask subsets, and explicit integer rank tables.

A rank table stores one signed integer per subset of a finite ground set.
Subsets are encoded as bitmasks: bit i corresponds to the i-th label of the
ground set, so a table over n elements is a flat tuple of 2**n values indexed
by mask. Nothing at this level forces ranks to be nonnegative, monotone, or
subcardinal; those are reported by :func:`validate` and enforced only by the
axiom checkers that need them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

# Explicit tables hold 2**n entries; 24 keeps the worst case at 16M ints.
MAX_GROUND_SIZE = 24

# Ranks must stay inside machine-integer territory; the structures this
# library models never get anywhere near the bound.
MAX_RANK_MAGNITUDE = 2**31


class RankFunctionError(Exception):
    """Base class for all errors raised by this package."""


class GroundSetError(RankFunctionError):
    """Bad ground set or mixing subsets of different ground sets."""


class TableBuildError(RankFunctionError):
    """Rank-table construction failed (missing/duplicate/unknown entries)."""


class NormalizationError(RankFunctionError):
    """Operation requires r(empty) = 0 but the table is not normalized."""


@lru_cache(maxsize=None)
def masks_by_cardinality(n: int) -> tuple[int, ...]:
    """All masks over n bits sorted by (popcount, mask value).

    This is the canonical scan order for witness search: the first violation
    found in this order is the smallest by cardinality, ties broken by mask.
    """
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class GroundSet:
    """An ordered sequence of distinct element labels.

    Label order is fixed at construction and defines bit positions for
    subset masks.
    """

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_GROUND_SIZE:
            raise GroundSetError(
                f"ground set has {len(labels)} elements; explicit tables are "
                f"capped at {MAX_GROUND_SIZE}"
            )
        index = {}
        for pos, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise GroundSetError(f"labels must be non-empty strings, got {label!r}")
            if label in index:
                raise GroundSetError(f"duplicate label {label!r}")
            index[label] = pos
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        """Number of subsets, 2**n."""
        return 1 << len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def position(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GroundSetError(f"unknown label {label!r}") from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetRef:
        mask = 0
        for label in labels:
            bit = 1 << self.position(label)
            if mask & bit:
                raise GroundSetError(f"label {label!r} listed twice in subset")
            mask |= bit
        return SubsetRef(self, mask)

    def subset_from_mask(self, mask: int) -> SubsetRef:
        return SubsetRef(self, mask)

    def empty(self) -> SubsetRef:
        return SubsetRef(self, 0)

    def full(self) -> SubsetRef:
        return SubsetRef(self, self.full_mask)

    def subsets(self) -> Iterator[SubsetRef]:
        """All 2**n subsets in increasing mask order, each exactly once."""
        for mask in range(self.size):
            yield SubsetRef(self, mask)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class SubsetRef(object):
    """A subset of a specific ground set, stored as an n-bit mask."""

    ground: GroundSet
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits <= self.ground.full_mask:
            raise GroundSetError(
                f"mask {self.bits:#x} has bits outside the {self.ground.n}-element ground set"
            )

    def _check_same_ground(self, other: SubsetRef) -> None:
        if self.ground != other.ground:
            raise GroundSetError("subsets belong to different ground sets")

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for pos, label in enumerate(self.ground.labels) if self.bits >> pos & 1
        )

    def complement(self) -> SubsetRef:
        return SubsetRef(self.ground, self.ground.full_mask ^ self.bits)

    def union(self, other: SubsetRef) -> SubsetRef:
        self._check_same_ground(other)
        return SubsetRef(self.ground, self.bits | other.bits)

    def intersection(self, other: SubsetRef) -> SubsetRef:
        self._check_same_ground(other)
        return SubsetRef(self.ground, self.bits & other.bits)

    def difference(self, other: SubsetRef) -> SubsetRef:
        self._check_same_ground(other)
        return SubsetRef(self.ground, self.bits & ~other.bits)

    def issubset(self, other: SubsetRef) -> bool:
        self._check_same_ground(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: SubsetRef) -> bool:
        self._check_same_ground(other)
        return self.bits & other.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement
    __le__ = issubset

    def __contains__(self, label: str) -> bool:
        return self.bits >> self.ground.position(label) & 1 == 1

    def __len__(self) -> int:
        return self.cardinality

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


@dataclass(frozen=True)
class RankTable(object):
    """A total integer-valued function on all subsets of a ground set.

    ``values[mask]`` is the rank of the subset encoded by ``mask``. Ranks are
    arbitrary signed integers; in particular negative ranks are legal.
    """

    ground: GroundSet
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.ground.size:
            raise TableBuildError(
                f"expected {self.ground.size} rank entries, got {len(self.values)}"
            )
        for mask, v in enumerate(self.values):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TableBuildError(f"rank of mask {mask} is not an integer: {v!r}")
            if abs(v) > MAX_RANK_MAGNITUDE:
                raise TableBuildError(f"rank {v} exceeds the magnitude bound")

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full_rank(self) -> int:
        """Rank of the whole ground set."""
        return self.values[self.ground.full_mask]

    def rank(self, subset) -> int:
        """Rank of a subset given as a SubsetRef, a mask, or label iterable."""
        if isinstance(subset, SubsetRef):
            if subset.ground != self.ground:
                raise GroundSetError("subset belongs to a different ground set")
            return self.values[subset.bits]
        if isinstance(subset, int):
            return self.values[subset]
        return self.values[self.ground.subset(subset).bits]

    def subsets(self) -> Iterator[SubsetRef]:
        return self.ground.subsets()

    def is_normalized(self) -> bool:
        return self.values[0] == 0


def table_from_values(ground: GroundSet, values: Sequence[int]) -> RankTable:
    """Build a table directly from 2**n values in mask order."""
    return RankTable(ground, tuple(values))


def build_rank_table(ground: GroundSet, entries) -> RankTable:
    """Build a table from (subset, rank) pairs covering all 2**n subsets.

    Each subset may be a SubsetRef over ``ground`` or an iterable of labels.
    Every subset must appear exactly once; anything missing, duplicated, or
    referring to an unknown label is a hard error.
    """
    values: list = [None] * ground.size
    for subset, rank in entries:
        if isinstance(subset, SubsetRef):
            if subset.ground != ground:
                raise TableBuildError("entry subset belongs to a different ground set")
            mask = subset.bits
        else:
            mask = ground.subset(subset).bits
        if values[mask] is not None:
            raise TableBuildError(
                f"duplicate subset entry {SubsetRef(ground, mask)}"
            )
        values[mask] = rank
    for mask, v in enumerate(values):
        if v is None:
            raise TableBuildError(f"missing subset entry {SubsetRef(ground, mask)}")
    return RankTable(ground, tuple(values))


@dataclass(frozen=True)
class ValidationReport:
    """Structural flags of a rank table, with witnesses for false flags.

    ``normalized`` records r(empty) = 0. Each of the four named flags carries
    a witness exactly when it is false: a single subset for subcardinal,
    nonnegative, and rank_s_maximum, and a pair (A, B) with A contained in B
    for monotone.
    """

    normalized: bool
    subcardinal: bool
    nonnegative: bool
    monotone: bool
    rank_s_maximum: bool
    witnesses: dict

    def flag(self, name: str) -> bool:
        return getattr(self, name.replace("-", "_"))


def validate(table: RankTable) -> ValidationReport:
    """Report normalization, subcardinality, nonnegativity, monotonicity,
    and the rank-of-S-maximum property.

    Witnesses are the smallest violations in (cardinality, mask) order.
    """
    values = table.values
    n = table.n
    ground = table.ground
    order = masks_by_cardinality(n)
    total = values[ground.full_mask]
    witnesses: dict = {}

    subcardinal = nonnegative = rank_s_maximum = True
    for mask in order:
        card = mask.bit_count()
        v = values[mask]
        if subcardinal and v > card:
            subcardinal = False
            witnesses["subcardinal"] = SubsetRef(ground, mask)
        if nonnegative and v < 0:
            nonnegative = False
            witnesses["nonnegative"] = SubsetRef(ground, mask)
        if rank_s_maximum and v > total:
            rank_s_maximum = False
            witnesses["rank_s_maximum"] = SubsetRef(ground, mask)

    # A single-element violation exists iff any nested violation does.
    monotone = True
    for mask in order:
        if not monotone:
            break
        for pos in range(n):
            bit = 1 << pos
            if mask & bit:
                continue
            if values[mask | bit] < values[mask]:
                monotone = False
                witnesses["monotone"] = (
                    SubsetRef(ground, mask),
                    SubsetRef(ground, mask | bit),
                )
                break

    return ValidationReport(
        normalized=values[0] == 0,
        subcardinal=subcardinal,
        nonnegative=nonnegative,
        monotone=monotone,
        rank_s_maximum=rank_s_maximum,
        witnesses=witnesses,
    )
