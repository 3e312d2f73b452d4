"""Finite ground sets and subsets as bit vectors.

Element i of a ground set corresponds to bit i of a subset mask, so all
set algebra is plain integer arithmetic.  Ground sets are capped at 16
elements: a subset then always fits a machine word and a family of
subsets fits a 2^16-bit mask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_GROUND_SIZE = 16

DEFAULT_LABELS = "abcdefghijklmnop"


class GroundSetError(ValueError):
    """Invalid ground set, unknown label, or ground-set mismatch."""


@dataclass(frozen=True)
class GroundSet:
    """Ordered, distinct element labels; label i owns bit i."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.names) <= MAX_GROUND_SIZE:
            raise GroundSetError(
                f"ground set must have 1..{MAX_GROUND_SIZE} elements, got {len(self.names)}"
            )
        if len(set(self.names)) != len(self.names):
            raise GroundSetError(f"duplicate labels in {self.names}")
        if any(not name for name in self.names):
            raise GroundSetError("empty label")

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise GroundSetError(f"unknown label {label!r}; ground set is {self.names}") from None

    def __repr__(self) -> str:
        return f"GroundSet({'{' + ','.join(self.names) + '}'})"


def ground(n_or_names) -> GroundSet:
    """GroundSet from a size (labels a, b, c, ...) or an iterable of labels."""
    if isinstance(n_or_names, int):
        if not 1 <= n_or_names <= MAX_GROUND_SIZE:
            raise GroundSetError(f"size out of range: {n_or_names}")
        return GroundSet(tuple(DEFAULT_LABELS[:n_or_names]))
    return GroundSet(tuple(n_or_names))


@dataclass(frozen=True, order=True)
class Subset:
    """Characteristic bit vector over one ground set."""

    bits: int
    ground: GroundSet = field(compare=False)

    def __post_init__(self) -> None:
        if self.bits & ~self.ground.full_mask:
            raise GroundSetError(f"bits {self.bits:#x} outside ground set of size {self.ground.size}")

    def labels(self) -> tuple[str, ...]:
        return tuple(name for i, name in enumerate(self.ground.names) if self.bits >> i & 1)

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.ground.index(label) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _same_ground(a: Subset, b: Subset) -> GroundSet:
    if a.ground != b.ground:
        raise GroundSetError(f"ground-set mismatch: {a.ground} vs {b.ground}")
    return a.ground


def union(a: Subset, b: Subset) -> Subset:
    return Subset(a.bits | b.bits, _same_ground(a, b))


def intersect(a: Subset, b: Subset) -> Subset:
    return Subset(a.bits & b.bits, _same_ground(a, b))


def complement(a: Subset) -> Subset:
    return Subset(a.bits ^ a.ground.full_mask, a.ground)


def difference(a: Subset, b: Subset) -> Subset:
    return Subset(a.bits & ~b.bits, _same_ground(a, b))


def is_subset(a: Subset, b: Subset) -> bool:
    _same_ground(a, b)
    return a.bits & ~b.bits == 0


def empty(g: GroundSet) -> Subset:
    return Subset(0, g)


def full(g: GroundSet) -> Subset:
    return Subset(g.full_mask, g)


def singleton(label: str, g: GroundSet) -> Subset:
    return Subset(1 << g.index(label), g)


def parse_subset(labels, g: GroundSet) -> Subset:
    """Subset from element labels; rejects unknown and duplicate labels."""
    bits = 0
    for label in labels:
        bit = 1 << g.index(label)
        if bits & bit:
            raise GroundSetError(f"duplicate label {label!r}")
        bits |= bit
    return Subset(bits, g)


def all_subsets(g: GroundSet):
    """All 2^n subsets in ascending mask order."""
    for bits in range(1 << g.size):
        yield Subset(bits, g)


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of subsets, sorted ascending by mask (canonical)."""

    members: tuple[Subset, ...]

    def __post_init__(self) -> None:
        masks = [m.bits for m in self.members]
        if any(x >= y for x, y in itertools.pairwise(masks)):
            raise GroundSetError("family members must be strictly increasing by mask")
        grounds = {m.ground for m in self.members}
        if len(grounds) > 1:
            raise GroundSetError("family members over different ground sets")

    @staticmethod
    def of(subsets) -> SetFamily:
        """Canonical family from any iterable of subsets (dedup + sort)."""
        unique = {s.bits: s for s in subsets}
        return SetFamily(tuple(unique[b] for b in sorted(unique)))

    def masks(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    def __contains__(self, s: Subset) -> bool:
        return any(m.bits == s.bits for m in self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self.members)) + "}"
