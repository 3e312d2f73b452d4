"""Single generalized topology on a finite ground set.

A generalized topology is a family of "open" subsets that contains the
empty set and is closed under unions.  On a finite family, closure under
binary unions is equivalent to closure under arbitrary nonempty unions,
so validation only tests pairs.  The whole space X is NOT required to be
open; a point may have no open neighbourhood at all.  The operator
conventions below are what make that case consistent:

* closure(A)  = intersection of the closed supersets of A (X is always
  closed, so the collection is never empty),
* wedge(A)    = intersection of the open supersets of A, X if there are
  none,
* vee(A)      = union of the closed subsets of A, empty if there are none,
* a point with no open neighbourhood is vacuously a limit point of every
  set, including the empty set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .sets import GroundSet, SetFamily, Subset


class GTValidationError(ValueError):
    """Family is not a generalized topology.

    ``kind`` is ``"missing-empty-set"`` or ``"union-escape"``; for the
    latter, ``pair`` holds the offending (A, B) with A ∪ B outside the
    family.
    """

    def __init__(self, kind: str, message: str, pair: tuple[Subset, Subset] | None = None):
        super().__init__(message)
        self.kind = kind
        self.pair = pair


@dataclass(frozen=True)
class GeneralizedTopology:
    """Validated generalized topology; construct through :func:`validate_gt`."""

    ground: GroundSet
    opens: SetFamily

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return self.opens.masks()

    @cached_property
    def open_mask_set(self) -> frozenset[int]:
        return frozenset(self.open_masks)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.ground.full_mask
        return tuple(sorted(full ^ m for m in self.open_masks))

    @cached_property
    def closed_mask_set(self) -> frozenset[int]:
        return frozenset(self.closed_masks)

    # Full operator tables, indexed by subset mask.  Built lazily once and
    # shared by every decider that touches this topology.

    @cached_property
    def closure_table(self) -> tuple[int, ...]:
        return tuple(self._closure_mask(a) for a in range(1 << self.ground.size))

    @cached_property
    def interior_table(self) -> tuple[int, ...]:
        return tuple(self._interior_mask(a) for a in range(1 << self.ground.size))

    @cached_property
    def wedge_table(self) -> tuple[int, ...]:
        return tuple(self._wedge_mask(a) for a in range(1 << self.ground.size))

    @cached_property
    def vee_table(self) -> tuple[int, ...]:
        return tuple(self._vee_mask(a) for a in range(1 << self.ground.size))

    def _closure_mask(self, a: int) -> int:
        acc = self.ground.full_mask
        for c in self.closed_masks:
            if a & ~c == 0:
                acc &= c
        return acc

    def _interior_mask(self, a: int) -> int:
        acc = 0
        for u in self.open_masks:
            if u & ~a == 0:
                acc |= u
        return acc

    def _wedge_mask(self, a: int) -> int:
        acc = self.ground.full_mask
        found = False
        for u in self.open_masks:
            if a & ~u == 0:
                acc &= u
                found = True
        return acc if found else self.ground.full_mask

    def _vee_mask(self, a: int) -> int:
        acc = 0
        for c in self.closed_masks:
            if c & ~a == 0:
                acc |= c
        return acc

    def _derived_mask(self, a: int) -> int:
        out = 0
        for i in range(self.ground.size):
            p = 1 << i
            rest = a & ~p
            if all(u & rest for u in self.open_masks if u & p):
                out |= p
        return out

    def __repr__(self) -> str:
        return f"GT({self.opens!r} on {self.ground!r})"


def validate_gt(ground: GroundSet, opens: SetFamily) -> GeneralizedTopology:
    """Check ∅-membership and union closure; raise GTValidationError otherwise."""
    masks = opens.masks()
    if 0 not in masks:
        raise GTValidationError("missing-empty-set", "the empty set must be open")
    mask_set = set(masks)
    for x, y in itertools.combinations(masks, 2):
        if x | y not in mask_set:
            a, b = Subset(x, ground), Subset(y, ground)
            raise GTValidationError(
                "union-escape",
                f"family not closed under union: {a!r} ∪ {b!r} = {Subset(x | y, ground)!r} is missing",
                pair=(a, b),
            )
    return GeneralizedTopology(ground, opens)


def gt_from_labels(g: GroundSet, open_label_lists) -> GeneralizedTopology:
    """Build and validate a topology from label lists; ∅ is implied."""
    from .sets import parse_subset

    subsets = [parse_subset(labels, g) for labels in open_label_lists]
    subsets.append(Subset(0, g))
    return validate_gt(g, SetFamily.of(subsets))


def complete_unions(ground: GroundSet, opens: SetFamily) -> tuple[GeneralizedTopology, SetFamily]:
    """Smallest generalized topology containing ``opens``; also returns the added sets."""
    masks = set(opens.masks())
    masks.add(0)
    added: set[int] = set()
    frontier = True
    while frontier:
        frontier = False
        for x, y in itertools.combinations(sorted(masks), 2):
            u = x | y
            if u not in masks:
                masks.add(u)
                added.add(u)
                frontier = True
                break
    family = SetFamily.of(Subset(m, ground) for m in masks)
    return GeneralizedTopology(ground, family), SetFamily.of(Subset(m, ground) for m in sorted(added))


def _check_ground(t: GeneralizedTopology, a: Subset) -> int:
    if a.ground != t.ground:
        from .sets import GroundSetError

        raise GroundSetError(f"subset over {a.ground} used with topology over {t.ground}")
    return a.bits


def is_open(t: GeneralizedTopology, a: Subset) -> bool:
    return _check_ground(t, a) in t.open_mask_set


def is_closed(t: GeneralizedTopology, a: Subset) -> bool:
    return (_check_ground(t, a) ^ t.ground.full_mask) in t.open_mask_set


def closure(t: GeneralizedTopology, a: Subset) -> Subset:
    return Subset(t._closure_mask(_check_ground(t, a)), t.ground)


def interior(t: GeneralizedTopology, a: Subset) -> Subset:
    return Subset(t._interior_mask(_check_ground(t, a)), t.ground)


def wedge(t: GeneralizedTopology, a: Subset) -> Subset:
    """Intersection of the opens containing A (a ∧-set hull); X if none."""
    return Subset(t._wedge_mask(_check_ground(t, a)), t.ground)


def vee(t: GeneralizedTopology, a: Subset) -> Subset:
    """Union of the closed sets inside A (a ∨-set kernel); ∅ if none."""
    return Subset(t._vee_mask(_check_ground(t, a)), t.ground)


def derived_set(t: GeneralizedTopology, a: Subset) -> Subset:
    """Limit points of A: every open neighbourhood meets A minus the point."""
    return Subset(t._derived_mask(_check_ground(t, a)), t.ground)


def is_wedge_set(t: GeneralizedTopology, a: Subset) -> bool:
    a_bits = _check_ground(t, a)
    return t._wedge_mask(a_bits) == a_bits


def is_vee_set(t: GeneralizedTopology, a: Subset) -> bool:
    a_bits = _check_ground(t, a)
    return t._vee_mask(a_bits) == a_bits


def vee_family(t: GeneralizedTopology) -> SetFamily:
    """All ∨-sets of t.  This family is itself a generalized topology."""
    vt = t.vee_table
    return SetFamily.of(
        Subset(a, t.ground) for a in range(1 << t.ground.size) if vt[a] == a
    )


def wedge_family(t: GeneralizedTopology) -> SetFamily:
    """All ∧-sets of t (closed under intersections, contains ∅ and X)."""
    wt = t.wedge_table
    return SetFamily.of(
        Subset(a, t.ground) for a in range(1 << t.ground.size) if wt[a] == a
    )


def is_gt_T0(t: GeneralizedTopology) -> bool:
    """Some open contains exactly one point of each pair."""
    for i, j in itertools.combinations(range(t.ground.size), 2):
        p, q = 1 << i, 1 << j
        if not any(bool(u & p) != bool(u & q) for u in t.open_masks):
            return False
    return True


def is_gt_T1(t: GeneralizedTopology) -> bool:
    """Each point of each pair has an open neighbourhood missing the other."""
    for i, j in itertools.permutations(range(t.ground.size), 2):
        p, q = 1 << i, 1 << j
        if not any(u & p and not u & q for u in t.open_masks):
            return False
    return True
