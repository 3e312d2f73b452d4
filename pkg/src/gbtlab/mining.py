"""Counterexample mining and census over the enumerated space universe.

A mining query asks for spaces on which a set of axioms holds while one
further axiom fails.  The sweep covers every labeled pair of topologies
in the requested size range; under the perm+swap symmetry only unordered
index pairs are scanned, which is sound because all nine deciders are
swap-invariant (a property the test suite verifies).  Witnesses are
reported in canonical form and deduplicated by canonical key, and every
witness is re-verified with the cross-validated profile before it is
returned.  A query that completes its sweep without any hit yields a
verified-exhausted result whose checked-space count documents the proof.

Work is split into fixed-size blocks of first-coordinate indices.  Block
boundaries depend only on the size level, never on the worker count, and
block results are consumed strictly in block order, so the witness
stream is identical no matter how many workers ran the scan.  Blocks
also delimit the append-only log used for resuming: a witness record is
a self-contained ``{"key","space","profile"}`` object, and a block-done
control record marks everything before it as durable.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .axioms import AxiomProfile, axiom_profile, evaluate_axiom, normalize_axiom_name
from .enumeration import (
    canonical_key,
    canonical_pair_indices,
    check_symmetry,
    family_from_encoding,
    gts_on,
    pair_orbit_size,
)
from .gbt import GbtSpace
from .gt import GeneralizedTopology
from .sets import SetFamily, Subset, ground
from .spacefile import space_to_data

BLOCKS_PER_LEVEL = 32


@dataclass(frozen=True)
class MiningQuery:
    antecedents: tuple[str, ...]
    consequent: str
    n_min: int = 1
    n_max: int = 3
    symmetry: str = "perm+swap"
    limit: int = 10

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "antecedents", tuple(normalize_axiom_name(a) for a in self.antecedents)
        )
        object.__setattr__(self, "consequent", normalize_axiom_name(self.consequent))
        check_symmetry(self.symmetry)
        if not 1 <= self.n_min <= self.n_max <= 16:
            raise ValueError(f"bad size range [{self.n_min}, {self.n_max}]")
        if self.limit < 1:
            raise ValueError("limit must be positive")

    def as_dict(self) -> dict:
        return {
            "antecedents": list(self.antecedents),
            "consequent": self.consequent,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "symmetry": self.symmetry,
            "limit": self.limit,
        }


@dataclass(frozen=True)
class Witness:
    space: GbtSpace
    profile: AxiomProfile
    key: bytes

    def as_dict(self) -> dict:
        return {
            "key": self.key.hex(),
            "space": space_to_data(self.space),
            "profile": self.profile.as_dict(),
        }


@dataclass
class MiningResult:
    query: MiningQuery
    witnesses: list[Witness]
    complete: bool
    spaces_checked: int
    checked_by_n: dict[int, int] = field(default_factory=dict)

    @property
    def exhausted(self) -> bool:
        """Full sweep finished and found nothing: the query is unsatisfiable in range."""
        return self.complete and not self.witnesses

    def as_dict(self) -> dict:
        return {
            "query": self.query.as_dict(),
            "witnesses": [w.as_dict() for w in self.witnesses],
            "complete": self.complete,
            "exhausted": self.exhausted,
            "spaces_checked": self.spaces_checked,
            "checked_by_n": {str(n): c for n, c in sorted(self.checked_by_n.items())},
        }


def _query_matches(query: MiningQuery, t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    return all(evaluate_axiom(a, t1, t2) for a in query.antecedents) and not evaluate_axiom(
        query.consequent, t1, t2
    )


def _scan_block(n: int, lo: int, hi: int, query_data: dict) -> tuple[list[tuple[int, int]], int]:
    """Scan first-coordinate indices [lo, hi); returns hit index pairs and pair count."""
    query = MiningQuery(
        tuple(query_data["antecedents"]),
        query_data["consequent"],
        query_data["n_min"],
        query_data["n_max"],
        query_data["symmetry"],
        query_data["limit"],
    )
    gts = gts_on(n)
    unordered = query.symmetry == "perm+swap"
    hits: list[tuple[int, int]] = []
    checked = 0
    for i in range(lo, hi):
        t1 = gts[i]
        start = i if unordered else 0
        for j in range(start, len(gts)):
            checked += 1
            if _query_matches(query, t1, gts[j]):
                hits.append((i, j))
    return hits, checked


def _blocks(count: int) -> list[tuple[int, int]]:
    size = max(1, -(-count // BLOCKS_PER_LEVEL))
    return [(lo, min(lo + size, count)) for lo in range(0, count, size)]


def canonical_space(key: bytes) -> GbtSpace:
    """Decode a canonical key back into its representative space."""
    n = key[0]
    width = ((1 << n) - 1 + 7) // 8
    e1 = int.from_bytes(key[1 : 1 + width], "big")
    e2 = int.from_bytes(key[1 + width :], "big")
    g = ground(n)
    topologies = []
    for enc in (e1, e2):
        masks = family_from_encoding(enc, n)
        topologies.append(GeneralizedTopology(g, SetFamily(tuple(Subset(m, g) for m in masks))))
    return GbtSpace(g, topologies[0], topologies[1])


def _verify_witness(query: MiningQuery, key: bytes) -> Witness:
    space = canonical_space(key)
    profile = axiom_profile(space, cross_validate=True)
    verdicts = profile.as_dict()
    if not all(verdicts[a] for a in query.antecedents) or verdicts[query.consequent]:
        raise AssertionError(f"mined witness fails re-verification: {space!r}")
    return Witness(space, profile, key)


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"


def _read_log(path, expected_header: dict) -> tuple[set[tuple[int, int]], list[bytes], dict[int, int], bool]:
    """Completed blocks, witness keys in order, per-n counts, end flag."""
    done: set[tuple[int, int]] = set()
    keys: list[bytes] = []
    checked: dict[int, int] = {}
    ended = False
    with open(path, encoding="utf-8") as handle:
        lines = [json.loads(line) for line in handle if line.strip()]
    if not lines or "header" not in lines[0]:
        raise ValueError(f"{path}: not a mining log (missing header)")
    if lines[0]["header"] != expected_header["header"]:
        raise ValueError(f"{path}: log was written for a different query")
    for record in lines[1:]:
        if "key" in record:
            keys.append(bytes.fromhex(record["key"]))
        elif "block" in record:
            n, index = record["block"]
            done.add((n, index))
            checked[n] = checked.get(n, 0) + record["checked"]
        elif record.get("end"):
            ended = True
    return done, keys, checked, ended


def mine(
    query: MiningQuery,
    workers: int = 1,
    log_path=None,
    resume_path=None,
) -> MiningResult:
    """Run a query over every pair of topologies in the size range."""
    header = {"header": query.as_dict(), "log": "mine"}
    done_blocks: set[tuple[int, int]] = set()
    witnesses: list[Witness] = []
    seen_keys: set[bytes] = set()
    checked_by_n: dict[int, int] = {}

    if resume_path is not None:
        done_blocks, keys, checked_by_n, ended = _read_log(resume_path, header)
        for key in keys:
            if key not in seen_keys:
                seen_keys.add(key)
                witnesses.append(_verify_witness(query, key))
        if ended or len(witnesses) >= query.limit:
            total = sum(checked_by_n.values())
            return MiningResult(query, witnesses, ended, total, checked_by_n)

    log_handle = open(log_path, "a", encoding="utf-8") if log_path is not None else None
    try:
        if log_handle is not None and not done_blocks:
            log_handle.write(_dump(header))

        tasks = [
            (n, index, lo, hi)
            for n in range(query.n_min, query.n_max + 1)
            for index, (lo, hi) in enumerate(_blocks(len(gts_on(n))))
            if (n, index) not in done_blocks
        ]
        stopped = False

        def consume(task, hits, checked):
            nonlocal stopped
            n, index, _, _ = task
            checked_by_n[n] = checked_by_n.get(n, 0) + checked
            gts = gts_on(n)
            g = gts[0].ground
            for i, j in hits:
                if stopped:
                    break
                key = canonical_key(GbtSpace(g, gts[i], gts[j]), query.symmetry)
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                witness = _verify_witness(query, key)
                witnesses.append(witness)
                if log_handle is not None:
                    log_handle.write(_dump(witness.as_dict()))
                if len(witnesses) >= query.limit:
                    stopped = True
            # a block interrupted by the witness limit is not durable: a
            # resume must rescan it for the hits that were never consumed
            if log_handle is not None and not stopped:
                log_handle.write(_dump({"block": [n, index], "checked": checked}))
                log_handle.flush()

        if workers <= 1:
            for task in tasks:
                n, _, lo, hi = task
                hits, checked = _scan_block(n, lo, hi, query.as_dict())
                consume(task, hits, checked)
                if stopped:
                    break
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_scan_block, task[0], task[2], task[3], query.as_dict())
                    for task in tasks
                ]
                for task, future in zip(tasks, futures):
                    if stopped:
                        future.cancel()
                        continue
                    hits, checked = future.result()
                    consume(task, hits, checked)

        complete = not stopped
        if log_handle is not None and complete:
            log_handle.write(
                _dump({"end": True, "exhausted": not witnesses, "spaces_checked": sum(checked_by_n.values())})
            )
    finally:
        if log_handle is not None:
            log_handle.close()

    return MiningResult(query, witnesses, complete, sum(checked_by_n.values()), checked_by_n)


@dataclass
class CensusRow:
    n: int
    symmetry: str
    labeled_gt_count: int
    labeled_pair_count: int
    canonical_pair_count: int
    axiom_counts: dict[str, int]
    constraint: str | None = None
    orbit_check: bool | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "symmetry": self.symmetry,
            "labeled_gt_count": self.labeled_gt_count,
            "labeled_pair_count": self.labeled_pair_count,
            "canonical_pair_count": self.canonical_pair_count,
            "axiom_counts": self.axiom_counts,
            "constraint": self.constraint,
            "orbit_check": self.orbit_check,
        }


def census(
    n: int,
    symmetry: str = "perm",
    max_open_sets: int | None = None,
    log_path=None,
    resume_path=None,
    check_orbits: bool | None = None,
) -> CensusRow:
    """Count topologies, pairs, canonical classes and axiom classes at size n.

    ``max_open_sets`` bounds the number of nonempty opens per family for
    constrained sweeps at sizes where the full pair space is large; the
    bound is recorded on the row so a partial census is never mistaken
    for a total one.
    """
    check_symmetry(symmetry)
    gts = gts_on(n)

    def admitted(index: int) -> bool:
        return max_open_sets is None or len(gts[index].open_masks) - 1 <= max_open_sets

    admitted_count = sum(1 for i in range(len(gts)) if admitted(i))
    pairs = [(i, j) for i, j in canonical_pair_indices(n, symmetry) if admitted(i) and admitted(j)]
    blocks = _blocks(len(pairs))
    header = {
        "header": {"n": n, "symmetry": symmetry, "max_open_sets": max_open_sets},
        "log": "census",
    }

    done_blocks: set[tuple[int, int]] = set()
    logged_profiles: list[dict] = []
    if resume_path is not None:
        with open(resume_path, encoding="utf-8") as handle:
            lines = [json.loads(line) for line in handle if line.strip()]
        if not lines or lines[0].get("header") != header["header"]:
            raise ValueError(f"{resume_path}: log was written for a different census")
        for record in lines[1:]:
            if "key" in record:
                logged_profiles.append(record["profile"])
            elif "block" in record:
                done_blocks.add((record["block"][0], record["block"][1]))

    axiom_counts: dict[str, int] = {}
    for profile in logged_profiles:
        for name, value in profile.items():
            if value:
                axiom_counts[name] = axiom_counts.get(name, 0) + 1

    log_handle = open(log_path, "a", encoding="utf-8") if log_path is not None else None
    try:
        if log_handle is not None and not done_blocks:
            log_handle.write(_dump(header))
        g = gts[0].ground if gts else None
        for index, (lo, hi) in enumerate(blocks):
            if (n, index) in done_blocks:
                continue
            for i, j in pairs[lo:hi]:
                space = GbtSpace(g, gts[i], gts[j])
                profile = axiom_profile(space)
                for name, value in profile.as_dict().items():
                    if value:
                        axiom_counts[name] = axiom_counts.get(name, 0) + 1
                if log_handle is not None:
                    log_handle.write(
                        _dump(
                            {
                                "key": canonical_key(space, symmetry).hex(),
                                "space": space_to_data(space),
                                "profile": profile.as_dict(),
                            }
                        )
                    )
            if log_handle is not None:
                log_handle.write(_dump({"block": [n, index], "checked": hi - lo}))
                log_handle.flush()
    finally:
        if log_handle is not None:
            log_handle.close()

    if check_orbits is None:
        check_orbits = n <= 3
    orbit_ok = None
    if check_orbits:
        total = sum(pair_orbit_size(n, i, j, symmetry) for i, j in pairs)
        orbit_ok = total == admitted_count * admitted_count

    return CensusRow(
        n=n,
        symmetry=symmetry,
        labeled_gt_count=admitted_count,
        labeled_pair_count=admitted_count * admitted_count,
        canonical_pair_count=len(pairs),
        axiom_counts={k: axiom_counts.get(k, 0) for k in sorted(axiom_counts)},
        constraint=None if max_open_sets is None else f"open-sets<={max_open_sets}",
        orbit_check=orbit_ok,
    )


@dataclass(frozen=True)
class SetWitness:
    """A space together with the subsets exhibiting a set-level phenomenon."""

    space: GbtSpace
    description: str
    key: bytes

    def as_dict(self) -> dict:
        return {
            "key": self.key.hex(),
            "space": space_to_data(self.space),
            "description": self.description,
        }


def _iter_canonical_spaces(n_min: int, n_max: int):
    for n in range(n_min, n_max + 1):
        gts = gts_on(n)
        g = gts[0].ground
        for i, j in canonical_pair_indices(n, "perm+swap"):
            yield GbtSpace(g, gts[i], gts[j])


def find_note50_witness(n_max: int, n_min: int = 1) -> tuple[SetWitness | None, int]:
    """Singleton that is pairwise λ-closed but not an intersection of its
    two wedges; such a set separates the two notions."""
    checked = 0
    for space in _iter_canonical_spaces(n_min, n_max):
        checked += 1
        t1, t2 = space.mu1, space.mu2
        for x in range(space.ground.size):
            p = 1 << x
            four = t1.closure_table[p] & t2.closure_table[p] & t1.wedge_table[p] & t2.wedge_table[p]
            if four == p and t1.wedge_table[p] & t2.wedge_table[p] != p:
                label = space.ground.names[x]
                return (
                    SetWitness(
                        space,
                        f"singleton {{{label}}} is pairwise λ-closed but not a ∧12-set",
                        canonical_key(space),
                    ),
                    checked,
                )
    return None, checked


def _g_closed_masks(t_in: GeneralizedTopology, t_other: GeneralizedTopology) -> list[int]:
    full = t_in.ground.full_mask
    return [
        a
        for a in range(full + 1)
        if t_in.closure_table[a] & ~t_other.wedge_table[a] == 0
    ]


def _render(space: GbtSpace, mask: int) -> str:
    names = space.ground.names
    return "{" + ",".join(names[k] for k in range(len(names)) if mask >> k & 1) + "}"


def _find_g_combination_violation(n_max: int, combine, verb: str) -> tuple[SetWitness | None, int]:
    checked = 0
    for space in _iter_canonical_spaces(1, n_max):
        checked += 1
        for side, (ta, tb) in ((1, (space.mu1, space.mu2)), (2, (space.mu2, space.mu1))):
            g_masks = _g_closed_masks(ta, tb)
            for a in g_masks:
                for b in g_masks:
                    if b <= a:
                        continue
                    u = combine(a, b)
                    if ta.closure_table[u] & ~tb.wedge_table[u]:
                        return (
                            SetWitness(
                                space,
                                f"{_render(space, a)} and {_render(space, b)} are g-closed on side "
                                f"{side} but their {verb} {_render(space, u)} is not",
                                canonical_key(space),
                            ),
                            checked,
                        )
    return None, checked


def find_g_union_violation(n_max: int) -> tuple[SetWitness | None, int]:
    """Two g-closed sets whose union is not g-closed."""
    return _find_g_combination_violation(n_max, lambda a, b: a | b, "union")


def find_g_intersection_violation(n_max: int) -> tuple[SetWitness | None, int]:
    """Two g-closed sets whose intersection is not g-closed."""
    return _find_g_combination_violation(n_max, lambda a, b: a & b, "intersection")


SPECIAL_QUERIES = {
    "note50-converse": find_note50_witness,
    "g-union-escape": find_g_union_violation,
    "g-intersection-escape": find_g_intersection_violation,
}
