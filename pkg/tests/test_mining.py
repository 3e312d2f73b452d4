from __future__ import annotations

import json

import pytest

from gbtlab.axioms import UnknownAxiomError
from gbtlab.mining import (
    MiningQuery,
    census,
    find_g_intersection_violation,
    find_g_union_violation,
    find_note50_witness,
    mine,
)
from gbtlab.gbt import is_pairwise_lambda_closed, is_wedge12_set


def test_query_validation():
    with pytest.raises(UnknownAxiomError):
        MiningQuery(("T9",), "T0")
    with pytest.raises(ValueError):
        MiningQuery(("T0",), "T1", n_min=3, n_max=2)
    q = MiningQuery(("t1/4",), "t3/8")
    assert q.antecedents == ("T1_4",) and q.consequent == "T3_8"


def test_t0_without_quarter_has_witness():
    result = mine(MiningQuery(("T0",), "T1_4", n_max=3, limit=3))
    assert result.witnesses
    for witness in result.witnesses:
        verdicts = witness.profile.as_dict()
        assert verdicts["T0"] and not verdicts["T1_4"]


def test_quarter_equals_three_eighth_on_small_range():
    result = mine(MiningQuery(("T1_4",), "T3_8", n_max=3, limit=1))
    assert result.exhausted
    assert result.spaces_checked == 3 + 28 + 61 * 62 // 2


def test_witnesses_are_canonical_and_deduplicated():
    result = mine(MiningQuery(("T1",), "T1_2", n_max=3, limit=50))
    keys = [w.key for w in result.witnesses]
    assert len(keys) == len(set(keys))
    from gbtlab.enumeration import canonical_key

    for witness in result.witnesses:
        assert canonical_key(witness.space, "perm+swap") == witness.key


def test_mine_deterministic_across_runs_and_workers():
    query = MiningQuery(("T0",), "T1_2", n_max=3, limit=7)
    first = mine(query)
    second = mine(query)
    assert [w.key for w in first.witnesses] == [w.key for w in second.witnesses]
    parallel = mine(query, workers=2)
    assert [w.key for w in parallel.witnesses] == [w.key for w in first.witnesses]
    assert parallel.spaces_checked == first.spaces_checked


def test_mine_log_and_resume(tmp_path):
    query = MiningQuery(("T1",), "R0", n_max=3, limit=4)
    log_a = tmp_path / "a.ndjson"
    full_run = mine(query, log_path=log_a)

    # byte-exact reproducibility of the log
    log_b = tmp_path / "b.ndjson"
    mine(query, log_path=log_b)
    assert log_a.read_bytes() == log_b.read_bytes()

    # truncate after the first completed block, then resume
    lines = log_a.read_text().splitlines(keepends=True)
    block_positions = [i for i, line in enumerate(lines) if "block" in json.loads(line)]
    cut = block_positions[0] + 1
    partial = tmp_path / "partial.ndjson"
    partial.write_text("".join(lines[:cut]))
    resumed = mine(query, log_path=partial, resume_path=partial)
    assert [w.key for w in resumed.witnesses] == [w.key for w in full_run.witnesses]
    assert resumed.spaces_checked == full_run.spaces_checked

    # a finished log resumes to the same result without rescanning
    replay = mine(query, resume_path=log_a)
    assert [w.key for w in replay.witnesses] == [w.key for w in full_run.witnesses]


def test_resume_rejects_other_query(tmp_path):
    log = tmp_path / "log.ndjson"
    mine(MiningQuery(("T1",), "R0", n_max=2), log_path=log)
    with pytest.raises(ValueError):
        mine(MiningQuery(("T1",), "SYM", n_max=2), resume_path=log)


def test_special_searches_verify():
    witness, checked = find_note50_witness(3)
    assert witness is not None and checked >= 1
    space = witness.space
    label = witness.description.split("{")[1].split("}")[0]
    from gbtlab.sets import parse_subset

    single = parse_subset([label], space.ground)
    assert is_pairwise_lambda_closed(space, single)
    assert not is_wedge12_set(space, single)

    union_hit, _ = find_g_union_violation(3)
    assert union_hit is not None

    inter_hit, _ = find_g_intersection_violation(3)
    assert inter_hit is not None


def test_census_small_values():
    row1 = census(1)
    assert (row1.labeled_gt_count, row1.labeled_pair_count) == (2, 4)
    assert row1.canonical_pair_count == 4 and row1.orbit_check is True
    row2 = census(2)
    assert (row2.labeled_gt_count, row2.labeled_pair_count) == (7, 49)
    assert row2.canonical_pair_count == 29
    row2s = census(2, symmetry="perm+swap")
    assert row2s.canonical_pair_count == 18 and row2s.orbit_check is True


def test_census_axiom_chain_counts():
    row = census(3)
    counts = row.axiom_counts
    assert counts["T1_2"] <= counts["T5_8"] <= counts["T3_8"] <= counts["T1_4"] <= counts["T0"]


def test_census_constrained_sweep_is_labeled_as_such():
    row = census(3, max_open_sets=2)
    assert row.constraint == "open-sets<=2"
    assert row.labeled_gt_count < 61
    assert row.labeled_pair_count == row.labeled_gt_count**2


def test_census_log_resume(tmp_path):
    log = tmp_path / "census.ndjson"
    row = census(2, log_path=log)
    lines = log.read_text().splitlines()
    records = [json.loads(line) for line in lines]
    witness_records = [r for r in records if "key" in r]
    assert len(witness_records) == row.canonical_pair_count
    assert all(set(r) == {"key", "space", "profile"} for r in witness_records)

    cut_index = next(i for i, r in enumerate(records) if "block" in r) + 1
    partial = tmp_path / "partial.ndjson"
    partial.write_text("\n".join(lines[:cut_index]) + "\n")
    resumed = census(2, resume_path=partial)
    assert resumed.axiom_counts == row.axiom_counts
