"""Recorded change-of-basis witnesses and the equivalence-split walkthrough."""

from fractions import Fraction

from superbialg import witnesses


def test_every_witness_certifies():
    reports = witnesses.verify_all_witnesses()
    assert len(reports) == 13
    for wid, report in reports.items():
        assert report["ok"], (wid, report)
        assert len(report["samples"]) >= 3
        for sample in report["samples"]:
            assert sample["pair_ok"] and sample["iso_ok"]
            assert sample["residual_nonzero_count"] == 0
            assert sample["matrix_ok"] and sample["two_sided_ok"]


def test_forced_zero_entries_reject_both_probe_directions():
    forced = [w for w in witnesses.WITNESSES.values() if w.forced]
    assert forced
    for w in forced:
        report = witnesses.verify_witness(w)
        for pos, probe in report["forced"].items():
            assert probe["ok"], (w.id, pos, probe)


def test_witness_ids_match_their_keys():
    for wid, w in witnesses.WITNESSES.items():
        assert w.id == wid


def test_walkthrough_reference_cobracket():
    ref = witnesses.worked_example_reference()
    keys = set(ref.ft)
    assert (2, 2, 1) in keys and (3, 3, 1) in keys


def test_walkthrough_splits_into_two_branches():
    ex = witnesses.worked_example(Fraction(2), Fraction(1), Fraction(1))
    assert ex["k"] > 0 and ex["s"] < 0
    assert ex["pair_plus_ok"] and ex["pair_minus_ok"]
    assert ex["same_branch_equivalent"] is True
    assert ex["cross_equivalent"] is False
    assert ex["cross_report"]["connector_in_family"] is False
