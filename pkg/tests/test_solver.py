"""Dual-structure solver: families, constraints, branches, special loci."""

from fractions import Fraction

import pytest

from superbialg import catalog
from superbialg.bialgebra import DualStructure, pair_checks
from superbialg.errors import ConstraintViolationError
from superbialg.scalars import GScalar
from superbialg.solver import enumerate_unknowns, solve_duals


def alg(ident, **params):
    g = catalog.resolve_algebra(ident)[1].build()
    if params:
        g = g.subs_params({k: Fraction(v) for k, v in params.items()})
    return g


def im(v):
    return GScalar(0, Fraction(v))


def re(v):
    return GScalar(Fraction(v), 0)


def generic(families):
    return [f for f in families if not f.locus]


def test_unknown_enumeration_respects_grading_and_reality():
    names = [u.key for u in enumerate_unknowns(alg("C1_p").dims)]
    assert names == sorted(names)
    # no unknown may pair two bosons into a fermion or break symmetry
    for (i, j, k) in names:
        assert i <= j


def test_one_dimensional_family_of_the_half_bosonic_line():
    fams = solve_duals(alg("B"))
    assert len(fams) == 1
    fam = fams[0]
    assert fam.dimension == 1 and not fam.constraints
    member = fam.specialize({fam.free_names[0]: Fraction(7)})
    assert dict(member.ft)[(2, 2, 1)] == im(7)
    assert all(c.ok for c in pair_checks(alg("B"), member))


def test_three_dimensional_family_with_no_constraints():
    fams = solve_duals(alg("C4"))
    assert len(fams) == 1
    fam = fams[0]
    assert fam.dimension == 3 and not fam.constraints
    member = fam.specialize(dict(zip(fam.free_names, (1, 2, 3))))
    assert dict(member.ft) == {(2, 2, 1): im(1), (2, 3, 1): im(2),
                               (3, 3, 1): im(3),
                               (3, 2, 1): im(2)}


def test_specialize_enforces_quadratic_constraints():
    g = alg("C1_half")
    fams = generic(solve_duals(g))
    constrained = [f for f in fams if f.constraints and not f.note]
    assert constrained
    fam = constrained[0]
    bad = dict.fromkeys(fam.free_names, Fraction(1))
    with pytest.raises(ConstraintViolationError):
        fam.specialize(bad)
    ok = fam.specialize({"alpha": Fraction(1), "beta": Fraction(-2),
                         "gamma": Fraction(3)})
    assert all(c.ok for c in pair_checks(g, ok))


def test_branch_splitting_of_the_parametric_line():
    fams = generic(solve_duals(alg("C1_p")))
    notes = sorted(f.note for f in fams)
    assert notes == ["", "branch alpha=0", "branch beta=0"]


def test_special_loci_of_the_parametric_line():
    fams = solve_duals(alg("C1_p"))
    loci = {f.locus.get("p") for f in fams if f.locus}
    assert loci == {Fraction(1, 2), Fraction(-1, 2)}
    enlarged = [f for f in fams
                if f.locus.get("p") == Fraction(1, 2) and f.dimension == 3]
    assert enlarged  # the rank really drops there


def test_enriched_half_line_splits_on_a_shared_linear_factor():
    fams = solve_duals(alg("C1_half"))
    notes = sorted(f.note for f in fams)
    assert notes == ["", "branch 2*alpha+beta=0", "branch beta=0,gamma=0"]
    by_note = {f.note: f for f in fams}
    even = by_note["branch beta=0,gamma=0"].specialize({"alpha": Fraction(2)})
    assert dict(even.ft)[(1, 2, 1)] == re(2)
    assert dict(even.ft)[(2, 3, 3)] == re(1)


def full_family(fams):
    picked = [f for f in fams if not f.locus and not f.note]
    assert len(picked) == 1
    return picked[0]


def test_abelian_duals_fill_the_whole_kernel():
    assert full_family(solve_duals(alg("I_1_1"))).dimension == 2
    assert full_family(solve_duals(alg("I_2_1"))).dimension == 6
    assert full_family(solve_duals(alg("I_1_2"))).dimension == 7


def test_family_members_always_satisfy_the_battery():
    for ident in ("A11_A", "A11_2A_1", "C2_1", "C3"):
        g = alg(ident)
        for fam in generic(solve_duals(g)):
            values = {}
            for idx, name in enumerate(fam.free_names):
                values[name] = Fraction(idx - 1, 2)
            try:
                member = fam.specialize(values)
            except ConstraintViolationError:
                continue
            assert all(c.ok for c in pair_checks(g, member)), (ident, values)
