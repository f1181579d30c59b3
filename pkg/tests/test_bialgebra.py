"""Pair-level identities: dual structures, mixed closure, the double."""

from fractions import Fraction

import pytest

from superbialg import catalog
from superbialg.bialgebra import (
    DualStructure,
    algebra_as_dual,
    build_double,
    cocycle_residual,
    dual_algebra,
    dual_jacobi_residual,
    manin_swap,
    mixed_jacobi_residual,
    pair_checks,
    pairing_ad_invariance,
)
from superbialg.scalars import GScalar, GradedDims

D11 = GradedDims(1, 1)
D12 = GradedDims(1, 2)


def im(v):
    return GScalar(0, Fraction(v))


def re(v):
    return GScalar(Fraction(v), 0)


def alg(ident, **params):
    g = catalog.resolve_algebra(ident)[1].build()
    if params:
        g = g.subs_params({k: Fraction(v) for k, v in params.items()})
    return g


def test_dual_round_trips_through_algebra_view():
    d = DualStructure(D11, {(2, 2, 1): im(2)})
    g = dual_algebra(d)
    assert g.f_get(2, 2, 1) == im(2)
    back = algebra_as_dual(g)
    assert dict(back.ft) == dict(d.ft)


def test_dual_validation_mirrors_algebra_rules():
    bad = DualStructure(D11, {(2, 2, 1): re(1)})
    assert bad.validate_structure()
    good = DualStructure(D11, {(2, 2, 1): im(1)})
    assert good.validate_structure() == []
    assert good.nonzero_components()


def test_mixed_jacobi_discriminates():
    g = alg("B")
    ok = DualStructure(D11, {(2, 2, 1): im(3)})
    assert mixed_jacobi_residual(g, ok) == {}
    # an even-even dual component is incompatible with this primal
    bad = DualStructure(D11, {(1, 2, 2): re(1)})
    assert mixed_jacobi_residual(g, bad)


def test_cocycle_agrees_with_mixed_jacobi_on_the_catalog_battery():
    cases = [
        ("B", {(2, 2, 1): im(1)}),
        ("C4", {(2, 2, 1): im(1), (3, 3, 1): im(-2)}),
        ("C1_half", {(1, 2, 1): re(2), (2, 3, 3): re(1)}),
    ]
    for ident, entries in cases:
        g = alg(ident)
        d = DualStructure(g.dims, entries)
        assert (mixed_jacobi_residual(g, d) == {}) == (cocycle_residual(g, d) == {})


def test_pair_checks_reports_in_stable_order():
    g = alg("B")
    d = DualStructure(D11, {(2, 2, 1): im(1)})
    names = [c.name for c in pair_checks(g, d)]
    assert names == ["structure", "super_jacobi", "dual_structure",
                     "dual_super_jacobi", "mixed_super_jacobi", "cocycle"]
    assert all(c.ok for c in pair_checks(g, d))


def test_double_closure_and_pairing():
    g = alg("B")
    d = DualStructure(D11, {(2, 2, 1): im(5)})
    dbl = build_double(g, d)
    assert dbl.valid
    assert dbl.algebra.dims == GradedDims(2, 2)
    assert dbl.algebra.super_jacobi_residual() == {}
    assert pairing_ad_invariance(dbl) == {}
    # basis order: primal bosons, dual bosons, primal fermions, dual fermions
    assert dbl.primal_positions == {1: 1, 2: 3}
    assert dbl.dual_positions == {1: 2, 2: 4}


def test_double_of_incompatible_pair_is_flagged():
    g = alg("B")
    bad = DualStructure(D11, {(1, 2, 2): re(1)})
    dbl = build_double(g, bad)
    assert not dbl.valid


def test_pairing_ad_invariance_catches_sign_damage():
    g = alg("C4")
    d = DualStructure(D12, {(2, 2, 1): im(1), (2, 3, 1): im(1)})
    dbl = build_double(g, d)
    assert pairing_ad_invariance(dbl) == {}
    # flip one cross-bracket coefficient and the invariance must break
    entries = dict(dbl.algebra.f)
    key = next(k for k, v in sorted(entries.items())
               if k[0] in dbl.primal_positions.values()
               and k[1] in dbl.dual_positions.values() and not v.is_zero())
    # scale both stored orderings so antisymmetry itself stays intact
    flipped = (key[1], key[0], key[2])
    entries[key] = entries[key] * re(3)
    if flipped in entries:
        entries[flipped] = entries[flipped] * re(3)
    damaged = type(dbl)(
        dbl.algebra.__class__(dbl.algebra.name, dbl.algebra.dims, entries,
                              check_reality=False),
        dbl.pairing, dbl.primal_positions, dbl.dual_positions,
        dbl.source_algebra, dbl.source_dual, dbl.valid)
    assert pairing_ad_invariance(damaged)


def test_manin_swap_is_exact():
    for ident, entries in [
        ("B", {(2, 2, 1): im(1)}),
        ("C4", {(2, 2, 1): im(2), (3, 3, 1): im(1)}),
    ]:
        g = alg(ident)
        d = DualStructure(g.dims, entries)
        assert all(c.ok for c in pair_checks(g, d))
        h, ht = manin_swap(g, d)
        assert all(c.ok for c in pair_checks(h, ht))
        assert build_double(h, ht).valid


def test_dual_subs_params_and_zero_test():
    pd = catalog.resolve_entry("t6-24")
    g = alg("C4")
    d = pd.build_dual(g)
    conc = d.subs_params({"k": Fraction(9)})
    assert not conc.is_zero()
    assert conc.ft_get(2, 2, 1) == im(9)
