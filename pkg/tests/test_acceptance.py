"""Acceptance gate: one test per release criterion, exact arithmetic only.

Every assertion here is an exact-zero statement; no tolerances appear
anywhere. The terminal summary prints one pass/fail line per criterion
(see conftest).
"""

import random
import time
from fractions import Fraction

import pytest

from superbialg import catalog, witnesses
from superbialg.bialgebra import pair_checks
from superbialg.errors import ParseError
from superbialg.linalg import mat_det, mat_inverse, mat_mul
from superbialg.errors import SingularMatrixError
from superbialg.morphism import family_membership, verify_automorphism
from superbialg.parser import (
    format_algebra,
    format_dual,
    parse_dual_statements,
    parse_text,
)
from superbialg.poly import as_poly
from superbialg.scalars import GScalar, GradedDims
from superbialg.solver import grid_completeness_check, solve_duals
from superbialg.supermatrix import SuperMatrix

Fr = Fraction


def _alg(ident, **subs):
    g = catalog.resolve_algebra(ident)[1].build()
    if subs:
        g = g.subs_params({k: Fr(v) for k, v in subs.items()})
    return g


def _im(v):
    return GScalar(0, Fr(v))


def _re(v):
    return GScalar(Fr(v), 0)


def _same(a, b):
    return (as_poly(a) - as_poly(b)).is_zero()


# -- criterion 1: catalog soundness ---------------------------------------------------

RESIDUAL_CHECKS = (
    "super_jacobi",
    "dual_super_jacobi",
    "mixed_super_jacobi",
    "double_super_jacobi",
    "pairing_ad_invariance",
)


def test_criterion_1_catalog_soundness():
    start = time.monotonic()
    reports = catalog.verify_catalog()
    elapsed = time.monotonic() - start
    assert len(reports) == 48
    assert sorted(r.table for r in reports).count(4) == 4
    for report in reports:
        assert report.rows, report.entry_id
        for assignment, checks in report.rows:
            named = {c.name: c for c in checks}
            for want in RESIDUAL_CHECKS:
                c = named[want]
                assert c.nonzero_count == 0 and c.ok, (
                    report.entry_id, assignment, want, c.detail)
            assert all(c.ok for c in checks), (report.entry_id, assignment)
    assert elapsed < 10.0, f"catalog verification took {elapsed:.2f}s"


# -- criterion 2: the algebra battery at symbolic parameters --------------------------

BATTERY = (
    "B", "A11_A",
    "C1_p", "C1_half",
    "C2_1", "C2_p", "C3", "C4", "C5_p",
    "A11_2A_1", "A11_2A_2",
)


def test_criterion_2_battery_symbolic():
    for ident in BATTERY:
        g = _alg(ident)
        assert g.validate_structure() == [], ident
        residual = g.super_jacobi_residual()
        assert residual == {}, (ident, residual)
    # parameters really were symbolic where declared
    assert set(_alg("C1_p").params) == {"p"}
    assert set(_alg("C2_p").params) == {"p"}
    assert set(_alg("C5_p").params) == {"p"}


# -- criterion 3: automorphism families ------------------------------------------------

PERTURB_POOL = [Fr(n, d) for n in (-3, -2, -1, 1, 2, 3) for d in (1, 2)]
CONCRETE_AT = {"C1_p": Fr(2), "C2_p": Fr(1, 2), "C5_p": Fr(1)}


def _perturb(rng, fam, M):
    """One parity-consistent random entry change that leaves the family."""
    n = fam.dims.total
    while True:
        r = rng.randrange(1, n + 1)
        c = rng.randrange(1, n + 1)
        delta = rng.choice(PERTURB_POOL)
        if fam.dims.parity(r) == 1 and fam.dims.parity(c) == 0:
            bump = GScalar(0, delta)
        else:
            bump = GScalar(delta)
        rows = [[M.entry(i + 1, j + 1) for j in range(n)] for i in range(n)]
        rows[r - 1][c - 1] = rows[r - 1][c - 1] + bump
        Mp = SuperMatrix(fam.dims, rows)
        if not family_membership(fam, Mp)[0]:
            return Mp


def test_criterion_3_automorphism_families():
    rng = random.Random(20260819)
    assert len(catalog.AUT_FAMILIES) == 11
    for aid in sorted(catalog.AUT_FAMILIES):
        fam = catalog.AUT_FAMILIES[aid]
        g = _alg(aid, **({"p": CONCRETE_AT[aid]} if aid in CONCRETE_AT else {}))
        report = catalog.verify_family(g, fam, sample_count=5)
        assert len(report["samples"]) >= 5, aid
        assert report["symbolic_ok"], (aid, report["symbolic_residual"])
        assert report["members_ok"], (aid, report["member_failures"])
        # products and inverses of sampled members stay members
        assert report["closure_ok"], (aid, report["closure_failures"])

        assigns = report["samples"]
        for _ in range(20):
            M = fam.instantiate(rng.choice(assigns))
            Mp = _perturb(rng, fam, M)
            still = (verify_automorphism(g, Mp)["ok"]
                     and Mp.is_witness_matrix())
            assert not still, (aid, Mp)


# -- criterion 4: solver reproduction --------------------------------------------------


def test_criterion_4_solver_reproduction():
    # half-bosonic line: a single one-parameter family, linear only
    fams = solve_duals(_alg("B"))
    assert len(fams) == 1
    fam = fams[0]
    assert fam.dimension == 1 and not fam.constraints and not fam.locus
    member = fam.specialize({fam.free_names[0]: Fr(5)})
    assert dict(member.ft) == {(2, 2, 1): _im(5)}

    # fully odd-squared algebra: one three-parameter family, linear only
    fams = solve_duals(_alg("C4"))
    assert len(fams) == 1
    fam = fams[0]
    assert fam.dimension == 3 and not fam.constraints and not fam.locus
    member = fam.specialize(dict(zip(fam.free_names, (Fr(1), Fr(2), Fr(3)))))
    assert dict(member.ft) == {
        (2, 2, 1): _im(1), (2, 3, 1): _im(2), (3, 2, 1): _im(2),
        (3, 3, 1): _im(3),
    }

    # enriched half-weight line: the two published sub-loci are branches
    fams = solve_duals(_alg("C1_half"))
    by_note = {f.note: f for f in fams if not f.locus}
    assert set(by_note) == {"", "branch 2*alpha+beta=0", "branch beta=0,gamma=0"}

    even = by_note["branch beta=0,gamma=0"]
    assert even.dimension == 1
    d = even.specialize({"alpha": Fr(2)})
    assert d.ft_get(1, 2, 1) == _re(2) and d.ft_get(2, 3, 3) == _re(1)
    assert dict(d.ft) == {(1, 2, 1): _re(2), (2, 1, 1): _re(-2),
                          (2, 3, 3): _re(1), (3, 2, 3): _re(-1)}

    odd_branch = by_note["branch 2*alpha+beta=0"]
    assert odd_branch.dimension == 2
    d = odd_branch.specialize({"alpha": Fr(1), "gamma": Fr(2)})
    expected = {
        (1, 2, 1): _re(-1), (2, 1, 1): _re(1),
        (1, 2, 2): _re(2), (2, 1, 2): _re(-2),
        (1, 3, 3): _re(1), (3, 1, 3): _re(-1),
        (2, 3, 3): _re(Fr(1, 2)), (3, 2, 3): _re(Fr(-1, 2)),
        (3, 3, 1): _im(1), (3, 3, 2): _im(-2),
    }
    assert dict(d.ft) == expected

    # symbolic parametric line: generic family, branches, and the rank locus
    fams = solve_duals(_alg("C1_p"))
    generic = [f for f in fams if not f.locus and not f.note]
    assert len(generic) == 1
    gen = generic[0]
    assert gen.dimension == 2 and len(gen.constraints) == 1
    cons = gen.constraints[0]
    # the constraint vanishes exactly on alpha=0, beta=0, or p=-1/2
    assert not cons.eval({"alpha": Fr(1), "beta": Fr(1), "p": Fr(1)}).is_zero()
    for vals in ({"alpha": Fr(0), "beta": Fr(5), "p": Fr(3)},
                 {"alpha": Fr(5), "beta": Fr(0), "p": Fr(3)},
                 {"alpha": Fr(1), "beta": Fr(1), "p": Fr(-1, 2)}):
        assert cons.eval(vals).is_zero()

    scaling = [f for f in fams if f.note == "branch beta=0" and not f.locus]
    assert len(scaling) == 1 and scaling[0].dimension == 1
    d = scaling[0].dual().subs_params({"alpha": Fr(3), "p": Fr(2)})
    assert dict(d.ft) == {(1, 2, 1): _re(3), (2, 1, 1): _re(-3),
                          (2, 3, 3): _re(6), (3, 2, 3): _re(-6)}

    half_locus = [f for f in fams if f.locus.get("p") == Fr(1, 2)]
    assert half_locus, "rank locus at p = 1/2 must be detected"
    assert max(f.dimension for f in half_locus) == 3
    assert {f.locus.get("p") for f in fams if f.locus} == {Fr(1, 2), Fr(-1, 2)}


# -- criterion 5: solver completeness on the rational grid ----------------------------


def test_criterion_5_grid_completeness():
    expectations = {
        "B": (49, 7, 1),
        "A11_A": (49, 7, 1),
        "C4": (823543, 343, 3),
        "C3": (823543, 343, 3),
    }
    for ident, (points, solutions, dim) in expectations.items():
        res = grid_completeness_check(_alg(ident))
        assert res["grid_points"] == points, ident
        assert res["solutions_on_grid"] == solutions, ident
        assert res["kernel_dim"] == dim, ident
        assert res["all_in_span"] and res["outside"] == [], ident


# -- criterion 6: recorded isomorphism witnesses ---------------------------------------


def test_criterion_6_isomorphism_witnesses():
    reports = witnesses.verify_all_witnesses()
    assert len(reports) == 13
    for wid, report in sorted(reports.items()):
        assert len(report["samples"]) >= 3, wid
        for sample in report["samples"]:
            assert sample["pair_ok"], (wid, sample["label"])
            assert sample["residual_nonzero_count"] == 0, (wid, sample["label"])
            assert sample["matrix_ok"] and sample["two_sided_ok"], (
                wid, sample["label"])
        # stated zero entries are necessary for pattern validity
        for pos, probe in report["forced"].items():
            assert probe["ok"], (wid, pos, probe)
        assert report["ok"], wid
    forced_total = sum(
        len(w.forced) for w in witnesses.WITNESSES.values())
    assert forced_total >= 10


# -- criterion 7: the equivalence-split walkthrough ------------------------------------


def test_criterion_7_equivalence_split():
    g = _alg("C4")
    plus_entry = catalog.resolve_entry("t6-24")
    minus_entry = catalog.resolve_entry("t6-25")
    for t, b32, b33 in ((Fr(1), Fr(0), Fr(1)),
                        (Fr(2), Fr(1), Fr(1)),
                        (Fr(1, 2), Fr(3), Fr(4))):
        ex = witnesses.worked_example(t, b32, b33)
        assert ex["k"] == t * t and ex["k"] > 0
        assert ex["s"] == -t * t and ex["s"] < 0
        assert ex["pair_plus_ok"] and ex["pair_minus_ok"]
        # the two transported pairs land on the catalog's two branches
        want_plus = plus_entry.build_dual(g).subs_params({"k": ex["k"]})
        want_minus = minus_entry.build_dual(g).subs_params({"s": ex["s"]})
        assert dict(ex["dual_plus"].ft) == dict(want_plus.ft)
        assert dict(ex["dual_minus"].ft) == dict(want_minus.ft)
        # across branches: never equivalent; within a branch: equivalent
        assert ex["cross_equivalent"] is False
        assert ex["cross_report"]["connector_in_family"] is False
        assert ex["same_branch_equivalent"] is True
        assert ex["same_report"]["equivalent"] is True


# -- criterion 8: supermatrix kernel ---------------------------------------------------

KERNEL_DIMS = (GradedDims(1, 1), GradedDims(2, 1), GradedDims(1, 2))


def _rand_scalar(rng, imaginary=False):
    v = Fr(rng.randrange(-4, 5), rng.choice((1, 2)))
    return GScalar(0, v) if imaginary else GScalar(v)


def _rand_invertible(rng, n):
    while True:
        rows = [[_rand_scalar(rng) for _ in range(n)] for _ in range(n)]
        if not mat_det(rows).is_zero():
            return rows


def _sample_class(rng, dims, kind):
    """A random valid basis-change matrix with at most one off-block."""
    m, n = dims.m, dims.n
    a = _rand_invertible(rng, m)
    b = _rand_invertible(rng, n)
    c = [[GScalar(0)] * n for _ in range(m)]
    d = [[GScalar(0)] * m for _ in range(n)]
    if kind == "upper":
        c = [[_rand_scalar(rng) for _ in range(n)] for _ in range(m)]
    elif kind == "lower":
        d = [[_rand_scalar(rng, imaginary=True) for _ in range(m)]
             for _ in range(n)]
    return SuperMatrix.from_blocks(dims, a, c, d, b)


def _rand_full(rng, dims):
    """Unrestricted invertible matrix with all four blocks populated."""
    n = dims.total
    while True:
        rows = [[_rand_scalar(rng, rng.random() < 0.3) for _ in range(n)]
                for _ in range(n)]
        if not mat_det(rows).is_zero():
            return SuperMatrix(dims, rows)


def _schur_forms(M):
    """The two textbook superdeterminant expressions, computed from scratch."""
    a = [list(r) for r in M.block_a()]
    b = [list(r) for r in M.block_b()]
    c = [list(r) for r in M.block_c()]
    d = [list(r) for r in M.block_d()]
    binv = mat_inverse(b)
    ainv = mat_inverse(a)
    schur_a = [
        [x - y for x, y in zip(ra, rb)]
        for ra, rb in zip(a, mat_mul(mat_mul(c, binv), d))
    ]
    schur_b = [
        [x - y for x, y in zip(ra, rb)]
        for ra, rb in zip(b, mat_mul(mat_mul(d, ainv), c))
    ]
    form_one = mat_det(schur_a) * mat_det(b).inverse()
    form_two = mat_det(a) * mat_det(schur_b).inverse()
    return form_one, form_two


def test_criterion_8_supermatrix_kernel():
    rng = random.Random(8)
    for dims in KERNEL_DIMS:
        for trial in range(100):
            kind = ("diag", "upper", "lower")[trial % 3]
            M1 = _sample_class(rng, dims, kind)
            M2 = _sample_class(rng, dims, kind)
            assert M1.is_transformation_matrix(), (dims, trial)

            # multiplicativity, exactly
            prod = M1 * M2
            assert prod.sdet() == M1.sdet() * M2.sdet(), (dims, trial)

            # the two closed forms agree with each other and with sdet()
            f1, f2 = _schur_forms(M1)
            assert f1 == f2 == M1.sdet(), (dims, trial)

            # inverse has inverse superdeterminant
            assert M1.sdet() * M1.superinverse().sdet() == GScalar(1)

            # supertranspose has period four
            st4 = M1.supertranspose().supertranspose()
            st4 = st4.supertranspose().supertranspose()
            assert st4 == M1

        # blockwise closed-form inverse against plain elimination
        formula_hits = 0
        for _ in range(25):
            M = _rand_full(rng, dims)
            a = [list(r) for r in M.block_a()]
            b = [list(r) for r in M.block_b()]
            c = [list(r) for r in M.block_c()]
            d = [list(r) for r in M.block_d()]
            try:
                binv = mat_inverse(b)
                ainv = mat_inverse(a)
                schur_a = [[x - y for x, y in zip(ra, rb)] for ra, rb in
                           zip(a, mat_mul(mat_mul(c, binv), d))]
                schur_b = [[x - y for x, y in zip(ra, rb)] for ra, rb in
                           zip(b, mat_mul(mat_mul(d, ainv), c))]
                sa_inv = mat_inverse(schur_a)
                sb_inv = mat_inverse(schur_b)
            except SingularMatrixError:
                continue
            neg = GScalar(-1)
            top_right = [[neg * x for x in row]
                         for row in mat_mul(mat_mul(ainv, c), sb_inv)]
            bottom_left = [[neg * x for x in row]
                           for row in mat_mul(mat_mul(binv, d), sa_inv)]
            formula = SuperMatrix.from_blocks(
                dims, sa_inv, top_right, bottom_left, sb_inv)
            assert formula == M.superinverse(), dims
            formula_hits += 1
        assert formula_hits >= 10, (dims, formula_hits)

        # period four holds with no validity restriction at all
        for _ in range(100):
            M = _rand_full(rng, dims)
            st4 = M.supertranspose().supertranspose()
            st4 = st4.supertranspose().supertranspose()
            assert st4 == M


# -- criterion 9: parser round trip and diagnostics ------------------------------------


def test_criterion_9_parser_round_trip():
    defs = catalog.load_definitions()

    # every shipped algebra survives print-then-parse unchanged
    for name in catalog.algebra_ids():
        g = defs.algebras[name].build()
        g2 = parse_text(format_algebra(g)).algebras[name].build()
        assert g2.dims == g.dims and set(g2.params) == set(g.params)
        keys = set(g.f) | set(g2.f)
        for key in keys:
            assert _same(g.f.get(key, GScalar(0)),
                         g2.f.get(key, GScalar(0))), (name, key)

    # every catalog dual survives print-then-parse unchanged
    for entry_id in catalog.entry_ids():
        pd = catalog.resolve_entry(entry_id)
        g = defs.algebras[pd.primal_name].build()
        d = pd.build_dual(g)
        d2 = parse_dual_statements(format_dual(d), g, extra_params=pd.params)
        keys = set(d.ft) | set(d2.ft)
        for key in keys:
            assert _same(d.ft.get(key, GScalar(0)),
                         d2.ft.get(key, GScalar(0))), (entry_id, key)

    # grading violations are rejected and carry a real location
    bad = (
        "algebra Bad {\n"
        "  bosons: X1;\n"
        "  fermions: X2;\n"
        "  [X1, X2] = X1;\n"
        "}\n"
    )
    with pytest.raises(ParseError) as err:
        parse_text(bad)
    assert err.value.line == 4 and err.value.column == 14
    assert "grading" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_dual_statements("[Xt1, Xt2] = Xt1;", defs.algebras["B"].build())
    assert err.value.line == 1 and err.value.column > 0
    assert "grading" in str(err.value)
