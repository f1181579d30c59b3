"""Shipped catalog: algebra registry, automorphism families, verification.

The package data directory carries two definition files.  algebras.sbg
declares every named algebra; catalog.sbg declares the 48 bialgebra pairs
grouped into tables 4 (dimension (1,1)), 5 (dimension (2,1)) and
6 (dimension (1,2)).  This module loads them, resolves friendly ids, and
runs the residual battery over the default rational sample grid.
"""

from fractions import Fraction
from importlib import resources
from itertools import product

from .bialgebra import (
    CheckResult,
    build_double,
    pair_checks,
    pairing_ad_invariance,
)
from .errors import ParseError, UnknownIdError
from .morphism import (
    AutFamily,
    family_automorphism_residual,
    family_membership,
    verify_automorphism,
)
from .parser import parse_text
from .poly import MultiPoly
from .scalars import GradedDims

# -- data loading ----------------------------------------------------------------

_CACHE = {}


def _read_data(name: str) -> str:
    return (resources.files("superbialg") / "data" / name).read_text(
        encoding="utf-8"
    )


def load_definitions():
    """Parsed shipped data: one ParsedFile holding algebras and pairs."""
    if "defs" not in _CACHE:
        alg = parse_text(_read_data("algebras.sbg"), filename="algebras.sbg")
        full = parse_text(
            _read_data("catalog.sbg"),
            filename="catalog.sbg",
            algebras=alg.algebras,
        )
        _CACHE["defs"] = full
    return _CACHE["defs"]


# friendly spellings for the registry ids
ALIASES = {
    "I(1,1)": "I_1_1",
    "I(2,1)": "I_2_1",
    "I(1,2)": "I_1_2",
    "A11+A": "A11_A",
    "(A11+A)": "A11_A",
    "C1_1/2": "C1_half",
    "C1_{1/2}": "C1_half",
    "(A11+2A)^1": "A11_2A_1",
    "(A11+2A)^2": "A11_2A_2",
    "A11+2A^1": "A11_2A_1",
    "A11+2A^2": "A11_2A_2",
}


def algebra_ids() -> list:
    return sorted(load_definitions().algebras)


def entry_ids() -> list:
    return sorted(load_definitions().pairs)


def resolve_algebra(ident: str):
    """Shipped algebra by id or alias: returns (name, AlgebraDef)."""
    defs = load_definitions()
    name = ALIASES.get(ident, ident)
    if name not in defs.algebras:
        known = ", ".join(sorted(defs.algebras))
        raise UnknownIdError(f"unknown algebra {ident!r}; shipped: {known}")
    return name, defs.algebras[name]


def resolve_entry(entry_id: str):
    defs = load_definitions()
    if entry_id not in defs.pairs:
        known = ", ".join(sorted(defs.pairs))
        raise UnknownIdError(f"unknown catalog entry {entry_id!r}; shipped: {known}")
    return defs.pairs[entry_id]


# -- automorphism families --------------------------------------------------------


def _v(name):
    return MultiPoly.var(name)


def _aut_families():
    a, b, c, d, e = (_v(n) for n in "abcde")
    d11, d21, d12 = GradedDims(1, 1), GradedDims(2, 1), GradedDims(1, 2)
    fams = [
        AutFamily("B", d11, [[1, 0], [0, b]], ("b",), [b], {"b": (2, 2)}),
        AutFamily(
            "A11_A", d11, [[a * a, 0], [0, a]], ("a",), [a], {"a": (2, 2)}
        ),
        AutFamily(
            "C1_p", d21,
            [[1, a, 0], [0, c, 0], [0, 0, d]],
            ("a", "c", "d"), [c, d],
            {"a": (1, 2), "c": (2, 2), "d": (3, 3)},
        ),
        AutFamily(
            "C1_half", d21,
            [[1, a, 0], [0, b * b, 0], [0, 0, b]],
            ("a", "b"), [b],
            {"a": (1, 2), "b": (3, 3)},
        ),
        AutFamily(
            "C2_1", d12,
            [[1, 0, 0], [0, c, b], [0, a, d]],
            ("a", "b", "c", "d"), [c * d - a * b],
            {"c": (2, 2), "b": (2, 3), "a": (3, 2), "d": (3, 3)},
        ),
        AutFamily(
            "C2_p", d12,
            [[1, 0, 0], [0, c, 0], [0, 0, d]],
            ("c", "d"), [c, d],
            {"c": (2, 2), "d": (3, 3)},
        ),
        AutFamily(
            "C3", d12,
            [[a, 0, 0], [0, a * d, 0], [0, e, d]],
            ("a", "d", "e"), [a, d],
            {"a": (1, 1), "e": (3, 2), "d": (3, 3)},
        ),
        AutFamily(
            "C4", d12,
            [[1, 0, 0], [0, c, 0], [0, d, c]],
            ("c", "d"), [c],
            {"c": (2, 2), "d": (3, 2)},
        ),
        AutFamily(
            "C5_p", d12,
            [[1, 0, 0], [0, c, -d], [0, d, c]],
            ("c", "d"), [c * c + d * d],
            {"c": (2, 2), "d": (3, 2)},
        ),
        AutFamily(
            "A11_2A_1", d12,
            [[b * b + c * c, 0, 0], [0, b, -c], [0, c, b]],
            ("b", "c"), [b * b + c * c],
            {"b": (2, 2), "c": (3, 2)},
        ),
        AutFamily(
            "A11_2A_2", d12,
            [[b * b - c * c, 0, 0], [0, b, c], [0, c, b]],
            ("b", "c"), [b * b - c * c],
            {"b": (2, 2), "c": (3, 2)},
        ),
    ]
    return {f.algebra_id: f for f in fams}


AUT_FAMILIES = _aut_families()


_SAMPLE_POOL = tuple(
    Fraction(x)
    for x in (1, 2, -1, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3,
              Fraction(1, 3), Fraction(-1, 3), 5, -5)
)


def family_sample_assignments(family: AutFamily, count: int) -> list:
    """Deterministic admissible parameter assignments for a family."""
    pool = _SAMPLE_POOL
    out = []
    # walk the pool with stride offsets so multi-parameter families get
    # genuinely mixed values instead of all-equal tuples
    for start in range(len(pool) * len(pool)):
        assign = {
            p: pool[(start + t * (start % len(pool) + 1)) % len(pool)]
            for t, p in enumerate(family.param_names)
        }
        if family.constraints_ok(assign) and assign not in out:
            out.append(assign)
        if len(out) >= count:
            break
    return out


def verify_family(g, family: AutFamily, sample_count=5) -> dict:
    """Family-level automorphism certificate.

    Checks the symbolic residual, then concrete members at admissible
    samples, then closure of the sampled members under product and
    inverse, re-testing membership each time.
    """
    symbolic = family_automorphism_residual(g, family)
    samples = family_sample_assignments(family, sample_count)
    member_fail = []
    for assign in samples:
        M = family.instantiate(assign)
        rep = verify_automorphism(g, M)
        if not rep["ok"]:
            member_fail.append((assign, rep))
    closure_fail = []
    mats = [family.instantiate(a) for a in samples]
    for M in mats:
        ok, why = family_membership(family, M.superinverse())
        if not ok:
            closure_fail.append(("inverse", M, why))
    for M1 in mats[:3]:
        for M2 in mats[:3]:
            ok, why = family_membership(family, M1 * M2)
            if not ok:
                closure_fail.append(("product", (M1, M2), why))
    return {
        "algebra": family.algebra_id,
        "symbolic_ok": not symbolic,
        "symbolic_residual": symbolic,
        "samples": samples,
        "members_ok": not member_fail,
        "member_failures": member_fail,
        "closure_ok": not closure_fail,
        "closure_failures": closure_fail,
        "ok": not symbolic and not member_fail and not closure_fail,
    }


# -- catalog verification ---------------------------------------------------------


def fallback_samples(spec, want=3) -> list:
    """Admissible rational values for a parameter without listed samples."""
    out = []
    for cand in _SAMPLE_POOL + (Fraction(0),):
        if spec.contains(cand):
            out.append(cand)
        if len(out) >= want:
            break
    return out


def entry_assignments(pd, g) -> list:
    """Default sample grid for one catalog entry: the product of each
    parameter's listed samples (fallback picks when absent)."""
    pnames = sorted(set(g.params) | set(pd.params))
    if not pnames:
        return [{}]
    grids = []
    for pn in pnames:
        vals = pd.samples.get(pn)
        if not vals:
            spec = g.params.get(pn) or pd.params[pn]
            vals = fallback_samples(spec)
        grids.append([(pn, Fraction(v)) for v in vals])
    return [dict(combo) for combo in product(*grids)]


class EntryReport:
    """Verification outcome for one catalog entry over its sample grid."""

    __slots__ = ("entry_id", "table", "primal_name", "rows")

    def __init__(self, entry_id, table, primal_name, rows):
        self.entry_id = entry_id
        self.table = table
        self.primal_name = primal_name
        self.rows = rows  # list of (assignment, [CheckResult ...])

    @property
    def ok(self) -> bool:
        return all(c.ok for _, checks in self.rows for c in checks)

    def worst(self):
        return [
            (assign, c)
            for assign, checks in self.rows
            for c in checks
            if not c.ok
        ]


def entry_checks(g, d) -> list:
    """The residual battery run on a concrete (algebra, dual) pair."""
    results = pair_checks(g, d, with_cocycle=True)
    dbl = build_double(g, d)
    results.append(
        CheckResult("double_closure", 0 if dbl.valid else 1, dbl.valid)
    )
    r = dbl.algebra.super_jacobi_residual()
    results.append(CheckResult("double_super_jacobi", len(r), not r))
    r = pairing_ad_invariance(dbl)
    results.append(CheckResult("pairing_ad_invariance", len(r), not r))
    return results


def verify_entry(pd, sample_overrides=None, primal=None) -> EntryReport:
    if primal is not None:
        g = primal
    else:
        defs = load_definitions()
        g = defs.algebras[pd.primal_name].build()
    d = pd.build_dual(g)
    assignments = entry_assignments(pd, g)
    if sample_overrides:
        assignments = _apply_overrides(pd, g, sample_overrides)
    rows = []
    for assign in assignments:
        gsub = {k: v for k, v in assign.items() if k in g.params}
        gg = g.subs_params(gsub) if gsub else g
        dd = d.subs_params(assign) if assign else d
        rows.append((assign, entry_checks(gg, dd)))
    return EntryReport(pd.entry_id, pd.table, pd.primal_name, rows)


def _apply_overrides(pd, g, overrides) -> list:
    pnames = sorted(set(g.params) | set(pd.params))
    if not pnames:
        return [{}]
    grids = []
    for pn in pnames:
        vals = overrides.get((pd.entry_id, pn)) or pd.samples.get(pn)
        if not vals:
            spec = g.params.get(pn) or pd.params[pn]
            vals = fallback_samples(spec)
        grids.append([(pn, Fraction(v)) for v in vals])
    return [dict(combo) for combo in product(*grids)]


def verify_catalog(table=None, entry_id=None, sample_overrides=None) -> list:
    """EntryReports for the shipped catalog, optionally filtered."""
    defs = load_definitions()
    out = []
    for eid in sorted(defs.pairs):
        pd = defs.pairs[eid]
        if table is not None and pd.table != table:
            continue
        if entry_id is not None and eid != entry_id:
            continue
        out.append(verify_entry(pd, sample_overrides))
    return out


def parse_sample_overrides(text: str) -> dict:
    """Sample override file: one 'entry: param = v1, v2, ...' per line.

    Blank lines and '#' comments are skipped.  Values are exact rationals.
    """
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, values = line.split("=", 1)
            entry, param = (part.strip() for part in head.split(":", 1))
            vals = [Fraction(v.strip()) for v in values.split(",") if v.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(
                f"bad sample override line: {exc}", lineno, 1, "<samples>"
            ) from exc
        if not vals:
            raise ParseError("no sample values given", lineno, 1, "<samples>")
        out[(entry, param)] = vals
    return out
