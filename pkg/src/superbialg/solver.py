"""Solving for all dual structures compatible with a given algebra.

The compatibility identity is linear in the cobracket components, so the
admissible duals form the kernel of an exact linear system (entries are
polynomials in the algebra's parameters). The dual-side Jacobi identity
then cuts that kernel by homogeneous quadratic constraints. The solver
returns the generic kernel with constraints, splits monomial constraints
into coordinate branches, and re-solves at parameter values where the
kernel or the constraints degenerate.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LieSuperAlgebra, ParamSpec
from .bialgebra import DualStructure, dual_jacobi_residual, mixed_jacobi_residual
from .errors import ConstraintViolationError, ValidationError
from .linalg import poly_nullspace, rref
from .poly import MultiPoly, as_poly
from .scalars import GScalar

__all__ = [
    "Unknown",
    "enumerate_unknowns",
    "mixed_system_rows",
    "DualSolutionFamily",
    "solve_duals",
    "grid_completeness_check",
]

_NAME_PALETTE = (
    "alpha", "beta", "gamma", "delta", "lam", "mu", "nu", "rho", "sigma", "tau",
)


class Unknown:
    """One independent cobracket component.

    ``imaginary`` marks components forced pure imaginary by the reality
    rule; the associated real coordinate t enters as i*t.
    """

    __slots__ = ("i", "j", "k", "imaginary")

    def __init__(self, i, j, k, imaginary):
        self.i = i
        self.j = j
        self.k = k
        self.imaginary = imaginary

    @property
    def key(self):
        return (self.i, self.j, self.k)

    def label(self) -> str:
        return f"ft({self.i},{self.j};{self.k})"

    def __repr__(self):
        tag = " (imaginary)" if self.imaginary else ""
        return f"Unknown{self.key}{tag}"


def enumerate_unknowns(dims) -> list:
    """Independent components (i <= j) surviving grading and antisymmetry,
    in lexicographic (i, j, k) order."""
    out = []
    for i in dims.indices():
        for j in dims.indices():
            if j < i:
                continue
            if i == j and dims.parity(i) == 0:
                continue
            for k in dims.indices():
                if (dims.parity(i) + dims.parity(j) - dims.parity(k)) % 2:
                    continue
                imag = (
                    dims.parity(i) == 1 == dims.parity(j) and dims.parity(k) == 0
                )
                out.append(Unknown(i, j, k, imag))
    return out


def _unit_dual(dims, unk) -> DualStructure:
    value = GScalar(0, 1) if unk.imaginary else GScalar(1)
    return DualStructure(dims, {unk.key: value}, name=f"e[{unk.label()}]")


def _poly_re(p: MultiPoly) -> MultiPoly:
    return MultiPoly(p.variables, {e: GScalar(c.re) for e, c in p.terms.items()})


def _poly_im(p: MultiPoly) -> MultiPoly:
    return MultiPoly(p.variables, {e: GScalar(c.im) for e, c in p.terms.items()})


def mixed_system_rows(g: LieSuperAlgebra, unknowns) -> list:
    """Real-coefficient linear system whose kernel is the space of
    compatible duals (coordinates are the unknowns' real parameters)."""
    dims = g.dims
    columns = []
    keys = set()
    for unk in unknowns:
        res = mixed_jacobi_residual(g, _unit_dual(dims, unk))
        res = {k: as_poly(v) for k, v in res.items()}
        columns.append(res)
        keys.update(res)
    rows = []
    for key in sorted(keys):
        re_row = []
        im_row = []
        for col in columns:
            cell = col.get(key)
            if cell is None:
                re_row.append(as_poly(0))
                im_row.append(as_poly(0))
            else:
                re_row.append(_poly_re(cell))
                im_row.append(_poly_im(cell))
        if any(not c.is_zero() for c in re_row):
            rows.append(re_row)
        if any(not c.is_zero() for c in im_row):
            rows.append(im_row)
    return rows


class DualSolutionFamily:
    """A linear family of compatible duals, with quadratic constraints.

    entries: component key -> polynomial in the family's free names (and
    any remaining algebra parameters). constraints: polynomials that must
    vanish for a member to satisfy the dual Jacobi identity. locus: the
    algebra-parameter values this family was solved at ({} = generic).
    """

    def __init__(self, algebra_name, dims, free_names, entries, constraints,
                 locus=None, note=""):
        self.algebra_name = algebra_name
        self.dims = dims
        self.free_names = tuple(free_names)
        self.entries = dict(entries)
        self.constraints = tuple(constraints)
        self.locus = dict(locus or {})
        self.note = note

    @property
    def dimension(self) -> int:
        return len(self.free_names)

    def dual(self, params=None) -> DualStructure:
        """The family as a symbolic dual structure."""
        specs = {name: ParamSpec(name) for name in self.free_names}
        if params:
            specs.update(params)
        return DualStructure(
            self.dims,
            dict(self.entries),
            name=f"duals({self.algebra_name})",
            params=specs,
        )

    def specialize(self, assignment) -> DualStructure:
        """Concrete member at real values of the free names (constraints
        enforced)."""
        vals = {k: Fraction(v) for k, v in assignment.items()}
        missing = [n for n in self.free_names if n not in vals]
        if missing:
            raise ValidationError(f"missing family values for {missing}")
        for c in self.constraints:
            extra = [v for v in c.variables if v not in vals]
            if extra:
                raise ValidationError(
                    f"constraint {c} involves unsolved parameters {extra}"
                )
            if not c.eval(vals).is_zero():
                raise ConstraintViolationError(
                    f"assignment violates constraint {c} = 0"
                )
        entries = {}
        for key, poly in self.entries.items():
            sub = poly.subs(vals)
            if not sub.is_constant():
                raise ValidationError(
                    f"component {key} still symbolic after substitution: {sub}"
                )
            v = sub.constant_value()
            if not v.is_zero():
                entries[key] = v
        return DualStructure(
            self.dims, entries, name=f"duals({self.algebra_name})@pt"
        )

    def describe(self) -> str:
        bits = []
        if self.locus:
            locus = ",".join(f"{k}={v}" for k, v in sorted(self.locus.items()))
            bits.append(f"at {locus}")
        bits.append(f"dim {self.dimension}")
        if self.constraints:
            bits.append("constraints " + "; ".join(str(c) for c in self.constraints))
        if self.note:
            bits.append(self.note)
        return ", ".join(bits)

    def __repr__(self):
        return f"DualSolutionFamily({self.algebra_name}: {self.describe()})"


def _canonical_constraints(residual_values):
    """Dedup and normalize quadratic constraint polynomials.

    The free names are real, so a complex residual vanishes iff its real
    and imaginary parts vanish; each part becomes one real constraint.
    """
    seen = {}
    for v in residual_values:
        p = as_poly(v)
        for part in (_poly_re(p), _poly_im(p)):
            if part.is_zero():
                continue
            _, prim = part.primitive()
            seen[str(prim)] = prim
    return [seen[k] for k in sorted(seen)]


def _split_constraint(poly, family_vars):
    """Split a constraint into its family-variable monomial and the rest.

    Returns (mono_vars, reduced) where mono_vars is the dict of family
    variables in the common monomial factor and reduced keeps everything
    else (possibly involving algebra parameters or further family vars).
    """
    mono, reduced = poly.monomial_content()
    fam_part = {v: e for v, e in mono.items() if v in family_vars}
    other = {v: e for v, e in mono.items() if v not in family_vars}
    if other:
        lift = MultiPoly(
            tuple(sorted(other)), {tuple(other[v] for v in sorted(other)): GScalar(1)}
        )
        reduced = lift * reduced
    return fam_part, reduced


def _minimal_hitting_sets(sets):
    """All minimal sets of variables meeting every constraint's variable set."""
    from itertools import combinations

    universe = sorted({v for s in sets for v in s})
    hits = []
    for size in range(0, len(universe) + 1):
        for combo in combinations(universe, size):
            chosen = set(combo)
            if any(set(h) <= chosen for h in hits):
                continue
            if all(chosen & s for s in sets):
                hits.append(combo)
    return hits


def _linear_in(q, names):
    """True when q is a homogeneous linear polynomial purely in names."""
    if not set(q.variables) <= set(names):
        return False
    return bool(q.terms) and all(sum(e) == 1 for e in q.terms)


def _eliminate_linear(g, names, entries, q):
    """Branch family obtained by imposing the linear relation q = 0.

    Solves q for its lex-last variable and rewrites the entry polynomials,
    which stay at most degree one in that variable.  Returns None when an
    entry is of higher degree in it, since the rewrite would then be wrong.
    """
    coeffs = {}
    for exps, c in q.terms.items():
        coeffs[q.variables[exps.index(1)]] = c
    pivot = sorted(coeffs)[-1]
    cp = coeffs[pivot]
    repl = MultiPoly.const(0)
    for v, c in coeffs.items():
        if v != pivot:
            repl = repl + MultiPoly.var(v) * MultiPoly.const(-(c / cp))

    out_entries = {}
    for key, poly in entries.items():
        if poly.degree_in(pivot) > 1:
            return None
        lo = poly.subs({pivot: Fraction(0)})
        slope = poly.subs({pivot: Fraction(1)}) - lo
        new = lo + slope * repl
        if not new.is_zero():
            out_entries[key] = new
    live = sorted(
        {v for p in out_entries.values() for v in p.variables} - set(g.params)
    )
    return DualSolutionFamily(
        g.name, g.dims, live, out_entries, (), note=f"branch {q}=0"
    )


def _substitute_names(entries, zeroed):
    sub = {name: Fraction(0) for name in zeroed}
    out = {}
    for key, poly in entries.items():
        q = poly.subs(sub)
        if not q.is_zero():
            out[key] = q
    return out


def solve_duals(g: LieSuperAlgebra, split_branches=True, explore_special=True) -> list:
    """All compatible dual families for g.

    Returns DualSolutionFamily objects: the generic kernel first (with its
    quadratic constraints), then constraint-free coordinate branches when
    every constraint is monomial in the free names, then families re-solved
    at parameter values where the solution degenerates.
    """
    unknowns = enumerate_unknowns(g.dims)
    rows = mixed_system_rows(g, unknowns)
    basis, pivot_polys = poly_nullspace(rows, len(unknowns))

    names = []
    palette = iter(_NAME_PALETTE)
    while len(names) < len(basis):
        cand = next(palette)
        if cand not in g.params:
            names.append(cand)

    entries = {}
    for unk_idx, unk in enumerate(unknowns):
        acc = as_poly(0)
        for vec, name in zip(basis, names):
            coef = vec[unk_idx]
            if coef.is_zero():
                continue
            acc = acc + coef * MultiPoly.var(name)
        if unk.imaginary:
            acc = acc * GScalar(0, 1)
        if not acc.is_zero():
            entries[unk.key] = acc

    family = DualSolutionFamily(g.name, g.dims, names, entries, ())
    constraints = _canonical_constraints(
        dual_jacobi_residual(family.dual()).values()
    )
    family.constraints = tuple(constraints)
    out = [family]

    mono_sets = []
    factor_parts = []  # (fam_mono_vars, reduced poly still holding family vars)
    splittable = True
    special_candidates = set()
    for c in constraints:
        fam_mono, reduced = _split_constraint(c, set(names))
        fam_left = [v for v in reduced.variables if v not in g.params]
        param_vars = [v for v in reduced.variables if v in g.params]
        if fam_left:
            factor_parts.append((frozenset(fam_mono), reduced))
        elif fam_mono:
            mono_sets.append(frozenset(fam_mono))
        else:
            splittable = False
        if len(param_vars) == 1 and not fam_left:
            pname = param_vars[0]
            for root in reduced.rational_roots():
                if g.params[pname].contains(root):
                    special_candidates.add((pname, root))

    def emit_zero_branch(zeroed):
        sub_entries = _substitute_names(entries, zeroed)
        live = sorted(
            {v for p in sub_entries.values() for v in p.variables}
            - set(g.params)
        )
        out.append(
            DualSolutionFamily(
                g.name, g.dims, live, sub_entries, (),
                note="branch " + ",".join(f"{v}=0" for v in sorted(zeroed)),
            )
        )

    if split_branches and splittable and not factor_parts and mono_sets:
        for hit in _minimal_hitting_sets(mono_sets):
            emit_zero_branch(hit)
    elif split_branches and splittable and factor_parts and not mono_sets:
        # shared-factor shape: every constraint is (monomial) * q for one
        # common homogeneous linear q in the free names
        q = factor_parts[0][1]
        same = all(str(r) == str(q) for _, r in factor_parts[1:])
        if same and _linear_in(q, names):
            branch = _eliminate_linear(g, names, entries, q)
            if branch is not None:
                out.append(branch)
            monos = [m for m, _ in factor_parts]
            if all(monos):
                for hit in _minimal_hitting_sets(monos):
                    emit_zero_branch(hit)

    for poly in pivot_polys:
        pvars = [v for v in poly.variables if v in g.params]
        if len(pvars) == 1 and len(poly.variables) == 1:
            pname = pvars[0]
            for root in poly.rational_roots():
                if g.params[pname].contains(root):
                    special_candidates.add((pname, root))

    if explore_special and g.params:
        generic_dim = family.dimension
        for pname, root in sorted(special_candidates):
            g0 = g.subs_params({pname: root})
            sub = solve_duals(g0, split_branches=split_branches,
                              explore_special=False)
            special = sub[0]
            spec_constraints = [
                c.subs({pname: root}) for c in family.constraints
            ]
            degenerated = any(
                c.is_zero() for c in spec_constraints
            ) and family.constraints
            if special.dimension == generic_dim and not degenerated:
                new_set = {str(c) for c in special.constraints}
                old_set = {
                    str(c.primitive()[1])
                    for c in spec_constraints
                    if not c.is_zero()
                }
                if new_set == old_set:
                    continue
            for fam in sub:
                fam.locus = {pname: root}
                fam.algebra_name = g.name
                out.append(fam)
    return out


# -- exhaustive small-grid confirmation ---------------------------------------------


_GRID = (
    Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
    Fraction(1, 2), Fraction(1), Fraction(2),
)


def grid_completeness_check(g: LieSuperAlgebra, family_basis=None,
                            grid=_GRID) -> dict:
    """Confirm on a full rational grid that every compatible dual lies in
    the solved kernel.

    Builds the exact linear system, scales it to integers, sweeps the grid
    with int64 matrix products (bound-checked against overflow), re-checks
    every surviving point exactly, and tests membership in the kernel span.
    Only for concrete (parameter-free) algebras.
    """
    import numpy as np

    if g.params:
        raise ValidationError("grid check needs a concrete algebra")
    unknowns = enumerate_unknowns(g.dims)
    n = len(unknowns)
    rows = mixed_system_rows(g, unknowns)
    if family_basis is None:
        family_basis, _ = poly_nullspace(rows, n)

    exact_rows = []
    for row in rows:
        exact_rows.append([c.constant_value() for c in row])

    # scale each row to integers; every value is rational with small height
    int_rows = []
    for row in exact_rows:
        denom = 1
        for c in row:
            denom = denom * c.re.denominator // _gcd(denom, c.re.denominator)
        scaled = []
        for c in row:
            v = c.re * denom
            if c.im != 0:
                raise ValidationError("system rows must be real after splitting")
            scaled.append(int(v))
        int_rows.append(scaled)
    S = np.array(int_rows, dtype=np.int64) if int_rows else np.zeros(
        (0, n), dtype=np.int64
    )

    scale = 1
    for v in grid:
        scale = scale * v.denominator // _gcd(scale, v.denominator)
    int_grid = [int(v * scale) for v in grid]

    max_abs_entry = int(np.max(np.abs(S))) if S.size else 0
    bound = max_abs_entry * max(abs(x) for x in int_grid) * n
    if bound >= 2 ** 62:
        raise ValidationError("overflow bound exceeded for this grid")

    # enumerate the grid in blocks via mixed-radix counting
    total = len(grid) ** n
    survivors = []
    block = 1 << 14
    combos = np.zeros((n, block), dtype=np.int64)
    idx = 0
    counter = [0] * n
    while idx < total:
        count = min(block, total - idx)
        for col in range(count):
            for r in range(n):
                combos[r][col] = int_grid[counter[r]]
            pos = n - 1
            while pos >= 0:
                counter[pos] += 1
                if counter[pos] < len(grid):
                    break
                counter[pos] = 0
                pos -= 1
        prod = S @ combos[:, :count] if S.size else np.zeros((0, count))
        if S.size:
            zero_cols = np.where(~prod.any(axis=0))[0]
        else:
            zero_cols = np.arange(count)
        for col in zero_cols:
            vec = tuple(
                Fraction(int(combos[r][col]), scale) for r in range(n)
            )
            survivors.append(vec)
        idx += count

    # exact recheck, then span membership
    span_rows = [
        [as_poly(v).constant_value() for v in vec] for vec in family_basis
    ]
    reduced, pivots = rref([list(r) for r in span_rows])
    rank_basis = len(pivots)

    confirmed = 0
    outside = []
    for vec in survivors:
        exact = [GScalar(x) for x in vec]
        ok = True
        for row in exact_rows:
            acc = GScalar(0)
            for c, x in zip(row, exact):
                acc = acc + c * x
            if not acc.is_zero():
                ok = False
                break
        if not ok:
            continue
        confirmed += 1
        stacked = [list(r) for r in span_rows] + [list(exact)]
        _, piv2 = rref(stacked)
        if len(piv2) != rank_basis:
            outside.append(vec)
    return {
        "grid_points": total,
        "solutions_on_grid": confirmed,
        "all_in_span": not outside,
        "outside": outside,
        "kernel_dim": rank_basis,
    }


def _gcd(a, b):
    from math import gcd

    return gcd(a, b) if a or b else 1
