"""Dual structures, compatibility residuals, and Drinfel'd doubles.

A dual structure carries components with two upper indices and one lower
index; it obeys the same antisymmetry/grading/reality rules as a bracket
tensor, read along the upper pair. Compatibility of a (bracket, cobracket)
pair is measured by exact residual tensors; a pair is admissible when every
residual vanishes identically.
"""

from __future__ import annotations

from .algebra import (
    LieSuperAlgebra,
    materialize_tensor,
    tensor_violations,
)
from .errors import DimensionMismatchError
from .poly import MultiPoly
from .scalars import GradedDims, GScalar

__all__ = [
    "DualStructure",
    "DoubleAlgebra",
    "dual_algebra",
    "algebra_as_dual",
    "mixed_jacobi_residual",
    "dual_jacobi_residual",
    "cocommutator",
    "cocycle_residual",
    "matrix_identity_crosscheck",
    "build_double",
    "pairing_ad_invariance",
    "manin_swap",
    "pair_checks",
    "CheckResult",
]


def _vzero(value) -> bool:
    return value.is_zero()


class DualStructure:
    """Cobracket components f~ with upper pair (i, j) and lower index k."""

    def __init__(self, dims: GradedDims, entries, name="dual", params=None,
                 check_reality=True):
        self.dims = dims
        self.name = name
        self.ft = materialize_tensor(dims, entries)
        self.params = dict(params or {})
        self.check_reality = check_reality

    def ft_get(self, i, j, k):
        """Component with upper pair (i, j) and lower index k."""
        return self.ft.get((i, j, k), GScalar(0))

    @property
    def parametric(self) -> bool:
        return bool(self.params)

    def validate_structure(self, check_reality=None) -> list:
        if check_reality is None:
            check_reality = self.check_reality
        return tensor_violations(
            self.dims, self.ft, check_reality=check_reality, upper_pair=True
        )

    def subs_params(self, assignment) -> "DualStructure":
        entries = {}
        for key, value in self.ft.items():
            if isinstance(value, MultiPoly):
                value = value.subs(assignment)
                if value.is_constant():
                    value = value.constant_value()
            entries[key] = value
        remaining = {
            name: spec for name, spec in self.params.items() if name not in assignment
        }
        suffix = ",".join(f"{k}={assignment[k]}" for k in sorted(assignment))
        return DualStructure(
            self.dims,
            entries,
            name=f"{self.name}[{suffix}]" if suffix else self.name,
            params=remaining,
            check_reality=self.check_reality,
        )

    def is_zero(self) -> bool:
        return not self.ft

    def nonzero_components(self):
        return {k: v for k, v in sorted(self.ft.items())}

    def __eq__(self, other):
        return (
            isinstance(other, DualStructure)
            and self.dims == other.dims
            and self.ft == other.ft
        )

    def __repr__(self):
        return f"DualStructure({self.name}, dims={self.dims})"


def dual_algebra(d: DualStructure, name=None) -> LieSuperAlgebra:
    """The dual read as an algebra in its own right: h^k_{ij} = f~^{ij}_k."""
    return LieSuperAlgebra(
        name or f"{d.name}^*",
        d.dims,
        dict(d.ft),
        params=d.params,
        check_reality=d.check_reality,
    )


def algebra_as_dual(g: LieSuperAlgebra, name=None) -> DualStructure:
    """Read an algebra's bracket tensor as a cobracket on the dual side."""
    return DualStructure(
        g.dims,
        dict(g.f),
        name=name or f"{g.name}~",
        params=g.params,
        check_reality=g.check_reality,
    )


def _check_pair_dims(g, d):
    if g.dims != d.dims:
        raise DimensionMismatchError(
            f"algebra dims {g.dims} and dual dims {d.dims} differ"
        )


def mixed_jacobi_residual(g: LieSuperAlgebra, d: DualStructure) -> dict:
    """Compatibility residual between bracket and cobracket.

    Keys are (i, l, j, k) for the component with upper pair (i, l) and
    lower pair (j, k); empty dict means the pair is compatible.
    """
    _check_pair_dims(g, d)
    dims = g.dims
    rng = list(dims.indices())
    out = {}
    for i in rng:
        for l in rng:
            for j in rng:
                for k in rng:
                    s_jl = dims.parity_sign(j, l)
                    s_ik = dims.parity_sign(i, k)
                    acc = GScalar(0)
                    for m in rng:
                        acc = acc + g.f_get(j, k, m) * d.ft_get(i, l, m)
                        acc = acc - g.f_get(m, k, i) * d.ft_get(m, l, j)
                        acc = acc - g.f_get(j, m, l) * d.ft_get(i, m, k)
                        acc = acc - s_jl * g.f_get(j, m, i) * d.ft_get(m, l, k)
                        acc = acc - s_ik * g.f_get(m, k, l) * d.ft_get(i, m, j)
                    if not _vzero(acc):
                        out[(i, l, j, k)] = acc
    return out


def dual_jacobi_residual(d: DualStructure) -> dict:
    """Graded Jacobi residual of the dual bracket."""
    return dual_algebra(d).super_jacobi_residual()


# -- cocommutator ------------------------------------------------------------------


def cocommutator(d: DualStructure, i: int) -> dict:
    """Cobracket image of generator i as a map into the graded wedge square.

    Returns {(j, k): coefficient} on the tensor-square basis, including the
    graded antisymmetric partner entries.
    """
    dims = d.dims
    out = {}
    for j in dims.indices():
        for k in dims.indices():
            v = dims.parity_sign(j, k) * d.ft_get(j, k, i)
            if not _vzero(v):
                out[(j, k)] = v
    return out


def cocycle_residual(g: LieSuperAlgebra, d: DualStructure) -> dict:
    """Failure of the cobracket to be a 1-cocycle for the adjoint action.

    Keys are (a, b, j, k): the (j, k) component of the mismatch between the
    cobracket of [X_a, X_b] and the adjoint action of the pair on the two
    cobracket legs. Equivalent in vanishing to mixed_jacobi_residual.
    """
    _check_pair_dims(g, d)
    dims = g.dims
    rng = list(dims.indices())
    delta = {c: cocommutator(d, c) for c in rng}

    def action(x, y, j, k):
        # adjoint generator x acting on both legs of the cobracket of y
        acc = GScalar(0)
        s = dims.sign_pow(dims.parity(x) * dims.parity(j))
        for m in rng:
            acc = acc + g.f_get(x, m, j) * delta[y].get((m, k), GScalar(0))
            acc = acc + s * delta[y].get((j, m), GScalar(0)) * g.f_get(x, m, k)
        return acc

    out = {}
    for a in rng:
        for b in rng:
            s_ab = dims.parity_sign(a, b)
            for j in rng:
                for k in rng:
                    lhs = GScalar(0)
                    for c in rng:
                        lhs = lhs + g.f_get(a, b, c) * delta[c].get((j, k), GScalar(0))
                    acc = lhs - action(a, b, j, k) + s_ab * action(b, a, j, k)
                    if not _vzero(acc):
                        out[(a, b, j, k)] = acc
    return out


# -- matrix-form identities ---------------------------------------------------------


def _value_matrix_st(dims, rows):
    n = dims.total
    out = [[GScalar(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        pi = dims.parity(i)
        for j in range(1, n + 1):
            sign = dims.sign_pow(pi * (pi + dims.parity(j)))
            out[i - 1][j - 1] = sign * rows[j - 1][i - 1]
    return out


def _vm_mul(a, b):
    n = len(a)
    return [
        [sum((a[i][l] * b[l][j] for l in range(n)), GScalar(0)) for j in range(n)]
        for i in range(n)
    ]


def _vm_add(a, b):
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _vm_scale(c, a):
    return [[c * x for x in row] for row in a]


def _vm_zero(n):
    return [[GScalar(0)] * n for _ in range(n)]


def _vm_is_zero(a):
    return all(_vzero(x) for row in a for x in row)


def dual_adjoint_matrices(d: DualStructure):
    """One matrix per generator: row j, column k holds -f~^{ij}_k."""
    dims = d.dims
    return [
        [[-d.ft_get(i, j, k) for k in dims.indices()] for j in dims.indices()]
        for i in dims.indices()
    ]


def matrix_identity_crosscheck(g: LieSuperAlgebra, d: DualStructure) -> dict:
    """Matrix transcriptions of the two closure identities vs their tensor forms.

    The tensor residuals are authoritative. The dual-side matrix identity
    states that the coadjoint-style matrices realize the dual bracket (it
    can only witness the identity through that action, so agreement is
    checked as a predicate). The mixed identity is assembled with parity
    and supertranspose insertions so that, for grading-valid tensors, its
    matrix entries reproduce the mixed residual exactly; entrywise
    equality is reported alongside the vanishing predicates.
    """
    _check_pair_dims(g, d)
    dims = g.dims
    n = dims.total
    rng = list(dims.indices())
    xt = dual_adjoint_matrices(d)
    y = g.adjoint_rep()
    ident = [
        [GScalar(1) if i == j else GScalar(0) for j in range(n)] for i in range(n)
    ]
    eta = [
        [dims.sign_pow(dims.parity(i + 1)) if i == j else GScalar(0) for j in range(n)]
        for i in range(n)
    ]

    def eta_pow(index):
        return eta if dims.parity(index) == 1 else ident

    matrix_dual_ok = True
    for i in rng:
        for j in rng:
            s = dims.parity_sign(i, j)
            acc = _vm_zero(n)
            for k in rng:
                acc = _vm_add(acc, _vm_scale(xt[i - 1][j - 1][k - 1], xt[k - 1]))
            acc = _vm_add(acc, _vm_scale(GScalar(-1), _vm_mul(xt[j - 1], xt[i - 1])))
            acc = _vm_add(acc, _vm_scale(s, _vm_mul(xt[i - 1], xt[j - 1])))
            if not _vm_is_zero(acc):
                matrix_dual_ok = False

    mixed = mixed_jacobi_residual(g, d)
    matrix_mixed_ok = True
    mixed_entrywise = True
    for i in rng:
        for l in rng:
            st_l = _value_matrix_st(dims, xt[l - 1])
            st_i = _value_matrix_st(dims, xt[i - 1])
            e_l = eta_pow(l)
            e_i = eta_pow(i)
            acc = _vm_zero(n)
            for m in rng:
                acc = _vm_add(acc, _vm_scale(xt[i - 1][l - 1][m - 1], y[m - 1]))
            acc = _vm_add(
                acc, _vm_mul(_vm_mul(_vm_mul(e_l, st_l), e_l), y[i - 1])
            )
            acc = _vm_add(acc, _vm_scale(GScalar(-1), _vm_mul(y[l - 1], xt[i - 1])))
            acc = _vm_add(
                acc, _vm_mul(_vm_mul(_vm_mul(e_l, y[i - 1]), e_l), xt[l - 1])
            )
            acc = _vm_add(
                acc,
                _vm_scale(
                    GScalar(-1),
                    _vm_mul(_vm_mul(_vm_mul(e_i, st_i), y[l - 1]), e_i),
                ),
            )
            if not _vm_is_zero(acc):
                matrix_mixed_ok = False
            for j in rng:
                for k in rng:
                    want = mixed.get((i, l, j, k), GScalar(0))
                    got = acc[j - 1][k - 1]
                    if not _vzero(got - want):
                        mixed_entrywise = False

    tensor_dual_ok = not dual_jacobi_residual(d)
    tensor_mixed_ok = not mixed
    return {
        "matrix_dual_ok": matrix_dual_ok,
        "tensor_dual_ok": tensor_dual_ok,
        "matrix_mixed_ok": matrix_mixed_ok,
        "tensor_mixed_ok": tensor_mixed_ok,
        "mixed_entrywise_equal": mixed_entrywise,
        "agree": matrix_dual_ok == tensor_dual_ok
        and matrix_mixed_ok == tensor_mixed_ok,
    }


# -- the double ---------------------------------------------------------------------


class DoubleAlgebra:
    """Drinfel'd double: the direct sum with the canonical pairing.

    Basis order groups bosons first (primal bosons, dual bosons, primal
    fermions, dual fermions). The double's basis is not reality-standard,
    so its algebra is built with check_reality=False. ``valid`` records
    whether the source pair satisfied both closure identities.
    """

    def __init__(self, algebra, pairing_rows, primal_positions, dual_positions,
                 source_algebra, source_dual, valid):
        self.algebra = algebra
        self.pairing = pairing_rows
        self.primal_positions = primal_positions
        self.dual_positions = dual_positions
        self.source_algebra = source_algebra
        self.source_dual = source_dual
        self.valid = valid

    @property
    def dims(self):
        return self.algebra.dims

    def pair(self, u, v):
        """Evaluate the canonical pairing on coefficient vectors."""
        n = self.dims.total
        acc = GScalar(0)
        for a in range(n):
            for b in range(n):
                p = self.pairing[a][b]
                if not p.is_zero():
                    acc = acc + u[a] * p * v[b]
        return acc


def build_double(g: LieSuperAlgebra, d: DualStructure, name=None) -> DoubleAlgebra:
    _check_pair_dims(g, d)
    m, n = g.dims.m, g.dims.n
    big = GradedDims(2 * m, 2 * n)
    N = m + n

    def ppos(i):
        return i if i <= m else m + i

    def dpos(i):
        return m + i if i <= m else m + n + i

    entries = {}

    def put(i, j, k, value):
        if value.is_zero():
            return
        if (i, j, k) in entries:
            entries[(i, j, k)] = entries[(i, j, k)] + value
        else:
            entries[(i, j, k)] = value

    for (i, j, k), v in g.f.items():
        if i <= j:
            put(ppos(i), ppos(j), ppos(k), v)
    for (i, j, k), v in d.ft.items():
        if i <= j:
            put(dpos(i), dpos(j), dpos(k), v)
    # cross brackets between a primal and a dual generator
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            sj = g.dims.sign_pow(g.dims.parity(j))
            si = g.dims.sign_pow(g.dims.parity(i))
            for k in range(1, N + 1):
                v1 = sj * d.ft_get(j, k, i)
                if not _vzero(v1):
                    put(ppos(i), dpos(j), ppos(k), v1)
                v2 = si * g.f_get(k, i, j)
                if not _vzero(v2):
                    put(ppos(i), dpos(j), dpos(k), v2)

    merged_params = dict(g.params)
    merged_params.update(d.params)
    algebra = LieSuperAlgebra(
        name or f"D({g.name},{d.name})",
        big,
        entries,
        params=merged_params,
        check_reality=False,
    )

    total = 2 * N
    pairing = [[GScalar(0)] * total for _ in range(total)]
    for i in range(1, N + 1):
        pi = g.dims.parity(i)
        pairing[ppos(i) - 1][dpos(i) - 1] = GScalar(1)
        pairing[dpos(i) - 1][ppos(i) - 1] = g.dims.sign_pow(pi * pi)

    valid = (
        not g.super_jacobi_residual()
        and not dual_jacobi_residual(d)
        and not mixed_jacobi_residual(g, d)
    )
    return DoubleAlgebra(
        algebra,
        pairing,
        {i: ppos(i) for i in range(1, N + 1)},
        {i: dpos(i) for i in range(1, N + 1)},
        g,
        d,
        valid,
    )


def pairing_ad_invariance(double: DoubleAlgebra) -> dict:
    """Residual of pairing invariance under the double's bracket.

    Keys (a, b, c) over all basis triples; empty means the canonical
    pairing is invariant.
    """
    # on basis vectors the two pairings contract one tensor entry with one
    # pairing entry, so walk the nonzero tensor entries directly:
    #   <[e_a,e_b], e_c> - (-1)^{|b|} <e_a, [e_b,e_c]>
    #     = sum_k f(a,b,k) P[k][c]  -  (-1)^{|b|} sum_k f(b,c,k) P[a][k]
    alg = double.algebra
    dims = alg.dims
    total = dims.total
    P = double.pairing
    by_row = {}
    by_col = {}
    for r in range(1, total + 1):
        for c in range(1, total + 1):
            v = P[r - 1][c - 1]
            if not v.is_zero():
                by_row.setdefault(r, []).append((c, v))
                by_col.setdefault(c, []).append((r, v))
    acc = {}

    def add(key, value):
        if key in acc:
            acc[key] = acc[key] + value
        else:
            acc[key] = value

    for (a, b, k), fv in alg.f.items():
        for c, pv in by_row.get(k, ()):
            add((a, b, c), fv * pv)
        # second term with (a, b, k) read as (b, c, k)
        sb = dims.sign_pow(dims.parity(a))
        for r, pv in by_col.get(k, ()):
            add((r, a, b), -(sb * pv) * fv)
    return {key: value for key, value in acc.items() if not _vzero(value)}


def manin_swap(g: LieSuperAlgebra, d: DualStructure):
    """Exchange the roles of bracket and cobracket across the pairing."""
    _check_pair_dims(g, d)
    g2 = dual_algebra(d, name=f"{d.name}^*")
    d2 = algebra_as_dual(g, name=f"{g.name}~")
    return g2, d2


# -- bundled checks --------------------------------------------------------------


class CheckResult:
    __slots__ = ("name", "nonzero_count", "ok", "detail")

    def __init__(self, name, nonzero_count, ok, detail=""):
        self.name = name
        self.nonzero_count = nonzero_count
        self.ok = ok
        self.detail = detail

    def __repr__(self):
        state = "ok" if self.ok else "FAIL"
        return f"CheckResult({self.name}: {state}, nonzero={self.nonzero_count})"


def pair_checks(g: LieSuperAlgebra, d: DualStructure, with_cocycle=True) -> list:
    """The residual battery for one (algebra, dual) pair, in report order."""
    results = []
    v = g.validate_structure()
    results.append(CheckResult("structure", len(v), not v))
    r = g.super_jacobi_residual()
    results.append(CheckResult("super_jacobi", len(r), not r))
    v = d.validate_structure()
    results.append(CheckResult("dual_structure", len(v), not v))
    r = dual_jacobi_residual(d)
    results.append(CheckResult("dual_super_jacobi", len(r), not r))
    r = mixed_jacobi_residual(g, d)
    results.append(CheckResult("mixed_super_jacobi", len(r), not r))
    if with_cocycle:
        r = cocycle_residual(g, d)
        results.append(CheckResult("cocycle", len(r), not r))
    return results
