"""Basis changes: transports, automorphisms, isomorphisms, equivalence.

Conventions. A basis change with matrix A sends X'_i = (-1)^{|a|} A_i^a X_a;
the induced dual-basis change uses C = (A^t)^{-1} with
X~'^i = (-1)^{|k|} C^i_k X~^k.

Scope. Structure transports demand block-diagonal matrices: entries mixing
parities would have to be nilpotent for the transported tensor to stay
graded-antisymmetric (a fermion square picked up by a mixed generator has
no cancelling partner over plain complex numbers), so parity-mixing input
raises InvalidTransformationError rather than silently leaving the
category. On the block-diagonal domain every parity sign collapses and the
transports are plain conjugation. The residual-style checks, by contrast,
are formal identities in the matrix entries and accept any matrix; their
sign factors follow the convention above with graded coefficient moves,
under which entry A_i^a carries parity |i|+|a|.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import LieSuperAlgebra
from .bialgebra import DualStructure, algebra_as_dual
from .errors import (
    DimensionMismatchError,
    InvalidTransformationError,
    SingularMatrixError,
)
from .linalg import mat_det, mat_inverse
from .poly import MultiPoly, as_poly
from .scalars import GScalar
from .supermatrix import SuperMatrix

__all__ = [
    "transport_lower",
    "transport_upper",
    "transform_dual",
    "dual_basis_matrix",
    "isomorphism_residual",
    "verify_isomorphism",
    "verify_automorphism",
    "verify_dual_isomorphism",
    "AutFamily",
    "family_automorphism_residual",
    "family_membership",
    "aut_membership",
    "in_family_st",
    "bialgebra_equivalent",
    "find_dual_witness",
]


def _vzero(v) -> bool:
    return v.is_zero()


def _rows_of(matrix):
    if isinstance(matrix, SuperMatrix):
        return [list(r) for r in matrix.rows]
    return [list(r) for r in matrix]


def _invert_rows(rows):
    try:
        return mat_inverse(rows)
    except SingularMatrixError:
        raise SingularMatrixError("transport matrix is singular") from None


def _vzero_value(v) -> bool:
    if isinstance(v, MultiPoly):
        return v.is_zero()
    if isinstance(v, GScalar):
        return v.is_zero()
    return v == 0


def _require_block_diagonal(dims, rows, what):
    for i in dims.indices():
        for j in dims.indices():
            if dims.parity(i) != dims.parity(j) and not _vzero_value(
                rows[i - 1][j - 1]
            ):
                raise InvalidTransformationError(
                    f"{what} requires a grading-preserving (block-diagonal) "
                    f"matrix; entry ({i},{j}) mixes parities"
                )


# -- transports -----------------------------------------------------------------


def transport_lower(g: LieSuperAlgebra, A) -> LieSuperAlgebra:
    """Structure constants of g rewritten in the basis X'_i = (-1)^{|a|} A_i^a X_a.

    A must be block-diagonal (see module docstring); there the graded
    transformation law is plain conjugation.
    """
    dims = g.dims
    rows = _rows_of(A)
    _require_block_diagonal(dims, rows, "transport_lower")
    inv = _invert_rows(rows)
    rng = list(dims.indices())
    entries = {}
    for i in rng:
        for j in rng:
            if i > j:
                continue
            for k in rng:
                acc = GScalar(0)
                for a in rng:
                    va = rows[i - 1][a - 1]
                    if _vzero_value(va):
                        continue
                    for b in rng:
                        vb = rows[j - 1][b - 1]
                        if _vzero_value(vb):
                            continue
                        for c in rng:
                            fv = g.f_get(a, b, c)
                            if _vzero_value(fv):
                                continue
                            w = inv[c - 1][k - 1]
                            if _vzero_value(w):
                                continue
                            acc = acc + va * vb * fv * w
                if not _vzero_value(acc):
                    entries[(i, j, k)] = acc
    return LieSuperAlgebra(
        f"{g.name}'",
        dims,
        entries,
        params=g.params,
        check_reality=g.check_reality,
    )


def transport_upper(d: DualStructure, C) -> DualStructure:
    """Cobracket components after the dual-side change X~'^i = (-1)^{|k|} C^i_k X~^k.

    C must be block-diagonal; there the graded law is plain conjugation.
    """
    dims = d.dims
    rows = _rows_of(C)
    _require_block_diagonal(dims, rows, "transport_upper")
    inv = _invert_rows(rows)
    rng = list(dims.indices())
    entries = {}
    for i in rng:
        for j in rng:
            if i > j:
                continue
            for n in rng:
                acc = GScalar(0)
                for k in rng:
                    vk = rows[i - 1][k - 1]
                    if _vzero_value(vk):
                        continue
                    for l in rng:
                        vl = rows[j - 1][l - 1]
                        if _vzero_value(vl):
                            continue
                        for m in rng:
                            fv = d.ft_get(k, l, m)
                            if _vzero_value(fv):
                                continue
                            w = inv[m - 1][n - 1]
                            if _vzero_value(w):
                                continue
                            acc = acc + vk * vl * fv * w
                if not _vzero_value(acc):
                    entries[(i, j, n)] = acc
    return DualStructure(
        dims,
        entries,
        name=f"{d.name}'",
        params=d.params,
        check_reality=d.check_reality,
    )


def dual_basis_matrix(A) -> list:
    """The matrix acting on the dual basis induced by A on the primal basis.

    With both transformation conventions carrying their parity factors, the
    pairing fixes C^j_a = (-1)^{|a|(|j|+1)} (A^{-1})_a^j; on block-diagonal
    input the sign is always +1 and this is the transpose inverse.
    """
    rows = _rows_of(A)
    n = len(rows)
    inv = _invert_rows(rows)
    return [[inv[j][i] for j in range(n)] for i in range(n)]


def transform_dual(d: DualStructure, A) -> DualStructure:
    """Rewrite a dual structure after the primal basis change by A."""
    return transport_upper(d, dual_basis_matrix(A))


# -- isomorphism checks -----------------------------------------------------------


def isomorphism_residual(src: LieSuperAlgebra, dst: LieSuperAlgebra, A) -> dict:
    """Residual of A carrying src onto dst through X'_i = (-1)^{|a|} A_i^a X_a.

    The primed generators are required to satisfy dst's bracket while the
    unprimed ones satisfy src's. A purely formal identity in the matrix
    entries (entry A_i^a moves with parity |i|+|a|), so any matrix is
    accepted. Keys (i, j, c); empty means isomorphism.
    """
    if src.dims != dst.dims:
        raise DimensionMismatchError("isomorphic algebras need equal dims")
    dims = src.dims
    rows = _rows_of(A)
    rng = list(dims.indices())
    out = {}
    for i in rng:
        for j in rng:
            pj = dims.parity(j)
            for c in rng:
                acc = GScalar(0)
                for a in rng:
                    va = rows[i - 1][a - 1]
                    if _vzero_value(va):
                        continue
                    pa = dims.parity(a)
                    for b in rng:
                        vb = rows[j - 1][b - 1]
                        if _vzero_value(vb):
                            continue
                        pb = dims.parity(b)
                        s = dims.sign_pow(pa + pb + pa * pj + pa * pb)
                        fv = src.f_get(a, b, c)
                        if _vzero_value(fv):
                            continue
                        acc = acc + s * va * vb * fv
                sc = dims.sign_pow(dims.parity(c))
                for k in rng:
                    fv = dst.f_get(i, j, k)
                    if _vzero_value(fv):
                        continue
                    acc = acc - sc * fv * rows[k - 1][c - 1]
                if not _vzero_value(acc):
                    out[(i, j, c)] = acc
    return out


def verify_isomorphism(src, dst, A: SuperMatrix) -> dict:
    """Full report: transformation-pattern check plus bracket residual."""
    problems = A.transformation_violations()
    residual = isomorphism_residual(src, dst, A)
    return {
        "matrix_ok": not problems,
        "matrix_problems": problems,
        "residual_nonzero_count": len(residual),
        "residual": residual,
        "ok": not problems and not residual,
    }


def verify_automorphism(g: LieSuperAlgebra, A: SuperMatrix) -> dict:
    return verify_isomorphism(g, g, A)


def verify_dual_isomorphism(src: DualStructure, dst: DualStructure, C) -> dict:
    """Does C carry the src cobracket onto dst? Componentwise exact."""
    moved = transport_upper(src, C)
    residual = {}
    keys = set(moved.ft) | set(dst.ft)
    for key in sorted(keys):
        delta = moved.ft.get(key, GScalar(0)) - dst.ft.get(key, GScalar(0))
        if not _vzero_value(delta):
            residual[key] = delta
    report = {
        "residual_nonzero_count": len(residual),
        "residual": residual,
        "ok": not residual,
    }
    if isinstance(C, SuperMatrix):
        problems = C.transformation_violations()
        report["matrix_ok"] = not problems
        report["matrix_problems"] = problems
        report["ok"] = report["ok"] and not problems
    return report


# -- parametric automorphism families ------------------------------------------------


class AutFamily:
    """A parametric family of automorphism matrices for one algebra.

    ``rows`` hold polynomials in ``param_names``; ``nonzero`` lists
    polynomial expressions that must not vanish for invertibility;
    ``extract`` maps each parameter to the (row, col) entry it can be
    read off from, used by membership testing. Entries whose polynomial
    is not directly a parameter are re-checked after extraction.
    """

    def __init__(self, algebra_id, dims, rows, param_names, nonzero, extract,
                 imaginary_params=()):
        self.algebra_id = algebra_id
        self.dims = dims
        self.rows = [[as_poly(v) for v in row] for row in rows]
        self.param_names = tuple(param_names)
        self.nonzero = [as_poly(v) for v in nonzero]
        self.extract = dict(extract)
        self.imaginary_params = tuple(imaginary_params)

    def instantiate(self, assignment) -> SuperMatrix:
        vals = {k: Fraction(v) for k, v in assignment.items()}
        rows = [[cell.eval(vals) for cell in row] for row in self.rows]
        return SuperMatrix(self.dims, rows)

    def constraints_ok(self, assignment) -> bool:
        vals = {k: Fraction(v) for k, v in assignment.items()}
        return all(not c.eval(vals).is_zero() for c in self.nonzero)


def family_automorphism_residual(g: LieSuperAlgebra, family: AutFamily) -> dict:
    """Symbolic residual of the family acting on g; empty means every member
    with invertible matrix is an automorphism."""
    return isomorphism_residual(g, g, family.rows)


def family_membership(family: AutFamily, M: SuperMatrix):
    """Decide membership of a concrete matrix in the family.

    Returns (True, assignment) or (False, reason). Parameters are read off
    the designated entries, then the full matrix and the invertibility
    constraints are re-checked.
    """
    if M.dims != family.dims:
        return False, "dimension mismatch"
    assignment = {}
    for pname, (r, c) in family.extract.items():
        v = M.entry(r, c)
        if pname in family.imaginary_params:
            if not v.is_pure_imaginary():
                return False, f"entry ({r},{c}) must be pure imaginary"
            assignment[pname] = v.im
        else:
            if not v.is_real():
                return False, f"entry ({r},{c}) must be real"
            assignment[pname] = v.re
    for i in range(1, family.dims.total + 1):
        for j in range(1, family.dims.total + 1):
            want = family.rows[i - 1][j - 1]
            got = M.entry(i, j)
            value = want.eval({k: Fraction(v) for k, v in assignment.items()})
            if value != got:
                return False, f"entry ({i},{j}) = {got}, family requires {value}"
    if not family.constraints_ok(assignment):
        return False, "invertibility constraint violated"
    return True, assignment


def in_family_st(family: AutFamily, Q: SuperMatrix):
    """Membership of Q in the supertranspose picture of the family."""
    q3 = Q.supertranspose().supertranspose().supertranspose()
    return family_membership(family, q3)


# the operation goes by this name on the automorphism side
aut_membership = family_membership


# -- bialgebra equivalence -------------------------------------------------------------


def bialgebra_equivalent(g: LieSuperAlgebra, d1: DualStructure, d2: DualStructure,
                         b1: SuperMatrix, b2: SuperMatrix,
                         family: AutFamily) -> dict:
    """Are (g, d1) and (g, d2) the same bialgebra up to a basis change of g?

    b1 and b2 are dual-side matrices carrying a common reference cobracket
    onto d1 and d2 respectively. Both are pulled back to the reference;
    the pair is equivalent iff the connecting matrix b2 b1^{-1} lies in
    the automorphism family of g read through the supertranspose.
    """
    back1 = transport_upper(d1, mat_inverse(_rows_of(b1)))
    back2 = transport_upper(d2, mat_inverse(_rows_of(b2)))
    same_reference = back1.ft == back2.ft
    q = b2 * b1.superinverse()
    member, detail = in_family_st(family, q)
    return {
        "same_reference": same_reference,
        "connector": q,
        "connector_in_family": member,
        "detail": detail,
        "equivalent": same_reference and member,
    }


# -- bounded witness search (heuristic) ---------------------------------------------------


_SEARCH_VALUES = tuple(
    GScalar(x)
    for x in (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2))
)


def find_dual_witness(src: DualStructure, dst_algebra: LieSuperAlgebra,
                      max_cells=5) -> SuperMatrix | None:
    """Heuristic bounded search for a witness matrix carrying src onto
    dst_algebra read as a dual.

    Scans block-diagonal matrices (pattern-valid ones are necessarily
    block-diagonal entrywise) over a small exact grid; returns the first
    hit or None. Exhausting the grid proves nothing.
    """
    dims = src.dims
    m, n = dims.m, dims.n
    cells = m * m + n * n
    if cells > max_cells:
        return None
    target = algebra_as_dual(dst_algebra)
    positions = [(i, j) for i in range(m) for j in range(m)]
    positions += [(m + i, m + j) for i in range(n) for j in range(n)]
    total = dims.total
    for combo in product(_SEARCH_VALUES, repeat=cells):
        rows = [[GScalar(0)] * total for _ in range(total)]
        for (r, c), v in zip(positions, combo):
            rows[r][c] = v
        if mat_det([list(r) for r in rows]).is_zero():
            continue
        cand = SuperMatrix(dims, rows)
        report = verify_dual_isomorphism(src, target, cand)
        if report["ok"]:
            return cand
    return None
