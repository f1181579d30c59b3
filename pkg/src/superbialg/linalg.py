"""Exact dense linear algebra.

Two layers: field routines over Q(i) scalars (used for matrix inversion,
determinants, concrete nullspaces) and fraction-free routines over
polynomial entries (used by the dual solver when a family parameter is
kept symbolic). Matrices are plain sequences of row sequences.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .poly import MultiPoly, PolyFrac, as_poly
from .scalars import GScalar

__all__ = [
    "identity_rows",
    "mat_mul",
    "mat_vec",
    "mat_det",
    "mat_inverse",
    "rref",
    "nullspace",
    "poly_echelon",
    "poly_nullspace",
]


def identity_rows(n: int):
    return [
        [GScalar(1) if i == j else GScalar(0) for j in range(n)] for i in range(n)
    ]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [
        [
            sum((a[i][t] * b[t][j] for t in range(k)), GScalar(0))
            for j in range(m)
        ]
        for i in range(n)
    ]


def mat_vec(a, v):
    return [sum((row[t] * v[t] for t in range(len(v))), GScalar(0)) for row in a]


def mat_det(rows) -> GScalar:
    """Determinant over Q(i) by Gaussian elimination. det([]) = 1."""
    n = len(rows)
    if n == 0:
        return GScalar(1)
    work = [list(r) for r in rows]
    det = GScalar(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            return GScalar(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = work[col][col].inverse()
        for r in range(col + 1, n):
            if work[r][col].is_zero():
                continue
            factor = work[r][col] * inv
            work[r] = [
                work[r][j] - factor * work[col][j] for j in range(n)
            ]
    return det


def mat_inverse(rows):
    n = len(rows)
    work = [list(r) + identity_rows(n)[i] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r == col or work[r][col].is_zero():
                continue
            factor = work[r][col]
            work[r] = [work[r][j] - factor * work[col][j] for j in range(2 * n)]
    return [row[n:] for row in work]


def rref(rows):
    """Reduced row echelon form over Q(i); returns (rref_rows, pivot_cols)."""
    if not rows:
        return [], []
    work = [list(r) for r in rows]
    n, m = len(work), len(work[0])
    pivots = []
    row = 0
    for col in range(m):
        pivot = next(
            (r for r in range(row, n) if not work[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = work[row][col].inverse()
        work[row] = [x * inv for x in work[row]]
        for r in range(n):
            if r == row or work[r][col].is_zero():
                continue
            factor = work[r][col]
            work[r] = [work[r][j] - factor * work[row][j] for j in range(m)]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return work, pivots


def nullspace(rows, width=None):
    """Kernel basis over Q(i); each vector normalised to leading entry 1."""
    if not rows:
        if width is None:
            return []
        basis = []
        for j in range(width):
            v = [GScalar(0)] * width
            v[j] = GScalar(1)
            basis.append(v)
        return basis
    m = width if width is not None else len(rows[0])
    red, pivots = rref(rows)
    free_cols = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [GScalar(0)] * m
        v[fc] = GScalar(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -red[prow][fc]
        basis.append(v)
    return basis


# -- polynomial-entry routines --------------------------------------------------


def _is_const(p: MultiPoly) -> bool:
    return p.is_constant()


def poly_echelon(rows):
    """Fraction-free (Bareiss-style) echelon form over polynomial entries.

    Returns (echelon_rows, pivots) with pivots a list of
    (row, col, pivot_poly). Pivot choice prefers constant entries so that
    symbolic pivots appear only when a column is genuinely parameter-led;
    their vanishing loci are then exactly the candidate rank-drop points.
    """
    work = [[as_poly(x) for x in row] for row in rows]
    if not work:
        return [], []
    n, m = len(work), len(work[0])
    pivots = []
    row = 0
    prev = MultiPoly.const(1)
    for col in range(m):
        cands = [r for r in range(row, n) if not work[r][col].is_zero()]
        if not cands:
            continue
        const_cands = [r for r in cands if _is_const(work[r][col])]
        pick = const_cands[0] if const_cands else cands[0]
        work[row], work[pick] = work[pick], work[row]
        pivot = work[row][col]
        for r in range(row + 1, n):
            newrow = []
            for j in range(m):
                val = pivot * work[r][j] - work[r][col] * work[row][j]
                if not prev.is_constant() or prev.constant_value() != GScalar(1):
                    q, rem = _exact_div(val, prev)
                    val = q if rem is None or rem.is_zero() else val
                newrow.append(val)
            work[r] = newrow
        pivots.append((row, col, pivot))
        prev = pivot
        row += 1
        if row == n:
            break
    return work, pivots


def _exact_div(num: MultiPoly, den: MultiPoly):
    """Try exact polynomial division; returns (quotient, remainder-or-None)."""
    if den.is_constant():
        c = den.constant_value()
        return num * MultiPoly.const(GScalar(1) / c), MultiPoly.const(0)
    frac = PolyFrac(num, den)
    if frac.den.is_constant():
        c = frac.den.constant_value()
        return frac.num * MultiPoly.const(GScalar(1) / c), MultiPoly.const(0)
    return num, None


def poly_nullspace(rows, width):
    """Symbolic kernel basis over polynomial entries.

    Returns (basis, pivot_polys): basis vectors have MultiPoly entries with
    denominators cleared; pivot_polys collects the distinct non-constant
    pivot polynomials whose roots are candidate rank-drop parameter values.
    """
    if not rows:
        rows = []
    ech, pivots = poly_echelon(rows)
    pivot_cols = [c for (_, c, _) in pivots]
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [PolyFrac(MultiPoly.const(0)) for _ in range(width)]
        x[fc] = PolyFrac(MultiPoly.const(1))
        for prow, pcol, ppoly in reversed(pivots):
            acc = PolyFrac(MultiPoly.const(0))
            for j in range(pcol + 1, width):
                if not ech[prow][j].is_zero() and not x[j].is_zero():
                    acc = acc + PolyFrac(ech[prow][j]) * x[j]
            x[pcol] = -acc / PolyFrac(ppoly)
        basis.append(_clear_denominators(x))
    pivot_polys = []
    seen = set()
    for _, _, ppoly in pivots:
        if ppoly.is_constant():
            continue
        _, prim = ppoly.primitive()
        key = str(prim)
        if key not in seen:
            seen.add(key)
            pivot_polys.append(prim)
    return basis, pivot_polys


def _clear_denominators(fracs):
    den = MultiPoly.const(1)
    for f in fracs:
        if f.den.is_constant():
            continue
        # multiply up by any missing factor (den / gcd); PolyFrac keeps the
        # reduction, so accumulate via the fraction (den_total / f.den)
        q = PolyFrac(den, f.den)
        if q.den.is_constant():
            continue
        den = den * q.den
    vec = []
    for f in fracs:
        prod = PolyFrac(f.num * den, f.den)
        if not prod.den.is_constant():
            raise ArithmeticError("denominator clearing failed")
        vec.append(prod.num * MultiPoly.const(
            GScalar(1) / prod.den.constant_value()
        ))
    return _normalize_vector(vec)


def _normalize_vector(vec):
    lead = next((v for v in vec if not v.is_zero()), None)
    if lead is None:
        return vec
    if lead.is_constant():
        c = lead.constant_value()
        return [v * MultiPoly.const(GScalar(1) / c) for v in vec]
    # polynomial leading entry: content-normalise across the whole vector
    contents = [v.primitive()[0] for v in vec if not v.is_zero()]
    from fractions import Fraction
    from math import gcd as _g

    nums, dens = [], []
    for c in contents:
        part = c.re if c.re != 0 else c.im
        nums.append(abs(part.numerator))
        dens.append(part.denominator)
    g = 0
    for x in nums:
        g = _g(g, x)
    l = 1
    for x in dens:
        l = l * x // _g(l, x)
    scale = GScalar(Fraction(g, l))
    clead, _ = lead.primitive()
    if (clead.re if clead.re != 0 else clead.im) < 0:
        scale = -scale
    return [v * MultiPoly.const(GScalar(1) / scale) for v in vec]
