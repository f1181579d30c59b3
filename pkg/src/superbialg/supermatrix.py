"""Even supermatrices over exact scalars: blocks, supertranspose, sdet.

Block layout for dims (m, n):

    [ A  C ]   A: m x m   C: m x n
    [ D  B ]   D: n x m   B: n x n

The supertranspose maps this to [[A^t, D^t], [-C^t, B^t]] and has period
four. The superdeterminant is only defined when at least one diagonal
block is invertible; the two classical closed forms agree exactly when
the relevant off-diagonal products vanish, and the primary form (the one
using B^-1) is preferred whenever det B != 0.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatchError,
    ParseError,
    SdetUndefinedError,
    SingularMatrixError,
)
from .linalg import mat_det, mat_inverse, mat_mul
from .scalars import GradedDims, GScalar, parse_scalar

__all__ = [
    "SuperMatrix",
    "parse_matrix",
    "format_matrix",
]


def _tidy(rows):
    return tuple(tuple(GScalar.coerce(x) for x in row) for row in rows)


class SuperMatrix:
    """Square matrix graded by GradedDims, entries exact complex rationals."""

    __slots__ = ("dims", "rows")

    def __init__(self, dims: GradedDims, rows):
        n = dims.total
        rows = _tidy(rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatchError(
                f"expected a {n}x{n} matrix for dims {dims}"
            )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("SuperMatrix is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def identity(dims: GradedDims) -> "SuperMatrix":
        n = dims.total
        return SuperMatrix(
            dims,
            [[GScalar(1) if i == j else GScalar(0) for j in range(n)] for i in range(n)],
        )

    @staticmethod
    def from_blocks(dims: GradedDims, a, c, d, b) -> "SuperMatrix":
        m, n = dims.m, dims.n
        rows = []
        for i in range(m):
            rows.append(list(a[i]) + list(c[i] if n else []))
        for i in range(n):
            rows.append(list(d[i] if m else []) + list(b[i]))
        return SuperMatrix(dims, rows)

    # -- block views ------------------------------------------------------------

    def block_a(self):
        m = self.dims.m
        return [list(r[:m]) for r in self.rows[:m]]

    def block_c(self):
        m = self.dims.m
        return [list(r[m:]) for r in self.rows[:m]]

    def block_d(self):
        m = self.dims.m
        return [list(r[:m]) for r in self.rows[m:]]

    def block_b(self):
        m = self.dims.m
        return [list(r[m:]) for r in self.rows[m:]]

    # -- arithmetic ------------------------------------------------------------

    def _require_same(self, other):
        if not isinstance(other, SuperMatrix) or other.dims != self.dims:
            raise DimensionMismatchError("supermatrix dims mismatch")

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            self._require_same(other)
            return SuperMatrix(self.dims, mat_mul(self.rows, other.rows))
        return NotImplemented

    def __add__(self, other):
        self._require_same(other)
        return SuperMatrix(
            self.dims,
            [
                [x + y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other):
        self._require_same(other)
        return SuperMatrix(
            self.dims,
            [
                [x - y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self):
        return SuperMatrix(self.dims, [[-x for x in r] for r in self.rows])

    def scale(self, c) -> "SuperMatrix":
        c = GScalar.coerce(c)
        return SuperMatrix(self.dims, [[c * x for x in r] for r in self.rows])

    def apply(self, vector):
        """Matrix-vector product on plain lists of scalars."""
        n = self.dims.total
        if len(vector) != n:
            raise DimensionMismatchError("vector length mismatch")
        return [
            sum((r[j] * vector[j] for j in range(n)), GScalar(0)) for r in self.rows
        ]

    def entry(self, i, j) -> GScalar:
        """1-based access, matching index conventions in the math modules."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return (
            isinstance(other, SuperMatrix)
            and self.dims == other.dims
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.dims, self.rows))

    def is_identity(self) -> bool:
        return self == SuperMatrix.identity(self.dims)

    # -- graded operations -------------------------------------------------------

    def supertranspose(self) -> "SuperMatrix":
        dims = self.dims
        n = dims.total
        out = [[GScalar(0)] * n for _ in range(n)]
        for i in range(1, n + 1):
            pi = dims.parity(i)
            for j in range(1, n + 1):
                sign = dims.sign_pow(pi * (pi + dims.parity(j)))
                out[i - 1][j - 1] = sign * self.rows[j - 1][i - 1]
        return SuperMatrix(dims, out)

    def sdet(self) -> GScalar:
        """Superdeterminant; raises SdetUndefinedError if neither diagonal
        block is invertible. Prefers the form built on B^-1."""
        m, n = self.dims.m, self.dims.n
        a, b = self.block_a(), self.block_b()
        c, d = self.block_c(), self.block_d()
        if n == 0:
            return mat_det(a)
        if m == 0:
            det_b = mat_det(b)
            if det_b.is_zero():
                raise SdetUndefinedError("fermion-fermion block is singular")
            return det_b.inverse()
        det_b = mat_det(b)
        if not det_b.is_zero():
            schur = _mat_sub(a, mat_mul(mat_mul(c, mat_inverse(b)), d))
            return mat_det(schur) * det_b.inverse()
        det_a = mat_det(a)
        if not det_a.is_zero():
            schur = _mat_sub(b, mat_mul(mat_mul(d, mat_inverse(a)), c))
            det_schur = mat_det(schur)
            if det_schur.is_zero():
                raise SdetUndefinedError(
                    "both closed forms degenerate for this matrix"
                )
            return det_a * det_schur.inverse()
        raise SdetUndefinedError("both diagonal blocks are singular")

    def superinverse(self) -> "SuperMatrix":
        """Inverse as an ordinary matrix (grading is preserved automatically)."""
        try:
            inv = mat_inverse([list(r) for r in self.rows])
        except SingularMatrixError:
            raise SingularMatrixError("supermatrix is singular") from None
        return SuperMatrix(self.dims, inv)

    # -- admissibility patterns ---------------------------------------------------

    def transformation_violations(self) -> list:
        """Why this fails to be a basis-change matrix, as strings; [] if valid.

        Pattern: boson-boson, fermion-fermion, boson-fermion blocks real;
        fermion-boson block pure imaginary; superdeterminant defined and
        nonzero.
        """
        problems = []
        m = self.dims.m
        n = self.dims.total
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                v = self.rows[i - 1][j - 1]
                if self.dims.parity(i) == 1 and self.dims.parity(j) == 0:
                    if not v.is_pure_imaginary():
                        problems.append(
                            f"entry ({i},{j}) must be pure imaginary, got {v}"
                        )
                elif not v.is_real():
                    problems.append(f"entry ({i},{j}) must be real, got {v}")
        try:
            if self.sdet().is_zero():
                problems.append("superdeterminant is zero")
        except SdetUndefinedError as exc:
            problems.append(f"superdeterminant undefined: {exc}")
        return problems

    def is_transformation_matrix(self) -> bool:
        return not self.transformation_violations()

    def is_witness_matrix(self) -> bool:
        """Valid basis change whose supertranspose is also one (forces the
        off-diagonal blocks to vanish entrywise whenever both patterns bite)."""
        if not self.is_transformation_matrix():
            return False
        return self.supertranspose().is_transformation_matrix()

    # -- text form ---------------------------------------------------------------

    def __str__(self):
        return format_matrix(self.rows)

    def __repr__(self):
        return f"SuperMatrix({self.dims}, {format_matrix(self.rows)})"


def _mat_sub(a, b):
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def format_matrix(rows) -> str:
    """Canonical literal: rows joined by '; ', entries by ','."""
    return "[" + "; ".join(",".join(str(x) for x in row) for row in rows) + "]"


def parse_matrix(text: str, dims: GradedDims | None = None):
    """Parse a matrix literal like ``[1,0,0; 0,2,0; 0,3i,2]``.

    Returns a SuperMatrix when dims is given (shape-checked), else the raw
    row lists of GScalar.
    """
    src = text.strip()
    if src.startswith("[") and src.endswith("]"):
        src = src[1:-1]
    rows = []
    for row_text in src.split(";"):
        row = []
        for cell in row_text.split(","):
            cell = cell.strip()
            if not cell:
                raise ParseError(f"empty matrix entry in {text!r}")
            row.append(parse_scalar(cell))
        rows.append(row)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("matrix rows have unequal lengths")
    if dims is None:
        return rows
    n = dims.total
    if len(rows) != n or len(rows[0]) != n:
        raise ParseError(
            f"matrix is {len(rows)}x{len(rows[0])}, expected {n}x{n}"
        )
    return SuperMatrix(dims, rows)
