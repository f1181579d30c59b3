"""Lie superalgebras: storage, validation, residuals, adjoint matrices.

Structure constants are stored sparsely with BOTH index orderings
materialized at construction (the flip picks up the super-antisymmetry
sign), so no lookup ever re-derives a sign. Entries are exact scalars or
polynomials in declared rational parameters.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatchError, ValidationError
from .poly import MultiPoly
from .scalars import GScalar

__all__ = [
    "LieSuperAlgebra",
    "ParamSpec",
    "Violation",
    "materialize_tensor",
    "tensor_violations",
    "value_is_real",
    "value_is_imaginary",
]


def _vzero(value) -> bool:
    if isinstance(value, MultiPoly):
        return value.is_zero()
    return value.is_zero()


def value_is_real(value) -> bool:
    if isinstance(value, MultiPoly):
        return all(c.is_real() for c in value.terms.values())
    return value.is_real()


def value_is_imaginary(value) -> bool:
    if isinstance(value, MultiPoly):
        return all(c.is_pure_imaginary() for c in value.terms.values())
    return value.is_pure_imaginary()


class ParamSpec:
    """A named rational parameter with an admissible range.

    Bounds of None mean unbounded on that side. ``excluded`` lists single
    points removed from the interval (e.g. 0).
    """

    __slots__ = ("name", "lo", "hi", "lo_open", "hi_open", "excluded")

    def __init__(self, name, lo=None, hi=None, lo_open=True, hi_open=True, excluded=()):
        self.name = name
        self.lo = None if lo is None else Fraction(lo)
        self.hi = None if hi is None else Fraction(hi)
        self.lo_open = lo_open
        self.hi_open = hi_open
        self.excluded = tuple(Fraction(x) for x in excluded)

    def contains(self, value) -> bool:
        value = Fraction(value)
        if value in self.excluded:
            return False
        if self.lo is not None:
            if value < self.lo or (self.lo_open and value == self.lo):
                return False
        if self.hi is not None:
            if value > self.hi or (self.hi_open and value == self.hi):
                return False
        return True

    def range_str(self) -> str:
        if self.lo is None and self.hi is None:
            base = "R"
        else:
            lo = "-inf" if self.lo is None else str(self.lo)
            hi = "inf" if self.hi is None else str(self.hi)
            base = ("(" if self.lo_open or self.lo is None else "[") + f"{lo},{hi}"
            base += ")" if self.hi_open or self.hi is None else "]"
        if self.excluded:
            base += " - {" + ",".join(str(x) for x in self.excluded) + "}"
        return base

    def __repr__(self):
        return f"ParamSpec({self.name} in {self.range_str()})"

    def __eq__(self, other):
        return isinstance(other, ParamSpec) and (
            self.name,
            self.lo,
            self.hi,
            self.lo_open,
            self.hi_open,
            self.excluded,
        ) == (other.name, other.lo, other.hi, other.lo_open, other.hi_open, other.excluded)


class Violation:
    """One violated structural invariant, with the offending index triple."""

    __slots__ = ("kind", "index", "message")

    def __init__(self, kind, index, message):
        self.kind = kind
        self.index = index
        self.message = message

    def __str__(self):
        return f"{self.kind} at {self.index}: {self.message}"

    __repr__ = __str__


def materialize_tensor(dims: GradedDims, entries) -> dict:
    """Fill in both orderings of a graded antisymmetric 3-tensor.

    ``entries`` maps (i, j, k) to a scalar/poly with any orientation of the
    symmetric pair; the flipped component is generated with the sign
    -(-1)^{|i||j|}. Conflicting duplicates raise ValidationError.
    """
    full = {}

    def put(i, j, k, value):
        if (i, j, k) in full:
            if full[(i, j, k)] != value:
                raise ValidationError(
                    f"conflicting values for component ({i},{j},{k})"
                )
            return
        full[(i, j, k)] = value

    for (i, j, k), value in entries.items():
        dims.check_index(i)
        dims.check_index(j)
        dims.check_index(k)
        value = value if isinstance(value, MultiPoly) else GScalar.coerce(value)
        if _vzero(value):
            continue
        put(i, j, k, value)
        flip = -(dims.parity_sign(i, j)) * value
        if i == j:
            if full[(i, j, k)] != flip:
                raise ValidationError(
                    f"component ({i},{i},{k}) must vanish: "
                    "equal indices with a symmetric sign rule"
                )
        else:
            put(j, i, k, flip)
    return full


def tensor_violations(dims, tensor, check_reality=True, upper_pair=False) -> list:
    """Invariant report for a materialized tensor.

    ``upper_pair`` only changes wording: the same antisymmetry/grading/
    reality rules govern f^k_{ij} and the dual's f~^{ij}_k.
    """
    out = []
    label = "f~" if upper_pair else "f"
    for (i, j, k), value in sorted(tensor.items()):
        if _vzero(value):
            continue
        if (dims.parity(i) + dims.parity(j) - dims.parity(k)) % 2:
            out.append(
                Violation(
                    "grading",
                    (i, j, k),
                    f"{label}({i},{j},{k}) nonzero but parities do not match",
                )
            )
        pair = tensor.get((j, i, k), GScalar(0))
        expected = -(dims.parity_sign(i, j)) * value
        if pair != expected:
            out.append(
                Violation(
                    "antisymmetry",
                    (i, j, k),
                    f"{label}({j},{i},{k}) != -(-1)^(|{i}||{j}|) {label}({i},{j},{k})",
                )
            )
        if check_reality:
            ff_to_boson = dims.parity(i) == 1 == dims.parity(j) and dims.parity(k) == 0
            if ff_to_boson and not value_is_imaginary(value):
                out.append(
                    Violation(
                        "reality",
                        (i, j, k),
                        f"{label}({i},{j},{k}) must be pure imaginary",
                    )
                )
            elif not ff_to_boson and not value_is_real(value):
                out.append(
                    Violation(
                        "reality",
                        (i, j, k),
                        f"{label}({i},{j},{k}) must be real",
                    )
                )
    return out


class LieSuperAlgebra:
    """A finite-dimensional Lie superalgebra over exact scalars.

    ``check_reality=False`` marks a nonstandard basis (Drinfel'd doubles mix
    real and imaginary coefficients by construction); every other invariant
    still applies.
    """

    def __init__(self, name, dims, entries, params=None, check_reality=True):
        self.name = name
        self.dims = dims
        self.f = materialize_tensor(dims, entries)
        self.params = dict(params or {})
        self.check_reality = check_reality
        for spec in self.params.values():
            if not isinstance(spec, ParamSpec):
                raise TypeError("params must map names to ParamSpec")

    # -- basics ---------------------------------------------------------------

    @property
    def parametric(self) -> bool:
        return bool(self.params)

    def f_get(self, i, j, k):
        """Component with lower pair (i, j) and upper index k."""
        return self.f.get((i, j, k), GScalar(0))

    def parity(self, i) -> int:
        return self.dims.parity(i)

    def subs_params(self, assignment) -> "LieSuperAlgebra":
        """Specialize named parameters to exact rationals (checked in range)."""
        for pname, value in assignment.items():
            spec = self.params.get(pname)
            if spec is None:
                raise KeyError(f"unknown parameter {pname!r} for {self.name}")
            if not spec.contains(value):
                raise ValidationError(
                    f"{pname} = {value} outside admissible range {spec.range_str()}"
                )
        entries = {}
        for key, value in self.f.items():
            if isinstance(value, MultiPoly):
                value = value.subs(assignment)
                if value.is_constant():
                    value = value.constant_value()
            entries[key] = value
        remaining = {
            name: spec for name, spec in self.params.items() if name not in assignment
        }
        suffix = ",".join(f"{k}={assignment[k]}" for k in sorted(assignment))
        return LieSuperAlgebra(
            f"{self.name}[{suffix}]",
            self.dims,
            entries,
            params=remaining,
            check_reality=self.check_reality,
        )

    # -- invariants ------------------------------------------------------------

    def validate_structure(self, check_reality=None) -> list:
        if check_reality is None:
            check_reality = self.check_reality
        return tensor_violations(self.dims, self.f, check_reality=check_reality)

    def super_jacobi_residual(self) -> dict:
        """Nonzero residual components of the graded Jacobi identity.

        Keys are (i, j, k, m); an empty dict certifies the identity,
        symbolically when entries carry parameters.
        """
        # sparse evaluation: every term is a product of two tensor entries
        # sharing the summation index, so pair the nonzero entries directly
        dims = self.dims
        par = dims.parity
        sp = dims.sign_pow
        by_upper = {}
        for (d, e, g), v in self.f.items():
            by_upper.setdefault(g, []).append((d, e, v))
        acc = {}

        def add(key, value):
            if key in acc:
                acc[key] = acc[key] + value
            else:
                acc[key] = value

        for (a, b, c), v1 in self.f.items():
            for d, e, v2 in by_upper.get(b, ()):
                prod = v1 * v2
                # cyclic-sum terms: (i,l,m)(j,k,l), (j,l,m)(k,i,l), (k,l,m)(i,j,l)
                add((a, d, e, c), prod)
                add((e, a, d, c), sp(par(e) * (par(a) + par(d))) * prod)
                add((d, e, a, c), sp(par(a) * (par(d) + par(e))) * prod)
        return {key: value for key, value in acc.items() if not _vzero(value)}

    def bracket(self, u, v):
        """[u, v]^k = sum f^k_{ij} u^i v^j (componentwise bilinear extension)."""
        n = self.dims.total
        if len(u) != n or len(v) != n:
            raise DimensionMismatchError("coefficient vectors must have length m+n")
        out = []
        for k in self.dims.indices():
            acc = GScalar(0)
            for i in self.dims.indices():
                if _vzero_at(u, i):
                    continue
                for j in self.dims.indices():
                    if _vzero_at(v, j):
                        continue
                    acc = acc + self.f_get(i, j, k) * u[i - 1] * v[j - 1]
            out.append(acc)
        return out

    def adjoint_rep(self):
        """Matrices Y^i with (Y^i)[j][k] = -f^i_{jk} (row j, column k)."""
        n = self.dims.total
        return [
            [[-self.f_get(j, k, i) for k in self.dims.indices()]
             for j in self.dims.indices()]
            for i in range(1, n + 1)
        ]

    def tensor_from_adjoint(self, matrices):
        """Rebuild the structure tensor from adjoint matrices (transcription check)."""
        entries = {}
        for i in self.dims.indices():
            for j in self.dims.indices():
                for k in self.dims.indices():
                    v = -matrices[i - 1][j - 1][k - 1]
                    v = v if isinstance(v, MultiPoly) else GScalar.coerce(v)
                    if not _vzero(v):
                        entries[(j, k, i)] = v
        return entries

    # -- misc ---------------------------------------------------------------------

    def nonzero_components(self):
        return {k: v for k, v in sorted(self.f.items())}

    def __repr__(self):
        return f"LieSuperAlgebra({self.name}, dims={self.dims})"


def _vzero_at(vec, i) -> bool:
    v = vec[i - 1]
    if isinstance(v, MultiPoly):
        return v.is_zero()
    if isinstance(v, GScalar):
        return v.is_zero()
    return v == 0
