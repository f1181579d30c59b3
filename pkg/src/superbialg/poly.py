"""Exact multivariate polynomials over Gaussian rationals.

These carry the named free parameters (p, alpha, beta, ...) through the
solver and the automorphism families. Variables are kept sorted and unused
ones trimmed, so equality is structural. Term order is graded lexicographic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import GScalar

__all__ = ["MultiPoly", "PolyFrac", "as_poly", "poly_eval"]


def _coerce_scalar(x) -> GScalar:
    if isinstance(x, GScalar):
        return x
    return GScalar.coerce(x)


class MultiPoly:
    """Polynomial with GScalar coefficients in named commuting variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        # normalize: sort variables, realign exponents, drop zero coefficients
        variables = tuple(variables)
        order = sorted(range(len(variables)), key=lambda t: variables[t])
        svars = tuple(variables[t] for t in order)
        clean = {}
        for exps, coeff in terms.items():
            coeff = _coerce_scalar(coeff)
            if coeff.is_zero():
                continue
            key = tuple(exps[t] for t in order)
            prev = clean.get(key)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = coeff
        # trim variables that never appear
        used = [
            t for t in range(len(svars)) if any(e[t] for e in clean)
        ]
        if len(used) != len(svars):
            svars = tuple(svars[t] for t in used)
            clean = {tuple(e[t] for t in used): c for e, c in clean.items()}
        object.__setattr__(self, "variables", svars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(value) -> "MultiPoly":
        value = _coerce_scalar(value)
        return MultiPoly((), {(): value} if not value.is_zero() else {})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly((name,), {(1,): GScalar(1)})

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> GScalar:
        if not self.terms:
            return GScalar(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        t = self.variables.index(name)
        return max((e[t] for e in self.terms), default=0)

    def sorted_terms(self):
        """Graded-lex order, highest first (ties broken lexicographically)."""
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def leading_coeff(self) -> GScalar:
        if not self.terms:
            return GScalar(0)
        return self.sorted_terms()[0][1]

    # -- alignment helper ------------------------------------------------------

    @staticmethod
    def _aligned(a: "MultiPoly", b: "MultiPoly"):
        if a.variables == b.variables:
            return a.variables, a.terms, b.terms
        union = tuple(sorted(set(a.variables) | set(b.variables)))
        amap = [union.index(v) for v in a.variables]
        bmap = [union.index(v) for v in b.variables]
        zero = (0,) * len(union)

        def lift(terms, vmap):
            out = {}
            for exps, c in terms.items():
                key = list(zero)
                for t, e in zip(vmap, exps):
                    key[t] = e
                out[tuple(key)] = c
            return out

        return union, lift(a.terms, amap), lift(b.terms, bmap)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        union, ta, tb = MultiPoly._aligned(self, other)
        out = dict(ta)
        for exps, c in tb.items():
            out[exps] = out.get(exps, GScalar(0)) + c
        return MultiPoly(union, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        union, ta, tb = MultiPoly._aligned(self, other)
        out = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, GScalar(0)) + ca * cb
        return MultiPoly(union, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation --------------------------------------------------------------

    def subs(self, assignment) -> "MultiPoly":
        """Substitute some variables by exact scalars; others stay symbolic."""
        assignment = {k: _coerce_scalar(v) for k, v in assignment.items()}
        keep = [t for t, v in enumerate(self.variables) if v not in assignment]
        out = {}
        for exps, coeff in self.terms.items():
            for t, v in enumerate(self.variables):
                if v in assignment:
                    val = assignment[v]
                    for _ in range(exps[t]):
                        coeff = coeff * val
            key = tuple(exps[t] for t in keep)
            out[key] = out.get(key, GScalar(0)) + coeff
        return MultiPoly(tuple(self.variables[t] for t in keep), out)

    def eval(self, assignment) -> GScalar:
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise ValueError(f"no value given for {', '.join(missing)}")
        return self.subs(assignment).constant_value()

    # -- normal forms -----------------------------------------------------------

    def monomial_content(self):
        """Split off gcd of the monomials: returns ({var: exp}, reduced poly)."""
        if not self.terms:
            return {}, self
        mins = [min(e[t] for e in self.terms) for t in range(len(self.variables))]
        if not any(mins):
            return {}, self
        shifted = {
            tuple(e[t] - mins[t] for t in range(len(e))): c
            for e, c in self.terms.items()
        }
        mono = {v: m for v, m in zip(self.variables, mins) if m}
        return mono, MultiPoly(self.variables, shifted)

    def primitive(self):
        """Return (content, primitive) with content a GScalar.

        The primitive part has integer-normalised coefficients: denominators
        cleared, numerators coprime, and the graded-lex-leading coefficient
        positive (its real part if nonzero, else its imaginary part).
        """
        if not self.terms:
            return GScalar(0), self
        nums = []
        dens = []
        for c in self.terms.values():
            for part in (c.re, c.im):
                if part != 0:
                    nums.append(abs(part.numerator))
                    dens.append(part.denominator)
        g = 0
        for x in nums:
            g = gcd(g, x)
        l = 1
        for x in dens:
            l = l * x // gcd(l, x)
        content = Fraction(g, l)
        lead = self.leading_coeff()
        lead_key = lead.re if lead.re != 0 else lead.im
        if lead_key < 0:
            content = -content
        cs = GScalar(content)
        prim = MultiPoly(
            self.variables, {e: c / cs for e, c in self.terms.items()}
        )
        return cs, prim

    def rational_roots(self):
        """All rational roots of a univariate polynomial, sorted."""
        if self.is_zero() or self.is_constant():
            return []
        if len(self.variables) != 1:
            raise ValueError("rational_roots needs a univariate polynomial")
        _, prim = self.primitive()
        coeffs = {}
        for (e,), c in prim.terms.items():
            if not c.is_real():
                raise ValueError("rational_roots needs real coefficients")
            coeffs[e] = c.re
        deg = max(coeffs)
        low = min(coeffs)
        roots = set()
        if low > 0:
            roots.add(Fraction(0))
        a0 = int(coeffs[low].numerator) if low in coeffs else 0
        an = int(coeffs[deg].numerator)
        if a0 == 0:
            return sorted(roots)

        def divisors(x):
            x = abs(x)
            out = set()
            d = 1
            while d * d <= x:
                if x % d == 0:
                    out.add(d)
                    out.add(x // d)
                d += 1
            return out

        var = self.variables[0]
        for p in divisors(a0):
            for q in divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if self.eval({var: cand}).is_zero():
                        roots.add(cand)
        return sorted(roots)

    # -- printing ------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                frag = str(coeff)
            elif coeff.is_rational_one():
                frag = "*".join(factors)
            elif coeff == GScalar(-1):
                frag = "-" + "*".join(factors)
            else:
                cs = str(coeff)
                if ("+" in cs[1:]) or ("-" in cs[1:]):
                    cs = f"({cs})"
                frag = cs + "*" + "*".join(factors)
            parts.append(frag)
        out = parts[0]
        for frag in parts[1:]:
            out += frag if frag.startswith("-") else "+" + frag
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def as_poly(x):
    """Coerce scalars and numbers to MultiPoly; NotImplemented otherwise."""
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (GScalar, int, Fraction)):
        return MultiPoly.const(x)
    return NotImplemented


def poly_eval(value, assignment) -> GScalar:
    """Evaluate a GScalar-or-MultiPoly under a parameter assignment."""
    if isinstance(value, MultiPoly):
        return value.eval(assignment)
    return _coerce_scalar(value)


def _uni_coeffs(p: MultiPoly, var: str) -> dict:
    """Degree -> coefficient map for a polynomial in at most the one variable."""
    out = {}
    for exps, c in p.terms.items():
        if not p.variables:
            out[0] = c
        elif p.variables == (var,):
            out[exps[0]] = c
        else:
            raise ValueError(f"{p} is not univariate in {var}")
    return out


def _from_uni(coeffs: dict, var: str) -> MultiPoly:
    return MultiPoly((var,), {(d,): c for d, c in coeffs.items()})


def _poly_divmod_uni(a: MultiPoly, b: MultiPoly, var: str):
    """Univariate division with remainder over the field Q(i)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ca, cb = _uni_coeffs(a, var), _uni_coeffs(b, var)
    db = max(cb)
    lead_b = cb[db]
    q = {}
    r = dict(ca)
    while r and max(r) >= db:
        dr = max(r)
        factor = r[dr] / lead_b
        q[dr - db] = factor
        for d, c in cb.items():
            nd = d + dr - db
            val = r.get(nd, GScalar(0)) - factor * c
            if val.is_zero():
                r.pop(nd, None)
            else:
                r[nd] = val
    return _from_uni(q, var), _from_uni(r, var)


def _gcd_uni(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    while not b.is_zero():
        _, r = _poly_divmod_uni(a, b, var)
        a, b = b, r
    if a.is_zero():
        return a
    _, prim = a.primitive()
    return prim


class PolyFrac:
    """A ratio of MultiPolys; just enough rational-function arithmetic for
    back-substitution in the symbolic nullspace computation."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = as_poly(num)
        den = MultiPoly.const(1) if den is None else as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("PolyFrac with zero denominator")
        num, den = PolyFrac._reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PolyFrac is immutable")

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return num, MultiPoly.const(1)
        if den.is_constant():
            c = den.constant_value()
            return MultiPoly(
                num.variables, {e: v / c for e, v in num.terms.items()}
            ), MultiPoly.const(1)
        allvars = set(num.variables) | set(den.variables)
        if len(allvars) == 1:
            var = next(iter(allvars))
            g = _gcd_uni(num, den, var)
            if not g.is_constant():
                num, _ = _poly_divmod_uni(num, g, var)
                den, _ = _poly_divmod_uni(den, g, var)
        # normalize: primitive denominator
        cd, dprim = den.primitive()
        num = num * MultiPoly.const(GScalar(1) / cd)
        return num, dprim

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyFrac(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return PolyFrac(-self.num, self.den)

    def __mul__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero PolyFrac")
        return PolyFrac(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __str__(self):
        if self.den == MultiPoly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _as_frac(x):
    if isinstance(x, PolyFrac):
        return x
    p = as_poly(x)
    if p is NotImplemented:
        return NotImplemented
    return PolyFrac(p)
