"""Exact Gaussian-rational scalars and grading/parity bookkeeping.

Every quantity in this package lives in Q(i): residual checks demand results
that are exactly zero, which rules out floating point from the start.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from .errors import DivisionByZeroError, ScalarParseError

__all__ = ["GScalar", "GradedDims", "ZERO", "ONE", "I", "parse_scalar"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class GScalar:
    """An exact Gaussian rational ``re + im*i``.

    Immutable. Fractions keep themselves in lowest terms with positive
    denominators, so no extra normalization pass is needed.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GScalar is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def coerce(x) -> "GScalar":
        if isinstance(x, GScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return GScalar(x)
        raise TypeError(f"cannot coerce {x!r} to GScalar")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_pure_imaginary(self) -> bool:
        return self.re == 0

    def is_rational_one(self) -> bool:
        return self.im == 0 and self.re == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GScalar(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        return GScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GScalar(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        return GScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GScalar(other).__sub__(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GScalar(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        return GScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GScalar(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise DivisionByZeroError("division by zero scalar")
        return GScalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GScalar(other).__truediv__(self)
        return NotImplemented

    def __neg__(self):
        return GScalar(-self.re, -self.im)

    def conj(self) -> "GScalar":
        return GScalar(self.re, -self.im)

    def inverse(self) -> "GScalar":
        return GScalar(1) / self

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GScalar(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.im == 0:
            return str(self.re)
        imag = _format_imag(self.im)
        if self.re == 0:
            return imag
        if self.im > 0:
            return f"{self.re}+{imag}"
        return f"{self.re}{imag}"

    def __repr__(self):
        return f"GScalar({self})"


def _format_imag(im: Fraction) -> str:
    """Render an imaginary part: i, -i, 3i/2, -i/3, 2i."""
    sign = "-" if im < 0 else ""
    num, den = abs(im.numerator), im.denominator
    head = "i" if num == 1 else f"{num}i"
    tail = "" if den == 1 else f"/{den}"
    return f"{sign}{head}{tail}"


ZERO = GScalar(0)
ONE = GScalar(1)
I = GScalar(0, 1)


_IMAG_RE = _re.compile(r"^([+-]?)(\d*)i(?:/(\d+))?$")
_REAL_RE = _re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_simple(text: str) -> GScalar:
    """One signed real or imaginary literal, no interior +/-."""
    if _REAL_RE.match(text):
        return GScalar(Fraction(text))
    m = _IMAG_RE.match(text)
    if m:
        sign, num, den = m.groups()
        value = Fraction(int(num) if num else 1, int(den) if den else 1)
        if sign == "-":
            value = -value
        return GScalar(0, value)
    raise ScalarParseError(f"malformed scalar literal: {text!r}")


def parse_scalar(text: str) -> GScalar:
    """Parse the canonical scalar syntax.

    Accepted forms: ``a``, ``a/b``, ``i``, ``-i``, ``3i/2``, ``1+2i``,
    ``1/2-i/3`` (a real part optionally followed by a signed imaginary part).
    Whitespace is not significant.
    """
    s = text.replace(" ", "")
    if not s:
        raise ScalarParseError("empty scalar literal")
    # Split on the last top-level sign that is not the leading one.
    for pos in range(len(s) - 1, 0, -1):
        if s[pos] in "+-" and s[pos - 1] not in "+-/*":
            left, right = s[:pos], s[pos:]
            if "i" in right and "i" not in left:
                return _parse_simple(left) + _parse_simple(right)
            break
    return _parse_simple(s)


class GradedDims:
    """Graded dimensions: ``m`` bosonic then ``n`` fermionic generators.

    Indices are 1-based; generator i is bosonic iff i <= m. The parity
    |i| in {0, 1} drives every sign in the bracket identities.
    """

    __slots__ = ("m", "n")

    def __init__(self, m: int, n: int):
        if m < 0 or n < 0 or m + n < 1:
            raise ValueError("need at least one generator and no negative counts")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("GradedDims is immutable")

    @property
    def total(self) -> int:
        return self.m + self.n

    def check_index(self, i: int):
        if not 1 <= i <= self.total:
            raise IndexError(f"generator index {i} out of range 1..{self.total}")

    def parity(self, i: int) -> int:
        self.check_index(i)
        return 0 if i <= self.m else 1

    def parity_sign(self, i: int, j: int) -> GScalar:
        """(-1)^{|i||j|}: -1 exactly when both generators are fermionic."""
        return GScalar(-1) if self.parity(i) and self.parity(j) else GScalar(1)

    def sign_pow(self, exponent: int) -> GScalar:
        return GScalar(-1) if exponent % 2 else GScalar(1)

    def indices(self):
        return range(1, self.total + 1)

    def __eq__(self, other):
        return (
            isinstance(other, GradedDims) and self.m == other.m and self.n == other.n
        )

    def __hash__(self):
        return hash((self.m, self.n))

    def __str__(self):
        return f"({self.m},{self.n})"

    def __repr__(self):
        return f"GradedDims({self.m}, {self.n})"
