"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Values are kept in the canonical form (p + q*sqrt(d))/r with integer p, q,
positive integer r, gcd(p, q, r) = 1 and d square-free.  Every comparison is
decided with integer arithmetic only; no floating point is used anywhere.
Rationals are carried as q = 0 (with d pinned to 2 so that equality stays
structural) and may mix freely with values from any radicand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import MixedRadicand

_RATIONAL_D = 2


def _squarefree(d: int) -> tuple[int, int]:
    """Split d into (s, d0) with d = s*s*d0 and d0 square-free."""
    s = 1
    d0 = d
    f = 2
    while f * f <= d0:
        ff = f * f
        while d0 % ff == 0:
            d0 //= ff
            s *= f
        f += 1
    return s, d0


@dataclass(frozen=True)
class QuadraticNumber:
    """An element (p + q*sqrt(d))/r of Q(sqrt(d)), canonical after __post_init__."""

    p: int
    q: int
    r: int = 1
    d: int = _RATIONAL_D

    def __post_init__(self):
        p, q, r, d = self.p, self.q, self.r, self.d
        if r == 0:
            raise ZeroDivisionError("denominator r must be nonzero")
        if d <= 0:
            raise ValueError("radicand must be positive")
        if q != 0:
            s, d0 = _squarefree(d)
            q *= s
            d = d0
            if d == 1:
                p += q
                q = 0
        if q == 0:
            d = _RATIONAL_D
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "QuadraticNumber":
        return cls(n, 0, 1)

    @classmethod
    def from_fraction(cls, f: Fraction | int) -> "QuadraticNumber":
        f = Fraction(f)
        return cls(f.numerator, 0, f.denominator)

    @classmethod
    def sqrt_of(cls, d: int) -> "QuadraticNumber":
        return cls(0, 1, 1, d)

    # -- predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def is_integer(self) -> bool:
        return self.q == 0 and self.r == 1

    # -- arithmetic ---------------------------------------------------

    def _join_radicand(self, other: "QuadraticNumber") -> int:
        if self.q == 0:
            return other.d
        if other.q == 0:
            return self.d
        if self.d != other.d:
            raise MixedRadicand(f"cannot mix sqrt({self.d}) with sqrt({other.d})")
        return self.d

    @staticmethod
    def _coerce(value) -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, int):
            return QuadraticNumber(value, 0, 1)
        if isinstance(value, Fraction):
            return QuadraticNumber.from_fraction(value)
        return NotImplemented

    def __add__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_radicand(other)
        return QuadraticNumber(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            self.r * other.r,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticNumber":
        return QuadraticNumber(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_radicand(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            self.r * other.r,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticNumber":
        if self.p == 0 and self.q == 0:
            raise ZeroDivisionError("division by zero")
        # 1/((p+q*sqrt(d))/r) = r*(p-q*sqrt(d))/(p^2 - q^2 d)
        n = self.p * self.p - self.q * self.q * self.d
        return QuadraticNumber(self.r * self.p, -self.r * self.q, n, self.d)

    def __truediv__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_radicand(other)  # raises before inverting  # noqa: F841
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QuadraticNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.r, self.d)

    # -- order --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign, by integer case analysis on p vs q*sqrt(d)."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2 d
        lhs = p * p
        rhs = q * q * d
        if lhs == rhs:
            return 0  # unreachable for square-free d >= 2
        bigger_rational = lhs > rhs
        if p > 0:
            return 1 if bigger_rational else -1
        return -1 if bigger_rational else 1

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.p, self.q, self.r, self.d) == (other.p, other.q, other.r, other.d)

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.d))

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return not self.__le__(other)

    def __ge__(self, other) -> bool:
        return not self.__lt__(other)

    def floor(self) -> int:
        """Greatest integer <= self, by binary search over the exact sign."""
        if self.q == 0:
            return self.p // self.r
        bound = (abs(self.p) + abs(self.q) * self.d) // self.r + 2
        lo, hi = -bound, bound  # lo <= x < hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            # sign of self - mid without building intermediates
            s = QuadraticNumber(self.p - mid * self.r, self.q, self.r, self.d).sign()
            if s >= 0:
                lo = mid
            else:
                hi = mid
        return lo

    # -- text form ----------------------------------------------------

    def __str__(self) -> str:
        p, q, r, d = self.p, self.q, self.r, self.d
        if q == 0:
            return f"{p}" if r == 1 else f"{p}/{r}"
        aq = abs(q)
        term = f"sqrt({d})" if aq == 1 else f"{aq}*sqrt({d})"
        if p == 0:
            s = ("-" if q < 0 else "") + term
            return s if r == 1 else f"{s}/{r}"
        core = f"({p}{'+' if q > 0 else '-'}{term})"
        return core if r == 1 else f"{core}/{r}"

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.p}, {self.q}, {self.r}, {self.d})"


_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_SQRT_RE = re.compile(r"^([+-])?(?:(\d+)\*)?sqrt\((\d+)\)(?:/(\d+))?$")
_FULL_RE = re.compile(
    r"^([+-])?\((-?\d+)([+-])(?:(\d+)\*)?sqrt\((\d+)\)\)(?:/(\d+))?$"
)


def parse(text: str) -> QuadraticNumber:
    """Parse the literal format produced by str(); round-trips bit-exactly.

    Accepted shapes: "5", "-5/3", "sqrt(3)", "-2*sqrt(5)/7", "(1+sqrt(5))/2",
    "-(3-2*sqrt(7))/4".
    """
    s = text.strip().replace(" ", "")
    m = _RAT_RE.match(s)
    if m:
        return QuadraticNumber(int(m.group(1)), 0, int(m.group(2) or 1))
    m = _SQRT_RE.match(s)
    if m:
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2) or 1)
        return QuadraticNumber(0, sign * coeff, int(m.group(4) or 1), int(m.group(3)))
    m = _FULL_RE.match(s)
    if m:
        outer = -1 if m.group(1) == "-" else 1
        p = int(m.group(2))
        qsign = -1 if m.group(3) == "-" else 1
        qc = int(m.group(4) or 1)
        return QuadraticNumber(
            outer * p, outer * qsign * qc, int(m.group(6) or 1), int(m.group(5))
        )
    raise ValueError(f"cannot parse quadratic literal: {text!r}")
