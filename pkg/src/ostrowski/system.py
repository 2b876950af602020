"""Numeration system handle: a quadratic irrational plus its cached tables.

A NumerationSystem owns the continued fraction of its base together with
append-only convergent / difference / complete-quotient tables.  Growth is
guarded by a lock so concurrent readers always see a consistent prefix.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import contfrac
from .errors import RationalInput
from .qfield import QuadraticNumber, parse

_PRESETS = {
    "golden": "(1+sqrt(5))/2",
    "sqrt2": "sqrt(2)",
    "sqrt3": "sqrt(3)",
}


class NumerationSystem:
    """The Ostrowski machinery attached to one quadratic irrational."""

    def __init__(self, a: QuadraticNumber, name: str | None = None):
        if a.is_rational:
            raise RationalInput(f"{a} is rational")
        self.a = a
        self.name = name
        self.cf = contfrac.expand(a)
        self._lock = threading.Lock()
        self._ps: list[int] = [1, self.cf.quotient(0)]  # p_{-1}, p_0, ...
        self._qs: list[int] = [0, 1]
        self._betas: list[QuadraticNumber] = [
            QuadraticNumber.from_int(-1),
            a - self.cf.quotient(0),
        ]
        self._zetas: list[QuadraticNumber] = [a]

    @classmethod
    def from_spec(cls, spec: str) -> "NumerationSystem":
        literal = _PRESETS.get(spec, spec)
        name = spec if spec in _PRESETS else None
        return cls(parse(literal), name=name)

    # -- continued fraction views --------------------------------------

    @property
    def xi(self) -> int:
        return self.cf.xi

    @property
    def nu(self) -> int:
        return self.cf.nu

    @property
    def mu(self) -> int:
        return self.cf.mu

    def quotient(self, k: int) -> int:
        return self.cf.quotient(k)

    def digit_cap(self, k: int) -> int:
        """Largest digit value allowed at position k (coefficient of q_k)."""
        return self.quotient(1) - 1 if k == 0 else self.quotient(k + 1)

    # -- cached tables --------------------------------------------------

    def _grow(self, k: int) -> None:
        with self._lock:
            while len(self._qs) <= k + 1:
                j = len(self._qs) - 1  # next index to fill
                aj = self.cf.quotient(j)
                self._ps.append(aj * self._ps[-1] + self._ps[-2])
                self._qs.append(aj * self._qs[-1] + self._qs[-2])
                self._betas.append(
                    QuadraticNumber.from_int(self._qs[-1]) * self.a - self._ps[-1]
                )

    def q(self, k: int) -> int:
        """Convergent denominator q_k (k >= -1)."""
        if len(self._qs) <= k + 1:
            self._grow(k)
        return self._qs[k + 1]

    def p(self, k: int) -> int:
        if len(self._ps) <= k + 1:
            self._grow(k)
        return self._ps[k + 1]

    def beta(self, k: int) -> QuadraticNumber:
        """k-th difference q_k*a - p_k (k >= -1; beta_{-1} = -1)."""
        if len(self._betas) <= k + 1:
            self._grow(k)
        return self._betas[k + 1]

    def zeta(self, k: int) -> QuadraticNumber:
        """k-th complete quotient; periodic for k > xi."""
        if k > self.xi + self.nu:
            k = self.xi + 1 + (k - self.xi - 1) % self.nu
        with self._lock:
            while len(self._zetas) <= k:
                j = len(self._zetas) - 1
                self._zetas.append(1 / (self._zetas[-1] - self.cf.quotient(j)))
            return self._zetas[k]

    def q_prefix(self, n: int) -> list[int]:
        """[q_0 .. q_{n-1}] as a plain list for tight loops."""
        self.q(n)
        return self._qs[1 : n + 1]

    def p_prefix(self, n: int) -> list[int]:
        self.p(n)
        return self._ps[1 : n + 1]

    # -- scaling window ---------------------------------------------------

    @property
    def in_window(self) -> bool:
        """True when 1.5 < a < 2, the regime the real-side constructions need."""
        a = self.a
        return (a - Fraction(3, 2)).sign() > 0 and (2 - a).sign() > 0

    def normalized(self) -> tuple[Fraction, "NumerationSystem"]:
        """(s, system of s*a) with 1.5 < s*a < 2; returns self when already there."""
        if self.in_window:
            return Fraction(1), self
        s, b = contfrac.normalize_window(self.a)
        return s, NumerationSystem(b)

    def require_window(self) -> None:
        if not self.in_window:
            raise ValueError(f"system base {self.a} is outside (1.5, 2)")
        assert self.quotient(0) == 1 and self.quotient(1) == 1

    # -- word formatting --------------------------------------------------

    def word_of(self, digits) -> str:
        """MSD-first word for LSD-first digit list; '0' for the empty word."""
        if not any(digits):
            return "0"
        rev = list(reversed(digits))
        if self.mu > 9:
            return ".".join(str(d) for d in rev)
        return "".join(str(d) for d in rev)

    def digits_of(self, word: str) -> tuple[int, ...]:
        """Inverse of word_of; returns LSD-first digits with top zeros trimmed."""
        word = word.strip()
        if word in ("", "0"):
            return ()
        if "." in word:
            rev = [int(part) for part in word.split(".")]
        else:
            rev = [int(ch) for ch in word]
        digits = list(reversed(rev))
        while digits and digits[-1] == 0:
            digits.pop()
        return tuple(digits)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, NumerationSystem) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self) -> str:
        return f"NumerationSystem({self.a})"


def golden() -> NumerationSystem:
    return NumerationSystem.from_spec("golden")
