"""Ostrowski representations of natural numbers.

Digits are stored LSD-first: index k holds the coefficient of q_k.  Words
print MSD-first.  Admissibility: the digit at position 0 stays strictly
below a_1, every other position k stays at or below a_{k+1}, and a full
digit forces a zero one position down.

Addition ships two engines.  The reference engine goes through the integer
value and re-encodes, for any quadratic base.  The golden-system engine works
purely on digits: a digitwise sum followed by local carry rewrites with a
window of at most four positions.  Every rewrite preserves the value and
strictly lowers the digit-count, so the rewriting terminates, and any stuck
configuration is admissible, hence is the unique representation of the sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IncomparableSystems, InvalidDigits, UnsupportedSystem
from .system import NumerationSystem

Digits = tuple[int, ...]


def digits_valid(sys: NumerationSystem, digits) -> bool:
    """Admissibility of an LSD-first digit list (top zeros are allowed)."""
    prev = 0
    for k, b in enumerate(digits):
        if b < 0:
            return False
        cap = sys.digit_cap(k)
        if b > cap:
            return False
        if k > 0 and b == sys.quotient(k + 1) and prev != 0:
            return False
        prev = b
    return True


def validate(sys: NumerationSystem, digits) -> None:
    if not digits_valid(sys, digits):
        raise InvalidDigits(f"{list(digits)} is not admissible for {sys}")


def _trim(digits: list[int]) -> Digits:
    while digits and digits[-1] == 0:
        digits.pop()
    return tuple(digits)


@dataclass(frozen=True)
class OstrowskiInt:
    """A natural number carried as its digit string in a fixed system."""

    system: NumerationSystem
    digits: Digits = field(default=())

    def __post_init__(self):
        validate(self.system, self.digits)
        if self.digits and self.digits[-1] == 0:
            raise InvalidDigits("top digit must be nonzero (canonical length)")

    @property
    def word(self) -> str:
        return self.system.word_of(self.digits)

    def to_json(self) -> dict:
        return {
            "system": str(self.system.a),
            "word": self.word,
            "value": decode(self),
        }

    def __repr__(self) -> str:
        return f"<{self.word} base {self.system.a}>"


def encode(sys: NumerationSystem, n: int) -> OstrowskiInt:
    """Greedy expansion of n >= 0; the empty word encodes zero."""
    if n < 0:
        raise ValueError("only naturals are representable")
    return OstrowskiInt(sys, tuple(encode_digits(sys, n)))


def encode_digits(sys: NumerationSystem, n: int) -> list[int]:
    if n == 0:
        return []
    top = 0
    while sys.q(top + 1) <= n:
        top += 1
    qs = sys.q_prefix(top + 1)
    out = [0] * (top + 1)
    rem = n
    for k in range(top, -1, -1):
        b = rem // qs[k]
        out[k] = b
        rem -= b * qs[k]
        if b > sys.mu:
            raise InvalidDigits(f"digit {b} exceeds alphabet bound {sys.mu}")
    assert rem == 0
    return out


def decode(x: OstrowskiInt) -> int:
    return decode_digits(x.system, x.digits)


def decode_digits(sys: NumerationSystem, digits) -> int:
    validate(sys, digits)
    qs = sys.q_prefix(len(digits))
    return sum(b * q for b, q in zip(digits, qs))


def compare(x: OstrowskiInt, y: OstrowskiInt) -> int:
    """-1, 0 or 1 by the most significant differing digit."""
    if x.system != y.system:
        raise IncomparableSystems("operands come from different systems")
    return compare_digits(x.digits, y.digits)


def compare_digits(dx, dy) -> int:
    lx, ly = len(dx), len(dy)
    for k in range(max(lx, ly) - 1, -1, -1):
        bx = dx[k] if k < lx else 0
        by = dy[k] if k < ly else 0
        if bx != by:
            return 1 if bx > by else -1
    return 0


def add(x: OstrowskiInt, y: OstrowskiInt, engine: str = "auto") -> OstrowskiInt:
    """Sum in the same system.

    engine: "auto" picks the digit engine for the golden base and the
    reference engine otherwise; "reference" and "digits" force one.
    """
    if x.system != y.system:
        raise IncomparableSystems("operands come from different systems")
    sys = x.system
    if engine == "auto":
        engine = "digits" if _is_golden(sys) else "reference"
    if engine == "reference":
        return encode(sys, decode(x) + decode(y))
    if engine == "digits":
        if not _is_golden(sys):
            raise UnsupportedSystem("digit engine only implemented for the golden base")
        return OstrowskiInt(sys, add_golden_digits(x.digits, y.digits))
    raise ValueError(f"unknown engine {engine!r}")


def successor(x: OstrowskiInt) -> OstrowskiInt:
    return add(x, encode(x.system, 1))


def _is_golden(sys: NumerationSystem) -> bool:
    return sys.cf.preperiod == (1,) and sys.cf.period == (1,)


def add_golden_digits(dx, dy) -> Digits:
    out = [0] * (max(len(dx), len(dy)) + 3)
    for k, b in enumerate(dx):
        out[k] = b
    for k, b in enumerate(dy):
        out[k] += b
    _normalize_golden(out)
    return _trim(out)


def _normalize_golden(d: list[int]) -> None:
    """Rewrite to the admissible form, in place.

    Rules (q_{j+2} = q_{j+1} + q_j, 2q_j = q_{j+1} + q_{j-2}, 2q_2 = q_3 + q_1,
    2q_1 = q_2) each drop the total digit count by one, so the sweep loop
    fires at most sum(d) times.  Any stuck configuration has digits in {0,1},
    no adjacent ones and a zero at position 0, which is exactly admissibility,
    and admissible forms are unique per value.  Position 0 starts at zero and
    no rule ever writes to it.
    """
    d.extend((0, 0, 0))
    top = len(d) - 1
    changed = True
    while changed:
        changed = False
        for j in range(1, top - 1):
            v = d[j]
            if v >= 2:
                if j >= 3:
                    d[j] = v - 2
                    d[j + 1] += 1
                    d[j - 2] += 1
                elif j == 2:
                    d[2] = v - 2
                    d[3] += 1
                    d[1] += 1
                else:
                    d[1] = v - 2
                    d[2] += 1
                changed = True
            elif v and d[j + 1]:
                d[j] = v - 1
                d[j + 1] -= 1
                d[j + 2] += 1
                changed = True


def parse_word(sys: NumerationSystem, word: str) -> OstrowskiInt:
    return OstrowskiInt(sys, sys.digits_of(word))
