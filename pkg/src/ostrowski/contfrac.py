"""Continued fractions of quadratic irrationals, exactly.

Expansion iterates complete quotients in Q(sqrt(d)); the period is detected
by exact recurrence of a complete quotient, which gives the shortest
preperiod and the primitive period in one shot.  evaluate() goes the other
way (periodic expansion back to the quadratic number) and serves as an
independent round-trip oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RationalInput
from .qfield import QuadraticNumber

_EXPANSION_CAP = 100_000


@dataclass(frozen=True)
class ContinuedFraction:
    """Eventually periodic expansion [a0; a1 .. a_xi, (a_{xi+1} .. a_{xi+nu})^w].

    preperiod holds a0 .. a_xi (never empty), period holds the repeating
    block, shortest possible on both counts.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.preperiod:
            raise ValueError("preperiod must contain at least a0")
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(a < 1 for a in self.preperiod[1:]) or any(a < 1 for a in self.period):
            raise ValueError("partial quotients a_k must be >= 1 for k >= 1")

    @property
    def xi(self) -> int:
        return len(self.preperiod) - 1

    @property
    def nu(self) -> int:
        return len(self.period)

    @property
    def mu(self) -> int:
        return max(max(self.preperiod), max(self.period))

    def quotient(self, k: int) -> int:
        """Partial quotient a_k for any k >= 0."""
        if k < 0:
            raise IndexError("k must be nonnegative")
        if k <= self.xi:
            return self.preperiod[k]
        return self.period[(k - self.xi - 1) % self.nu]

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def from_json(cls, data: dict) -> "ContinuedFraction":
        return cls(tuple(data["preperiod"]), tuple(data["period"]))

    def __str__(self) -> str:
        head = str(self.preperiod[0])
        mid = ", ".join(str(a) for a in self.preperiod[1:])
        cyc = "(" + ",".join(str(a) for a in self.period) + ")^ω"
        if mid:
            return f"[{head}; {mid}, {cyc}]"
        return f"[{head}; {cyc}]"


def expand(a: QuadraticNumber) -> ContinuedFraction:
    """Continued fraction of a quadratic irrational, with detected period."""
    if a.is_rational:
        raise RationalInput(f"{a} is rational; its expansion terminates")
    digits: list[int] = []
    seen: dict[QuadraticNumber, int] = {}
    zeta = a
    k = 0
    while k < _EXPANSION_CAP:
        if k >= 1:
            if zeta in seen:
                i = seen[zeta]
                return ContinuedFraction(tuple(digits[:i]), tuple(digits[i:]))
            seen[zeta] = k
        ak = zeta.floor()
        digits.append(ak)
        zeta = 1 / (zeta - ak)
        k += 1
    raise RuntimeError("complete quotients failed to recur")  # pragma: no cover


def zetas_upto(a: QuadraticNumber, cf: ContinuedFraction, k_max: int) -> list[QuadraticNumber]:
    """Complete quotients zeta_0 .. zeta_{k_max} recomputed from the digits."""
    out = [a]
    z = a
    for k in range(k_max):
        z = 1 / (z - cf.quotient(k))
        out.append(z)
    return out


def evaluate(cf: ContinuedFraction) -> QuadraticNumber:
    """Exact value of an eventually periodic expansion.

    Solves the fixed-point quadratic of the periodic tail, then folds the
    preperiod back on top; independent of expand() except for qfield itself.
    """
    m00, m01, m10, m11 = 1, 0, 0, 1
    for q in cf.period:
        m00, m01, m10, m11 = m00 * q + m01, m00, m10 * q + m11, m10
    # tail z satisfies m10*z^2 + (m11-m00)*z - m01 = 0; take the root > 1
    disc = (m11 - m00) ** 2 + 4 * m10 * m01
    z = QuadraticNumber(m00 - m11, 1, 2 * m10, disc)
    if z.is_rational:
        raise ValueError("period does not describe an irrational tail")
    for q in reversed(cf.preperiod):
        z = q + 1 / z

    return z


def convergent_tables(a: QuadraticNumber, cf: ContinuedFraction, k_max: int):
    """(p_k, q_k, beta_k) for k = -1 .. k_max, beta_k = q_k*a - p_k exact."""
    ps = [1, cf.quotient(0)]
    qs = [0, 1]
    for k in range(1, k_max + 1):
        ak = cf.quotient(k)
        ps.append(ak * ps[-1] + ps[-2])
        qs.append(ak * qs[-1] + qs[-2])
    betas = [QuadraticNumber.from_int(q) * a - p for p, q in zip(ps, qs)]
    return ps, qs, betas


def check_difference_recurrences(a: QuadraticNumber, k_max: int) -> int | None:
    """Verify beta_{k+1} = a_{k+1} beta_k + beta_{k-1} (k >= 0) and
    beta_{k+1} = -beta_k / zeta_{k+2} (k >= 1) exactly.

    Returns the first failing k, or None when every k <= k_max passes.
    """
    cf = expand(a)
    ps, qs, betas = convergent_tables(a, cf, k_max + 2)
    zs = zetas_upto(a, cf, k_max + 3)
    # betas[i] holds beta_{i-1}; zs[i] holds zeta_i
    for k in range(0, k_max + 1):
        if betas[k + 2] != cf.quotient(k + 1) * betas[k + 1] + betas[k]:
            return k
    for k in range(1, k_max + 1):
        if betas[k + 2] != -betas[k + 1] / zs[k + 2]:
            return k
    return None


def normalize_window(a: QuadraticNumber) -> tuple[Fraction, QuadraticNumber]:
    """Smallest-denominator rational s != 0 with 1.5 < s*a < 2; returns (s, s*a)."""
    if a.is_rational:
        raise RationalInput("window normalisation needs an irrational")
    if a.sign() < 0:
        s, b = normalize_window(-a)
        return -s, b
    three_half = Fraction(3, 2)
    n = 1
    while n <= 1_000_000:
        # smallest integer m with m/n > 1.5/a, i.e. m > 3n/(2a)
        m = (QuadraticNumber.from_int(3 * n) / (2 * a)).floor() + 1
        cand = a * Fraction(m, n)
        if (2 - cand).sign() > 0:
            assert (cand - three_half).sign() > 0
            return Fraction(m, n), cand
        n += 1
    raise RuntimeError("no scaling found")  # pragma: no cover


def is_best_approx(a: QuadraticNumber, p: int, q: int) -> bool:
    """Whether |q*a - p| beats every |q'*a - p'| with 1 <= q' <= q, exactly.

    Only the two integers flanking q'*a can compete for each q', so the scan
    is finite and fully exact.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    err = q * a - p
    err2 = err * err
    for q2 in range(1, q + 1):
        t = q2 * a
        fl = t.floor()
        for p2 in (fl, fl + 1):
            if (p2, q2) == (p, q):
                continue
            e = q2 * a - p2
            if (e * e - err2).sign() <= 0:
                return False
    return True
