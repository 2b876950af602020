"""Exact field arithmetic, sign and floor, against independent oracles."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from ostrowski.errors import MixedRadicand
from ostrowski.qfield import QuadraticNumber, parse

PHI = QuadraticNumber(1, 1, 2, 5)


def interval_sign(x: QuadraticNumber, bits: int = 128) -> int:
    """Sign via interval arithmetic: sqrt(d) bracketed to 2^-bits."""
    scale = 1 << bits
    lo_root = Fraction(isqrt(x.d * scale * scale), scale)
    hi_root = lo_root + Fraction(1, scale)
    if x.q >= 0:
        lo = x.p + x.q * lo_root
        hi = x.p + x.q * hi_root
    else:
        lo = x.p + x.q * hi_root
        hi = x.p + x.q * lo_root
    lo, hi = lo / x.r, hi / x.r
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    assert lo <= 0 <= hi
    if lo == 0 and hi == 0:
        return 0
    # interval straddles zero: only possible for the exact zero here
    assert x.p == 0 and x.q == 0
    return 0


def rand_qn(rng, d):
    return QuadraticNumber(
        rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 30), d
    )


def test_conjugate_sum_is_rational():
    a = QuadraticNumber(1, 1, 2, 5)
    b = QuadraticNumber(1, -1, 2, 5)
    assert a + b == QuadraticNumber.from_int(1)


def test_golden_square():
    # (1+sqrt5)^2 = 6+2*sqrt5, so phi^2 = (6+2*sqrt5)/4 = (3+sqrt5)/2
    assert PHI * PHI == QuadraticNumber(3, 1, 2, 5)


def test_negation():
    x = QuadraticNumber(0, 1, 1, 3)
    assert -x == QuadraticNumber(0, -1, 1, 3)


def test_sign_examples():
    assert QuadraticNumber(1, -1, 1, 2).sign() == -1  # 1 < sqrt2
    # 49 > 48 hence 7 > 4*sqrt3
    assert QuadraticNumber(7, -4, 1, 3).sign() == 1
    assert QuadraticNumber(0, 0).sign() == 0


def test_floor_examples():
    assert PHI.floor() == 1
    assert QuadraticNumber(0, 1, 1, 3).floor() == 1
    assert QuadraticNumber.from_int(5).floor() == 5
    assert QuadraticNumber(-1, -1, 2, 5).floor() == -2  # -phi


def test_canonicalisation():
    # sqrt(8) -> 2*sqrt(2)
    assert QuadraticNumber(0, 1, 1, 8) == QuadraticNumber(0, 2, 1, 2)
    # sqrt(9) collapses to the rational 3
    x = QuadraticNumber(0, 1, 1, 9)
    assert x.is_rational and x.as_fraction() == 3
    # rationals with different ambient radicands are structurally equal
    assert QuadraticNumber(5, 0, 1, 7) == QuadraticNumber(5, 0, 1, 3)
    assert QuadraticNumber(2, 2, 4, 5) == QuadraticNumber(1, 1, 2, 5)


def test_mixed_radicand_rules():
    s2 = QuadraticNumber.sqrt_of(2)
    s3 = QuadraticNumber.sqrt_of(3)
    half = QuadraticNumber(1, 0, 2)
    assert (s2 + half) - half == s2
    with pytest.raises(MixedRadicand):
        _ = s2 + s3


def test_division():
    x = QuadraticNumber(3, -2, 7, 13)
    assert x / x == QuadraticNumber.from_int(1)
    assert (PHI / PHI).is_integer()
    with pytest.raises(ZeroDivisionError):
        _ = PHI / QuadraticNumber.from_int(0)
    # 1/phi = phi - 1
    assert 1 / PHI == PHI - 1


def test_field_axioms_random():
    rng = random.Random(20240811)
    for d in (2, 3, 5, 6, 7, 13):
        for _ in range(200):
            x, y, z = (rand_qn(rng, d) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + (-x) == QuadraticNumber.from_int(0)
            if x.sign() != 0:
                assert x * x.inverse() == QuadraticNumber.from_int(1)


def test_sign_against_interval_oracle():
    rng = random.Random(7)
    for _ in range(10_000):
        d = rng.choice([2, 3, 5, 6, 7, 11, 13])
        x = rand_qn(rng, d)
        assert x.sign() == interval_sign(x)


def test_floor_bracket_property():
    rng = random.Random(99)
    for _ in range(2000):
        d = rng.choice([2, 3, 5, 7])
        x = rand_qn(rng, d)
        n = x.floor()
        assert (x - n).sign() >= 0
        assert (x - (n + 1)).sign() < 0


def test_parse_print_round_trip():
    rng = random.Random(4242)
    literals = ["5", "-5", "5/3", "sqrt(3)", "-sqrt(2)", "2*sqrt(5)/7",
                "(1+sqrt(5))/2", "(1-2*sqrt(3))/4", "(-3+sqrt(7))/2", "0"]
    for text in literals:
        x = parse(text)
        assert parse(str(x)) == x
    for _ in range(500):
        d = rng.choice([2, 3, 5, 6, 7, 13])
        x = rand_qn(rng, d)
        assert parse(str(x)) == x


def test_comparison_operators():
    assert QuadraticNumber(3, 0, 2) < PHI < QuadraticNumber(0, 1, 1, 5)
    assert PHI <= PHI
    assert not PHI < PHI
    with pytest.raises(MixedRadicand):
        _ = PHI < QuadraticNumber.sqrt_of(3)
