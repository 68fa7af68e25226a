import math
import random
from fractions import Fraction

import pytest

from markovgap.enclosure import (
    Enclosure,
    exp_enclosure,
    ln_enclosure,
    pow_enclosure,
    sqrt_enclosure,
)


def test_sqrt_contains_and_tight():
    rng = random.Random(1)
    for _ in range(200):
        x = Fraction(rng.randrange(1, 10**6), rng.randrange(1, 10**4))
        enc = sqrt_enclosure(x, 30)
        assert enc.lo * enc.lo <= x <= enc.hi * enc.hi
        assert enc.width <= Fraction(2, 10**30)


def test_sqrt_exact_squares():
    enc = sqrt_enclosure(Fraction(49), 20)
    assert enc.contains(7)
    assert sqrt_enclosure(0, 10).lo == 0 == sqrt_enclosure(0, 10).hi


def test_ln_exp_directed():
    rng = random.Random(2)
    for _ in range(100):
        x = Fraction(rng.randrange(1, 10**6), rng.randrange(1, 10**6))
        enc = ln_enclosure(x, 30)
        assert enc.lo <= enc.hi
        assert float(enc.lo) <= math.log(float(x)) + 1e-12
        assert float(enc.hi) >= math.log(float(x)) - 1e-12
        back = exp_enclosure(enc.lo, 30)
        assert back.lo <= x
        back = exp_enclosure(enc.hi, 30)
        assert back.hi >= x


def test_pow_monotone_and_contains():
    base = Enclosure(Fraction(1, 35), Fraction(1, 35))
    s = Fraction("0.174813")
    enc = pow_enclosure(base, s, 40)
    true = math.exp(float(s) * math.log(1 / 35))
    assert enc.lo <= Fraction(true).limit_denominator(10**12) <= enc.hi or abs(float(enc.mid) - true) < 1e-12
    assert enc.width < Fraction(1, 10**30)


def test_pow_exponent_zero_and_errors():
    assert pow_enclosure(Fraction(1, 2), 0).lo == 1
    with pytest.raises(ValueError):
        pow_enclosure(Fraction(-1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        pow_enclosure(Fraction(1, 2), Fraction(-1))


def test_interval_ops():
    a = Enclosure(Fraction(1), Fraction(2))
    b = Enclosure(Fraction(3), Fraction(4))
    assert (a + b).lo == 4 and (a + b).hi == 6
    assert (b - a).lo == 1 and (b - a).hi == 3
    assert a.strictly_below(b)
    assert not b.strictly_below(a)
    assert a.reciprocal().lo == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        Enclosure(Fraction(-1), Fraction(1)).reciprocal()
    assert Enclosure(Fraction(-2), Fraction(-1)).sign() == -1
    assert Enclosure(Fraction(1), Fraction(2)).sign() == 1
    assert Enclosure(Fraction(-1), Fraction(1)).sign() == 0
