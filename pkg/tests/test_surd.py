import random
from fractions import Fraction

import pytest

from markovgap.surd import Surd, SurdSum, squarefree_decompose


def test_squarefree_decompose():
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(0) == (1, 0)
    # large square factor needs real factorization
    p = 1000003
    assert squarefree_decompose(p * p * 5) == (p, 5)
    rng = random.Random(3)
    for _ in range(50):
        s = rng.randrange(1, 10**5)
        core = rng.choice([1, 2, 3, 5, 7, 11, 13])
        got_s, got_core = squarefree_decompose(s * s * core)
        assert got_s * got_s * got_core == s * s * core
        # core really square-free
        for p in range(2, 40):
            assert got_core % (p * p) != 0


def test_canonical_form():
    s = Surd.make(2, 2, 4, 8)  # (2 + 2*sqrt8)/4 = (1 + 2*sqrt2)/2
    assert (s.a, s.b, s.c, s.d) == (1, 2, 2, 2)
    r = Surd.make(3, 5, 1, 9)  # sqrt9 = 3 collapses to rational 18
    assert r.is_rational and r.to_fraction() == 18
    neg_c = Surd.make(1, 1, -2, 2)
    assert neg_c.c > 0 and neg_c.sign() < 0


def test_field_ops_and_reciprocal():
    x = Surd.make(-1, 1, 1, 2)  # sqrt2 - 1
    assert ((x + 1) * (x + 1)).to_fraction() == 2  # (sqrt2)^2
    y = x.reciprocal()
    assert y == Surd.make(1, 1, 1, 2)  # 1/(sqrt2-1) = sqrt2+1
    assert (x * y).to_fraction() == 1
    z = x + Fraction(1, 3)
    assert z * 3 == Surd.make(-2, 3, 1, 2)
    with pytest.raises(ValueError):
        Surd.sqrt_int(2) + Surd.sqrt_int(3)


def test_exact_ordering():
    sqrt2 = Surd.sqrt_int(2)
    assert Surd.make(0, 2, 1, 2).sign() > 0  # 2*sqrt2
    assert (Surd.make(0, 2, 1, 2) - 3).sign() < 0  # 2*sqrt2 < 3
    assert (sqrt2 - Fraction(3, 2)).sign() < 0
    assert (sqrt2 - Fraction(7, 5)).sign() > 0
    assert (sqrt2 - sqrt2).sign() == 0
    # cross-radicand ordering goes through SurdSum
    assert SurdSum.of(Surd.make(-1, 1, 1, 2)).compare(SurdSum.of(Surd.make(-1, 1, 1, 3))) < 0
    with pytest.raises(ValueError):
        Surd.make(-1, 1, 1, 2) < Surd.make(-1, 1, 1, 3)


def test_enclosure_width():
    x = Surd.make(-1, 1, 1, 3)
    enc = x.enclosure(40)
    assert enc.contains(Fraction(732050807568877293527446341505872366943, 10**39)) or enc.width < Fraction(1, 10**38)
    assert float(x) == pytest.approx(0.7320508075688772, abs=1e-12)


def test_surdsum_structural_zero_and_compare():
    s = SurdSum.of(Surd.sqrt_int(2), Surd.sqrt_int(3))
    t = SurdSum.of(Surd.sqrt_int(3), Surd.sqrt_int(2))
    assert (s - t).is_zero
    assert s.compare(t) == 0
    assert s.compare(Fraction(315, 100)) < 0   # sqrt2+sqrt3 = 3.1462... < 3.15
    assert s.compare(Fraction(314, 100)) > 0
    sqrt10 = SurdSum.of(Surd.sqrt_int(10))
    assert s.compare(sqrt10) < 0  # sqrt2+sqrt3 < sqrt10 is false!  check:
    # sqrt2+sqrt3 = 3.14626, sqrt10 = 3.16228, so indeed less


def test_surdsum_mixed_arithmetic():
    v = SurdSum.of(1, Surd.make(-1, 1, 1, 2))  # 1 + (sqrt2 - 1) = sqrt2
    assert v.compare(SurdSum.of(Surd.sqrt_int(2))) == 0
    w = v.scale(2) - SurdSum.of(Surd.sqrt_int(8))  # 2 sqrt2 - sqrt8 = 0
    assert w.is_zero
    assert SurdSum.of(Fraction(1, 3)).is_rational
