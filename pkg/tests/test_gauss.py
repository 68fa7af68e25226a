import pytest

from markovgap.catalog import GAUSS_SETS
from markovgap.cf import eval_periodic
from markovgap.gauss import GaussSystem
from markovgap.sft import SftSpec
from markovgap.surd import Surd


def test_period_one_orbits_K12(gauss_systems):
    orbits = gauss_systems["K12"].orbits(1)
    by_word = {o.cyclic_word: o for o in orbits}
    assert set(by_word) == {(1,), (2,)}
    golden_tail = Surd.make(-1, 1, 2, 5)           # (sqrt5-1)/2
    assert by_word[(1,)].multiplier == golden_tail * golden_tail
    silver_tail = Surd.make(-1, 1, 1, 2)           # sqrt2-1
    assert by_word[(2,)].multiplier == silver_tail * silver_tail


def test_period_two_orbit_product_form(gauss_systems):
    orbits = gauss_systems["K12"].orbits(2)
    assert len(orbits) == 1 and orbits[0].cyclic_word == (1, 2)
    lam = orbits[0].multiplier
    # oracle: direct product of squared orbit points
    x0 = eval_periodic((), (1, 2))
    x1 = eval_periodic((), (2, 1))
    assert lam == x0 * x0 * x1 * x1
    assert lam == orbits[0].multiplier_product_form()


def test_multiplier_consistency_both_routes(gauss_systems):
    # continuant formula vs orbit-point product: exact equality, which is
    # stronger than the 30-digit agreement required
    for name in ("K12", "X3_13_31", "X4_14_41_24_42"):
        sys_ = gauss_systems[name]
        for n in range(1, 5):
            for orb in sys_.orbits(n):
                assert orb.multiplier == orb.multiplier_product_form()
                assert orb.multiplier.sign() > 0
                assert (1 - orb.multiplier).sign() > 0


def test_X2_period_3_is_empty(gauss_systems):
    # both length-3 necklace classes of {1,2} contain 121 or 212 cyclically,
    # so there are no primitive period-3 orbits at all
    assert gauss_systems["X2_121_212"].orbits(3) == ()
    # the first mixed orbit appears at period 4: (1,1,2,2)
    words = [o.cyclic_word for o in gauss_systems["X2_121_212"].orbits(4)]
    assert words == [(1, 1, 2, 2)]


@pytest.mark.parametrize("name", sorted(GAUSS_SETS))
def test_orbit_count_trace_identity(gauss_systems, name):
    sys_ = gauss_systems[name]
    for n in range(1, 11):
        counted, trace = sys_.orbit_count_identity(n)
        assert counted == trace, (name, n)


def test_rotation_invariance_of_multipliers(gauss_systems):
    # the datum is rotation-independent: building it from any rotation gives
    # the same multiplier, so determinants cannot depend on representatives
    sys_ = gauss_systems["X3_13_31"]
    for n in range(1, 7):
        for orb in sys_.orbits(n):
            w = orb.cyclic_word
            for k in range(1, n):
                rotated = sys_._orbit_datum(w[k:] + w[:k])
                assert rotated.multiplier == orb.multiplier


def test_gauss_system_rejects_blocks_and_disconnected():
    with pytest.raises(NotImplementedError):
        GaussSystem(SftSpec.from_blocks([(1, 1), (2, 2)]))
    with pytest.raises(ValueError):
        GaussSystem(SftSpec.forbidding({1, 2}, [(1, 2), (2, 1)]))


def test_order_limits(gauss_systems):
    with pytest.raises(ValueError):
        gauss_systems["K12"].orbits(13)
    with pytest.raises(ValueError):
        gauss_systems["K12"].orbits(0)


def test_default_orders(gauss_systems):
    assert gauss_systems["K12"].default_order() == 8
    assert gauss_systems["K123"].default_order() == 8
    assert gauss_systems["K1234"].default_order() == 6
    assert gauss_systems["X4_14_41_24_42"].default_order() == 6
