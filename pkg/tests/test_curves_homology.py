from itertools import combinations

import pytest

from artifact import gf2
from artifact.curves import (alpha, alpha_bar, alpha_bar4, curve_word, generic_curve, int_class,
                             make_curve, mod2_class)
from artifact.homology import (induced_int, induced_mod2, intersection_mod2, is_level2,
                               isometry_order, twist_generators)
from artifact.mapping import Engine, MappingClass


def bits(*idx):
    return sum(1 << (i - 1) for i in idx)


def test_make_curve_examples():
    c = make_curve("Alpha", (1, 2), 4)
    assert c.crosscaps == (1, 2)
    assert all(tag is None for _, tag in c.passages)
    b = make_curve("AlphaBar", (1, 3), 4)
    assert dict(b.passages)[2] == "Under"
    with pytest.raises(ValueError):
        make_curve("AlphaBar4", (1, 2, 3, 5), 4)


@pytest.mark.parametrize("family,params", [
    ("Alpha", (2, 1)), ("Alpha", ()), ("AlphaBar", (3, 1)), ("AlphaBar", (1, 6)),
    ("AlphaBar4", (1, 1, 2, 3)), ("AlphaBar4", (2, 3, 4, 5)),
])
def test_make_curve_rejects(family, params):
    with pytest.raises(ValueError):
        make_curve(family, params, 5)


def test_curve_words():
    assert curve_word(alpha(1, 2, 3, g=4)) == (1, 2, 3)
    assert curve_word(alpha_bar(1, 3, g=4)) == (1, 2, 2, 3)
    assert curve_word(alpha(2, g=4)) == (2,)
    assert curve_word(alpha_bar4(2, 4, 5, g=5)) == (1, 2, 3, 3, 4, 5)


def test_labels():
    assert alpha(1, 2, 3, g=4).label() == "alpha{1,2,3}"
    assert alpha_bar(1, 3, g=4).label() == "abar{1,3}"
    assert alpha_bar4(2, 3, 4, g=4).label() == "abar4{1,2,3,4}"


def test_classes():
    assert mod2_class(alpha(1, 2, 3, 4, g=4)) == bits(1, 2, 3, 4)
    assert mod2_class(alpha_bar(2, 3, g=4)) == mod2_class(alpha(2, 3, g=4))
    assert int_class(alpha_bar(1, 3, g=4)) == (1, 2, 1, 0)


@pytest.mark.parametrize("g", [4, 5, 6])
def test_mod2_matches_integral(g):
    from artifact.generators import catalog_curves
    for c in catalog_curves(g):
        v = int_class(c)
        assert sum((x % 2) << i for i, x in enumerate(v)) == mod2_class(c)
        assert c.two_sided


def test_generic_curve_accepted():
    c = generic_curve(((1, None), (2, "Under"), (3, "Over"), (4, None)), 4)
    assert c.family == "Generic"
    # tagged entries are in-between crosscaps; Over contributes nothing
    assert curve_word(c) == (1, 2, 2, 4)


def test_intersection_examples():
    assert intersection_mod2(bits(1), bits(1, 2)) == 1
    assert intersection_mod2(bits(1, 2), bits(1, 2)) == 0
    assert intersection_mod2(bits(3), bits(1, 2)) == 0
    assert intersection_mod2((1, 0, 0, 0), (1, 1, 0, 0)) == 1
    with pytest.raises(ValueError):
        intersection_mod2((1, 0, 0), (1, 1, 0, 0))


def test_transvection_examples():
    t = gf2.transvection(bits(1, 2), 4)
    assert t == (bits(2), bits(1), bits(3), bits(4))
    c = bits(1, 2, 3, 4)
    assert gf2.apply(gf2.transvection(c, 4), bits(1)) == bits(2, 3, 4)
    assert gf2.transvection(0, 4) == gf2.identity(4)
    with pytest.raises(ValueError):
        gf2.transvection(bits(1, 2, 3), 4)


@pytest.mark.parametrize("g", [4, 5])
def test_transvection_properties(g):
    for c in range(1 << g):
        if gf2.pairing(c, c):
            continue
        t = gf2.transvection(c, g)
        assert gf2.is_isometry(t)
        assert gf2.mul(t, t) == gf2.identity(g)
        assert gf2.apply(t, c) == c


def test_induced_examples():
    e = Engine(4)
    one = MappingClass.identity(4)
    assert induced_mod2(one) == gf2.identity(4)
    assert induced_int(one) == tuple(tuple(int(i == j) for i in range(4)) for j in range(4))
    assert induced_mod2(e.T(1, 2)) == gf2.transvection(bits(1, 2), 4)
    assert induced_mod2(e.Ybar(1, 2)) == gf2.identity(4)


def test_level2_examples():
    e = Engine(4)
    assert not is_level2(e.T(1, 2, 3, 4))
    assert is_level2(e.T(1, 2, 3, 4) ** 2)
    assert is_level2(e.reflection())


def test_induced_mod2_multiplicative():
    e = Engine(5)
    gens = [e.T(1, 2), e.T(2, 4), e.Ybar(1, 3), e.T(1, 2, 3, 5), e.reflection()]
    for f, h in combinations(gens, 2):
        assert induced_mod2(f * h) == gf2.mul(induced_mod2(f), induced_mod2(h))


def test_isometry_orders():
    assert isometry_order(3, "bruteforce").order == 6
    assert isometry_order(4, "bruteforce").order == 48
    gens = [gf2.transvection(bits(i, i + 1), 4) for i in range(1, 4)]
    gens.append(gf2.transvection(bits(1, 2, 3, 4), 4))
    assert isometry_order(4, "closure", gens).order == 48
    for g in (3, 4, 5):
        assert (isometry_order(g, "closure", twist_generators(g)).order
                == isometry_order(g, "bruteforce").order)


def test_isometry_errors():
    with pytest.raises(ValueError):
        isometry_order(6, "bruteforce")
    with pytest.raises(ValueError):
        isometry_order(4, "magic")
