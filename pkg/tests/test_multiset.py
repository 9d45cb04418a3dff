"""Count-vector multisets and multirelations."""

import pytest
from hypothesis import given, strategies as st

from linkalg.multiset import (
    MRel,
    Multiset,
    compose_m,
    identity_m,
    lift_m,
    random_mrel,
    unit,
    zero,
)


counts = st.lists(st.integers(min_value=0, max_value=5), min_size=0, max_size=4).map(tuple)


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        Multiset((1, -1))


def test_difference_partial():
    a, b = Multiset((2, 1)), Multiset((1, 1))
    assert (a - b).counts == (1, 0)
    with pytest.raises(ValueError, match="negative"):
        b - a


def test_base_mismatch_rejected():
    with pytest.raises(ValueError):
        Multiset((1,)) + Multiset((1, 2))


@given(counts, counts)
def test_order_is_pointwise(a, b):
    if len(a) != len(b):
        return
    ma, mb = Multiset(a), Multiset(b)
    assert (ma >= mb) == all(x >= y for x, y in zip(a, b))


@given(counts)
def test_add_sub_round_trip(a):
    m = Multiset(a)
    z = zero(len(a))
    assert m + z == m
    assert m - z == m
    assert (m + m) - m == m
    assert 2 * m == m + m


def test_unit_and_zero():
    assert unit(3, 1).counts == (0, 1, 0)
    assert zero(2).counts == (0, 0)
    with pytest.raises(ValueError):
        unit(2, 2)


def test_mrel_shape_validation():
    with pytest.raises(ValueError):
        MRel(2, 1, (Multiset((0,)),))
    with pytest.raises(ValueError):
        MRel(1, 2, (Multiset((0,)),))


def test_lift_is_linear(rng):
    for _ in range(50):
        f = random_mrel(rng)
        u = Multiset(tuple(rng.randint(0, 3) for _ in range(f.dom)))
        v = Multiset(tuple(rng.randint(0, 3) for _ in range(f.dom)))
        assert lift_m(f, u + v) == lift_m(f, u) + lift_m(f, v)
        assert lift_m(f, 2 * u) == 2 * lift_m(f, u)
        assert lift_m(f, zero(f.dom)) == zero(f.cod)


def test_compose_is_matrix_product(rng):
    """Direct matrix multiplication as the oracle."""
    for _ in range(60):
        f = random_mrel(rng)
        g = random_mrel(rng, dom=f.cod)
        got = compose_m(f, g).to_matrix()
        a, b = f.to_matrix(), g.to_matrix()
        want = [
            [sum(a[i][k] * b[k][j] for k in range(f.cod)) for j in range(g.cod)]
            for i in range(f.dom)
        ]
        assert got == want


def test_category_laws(rng):
    for _ in range(40):
        f = random_mrel(rng)
        g = random_mrel(rng, dom=f.cod)
        h = random_mrel(rng, dom=g.cod)
        assert compose_m(identity_m(f.dom), f) == f
        assert compose_m(f, identity_m(f.cod)) == f
        assert compose_m(compose_m(f, g), h) == compose_m(f, compose_m(g, h))


def test_matrix_round_trip():
    m = [[1, 0, 2], [0, 3, 0]]
    assert MRel.from_matrix(m).to_matrix() == m
    assert MRel.from_matrix([], cod=3).dom == 0
    with pytest.raises(ValueError):
        MRel.from_matrix([])
