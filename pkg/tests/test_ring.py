import itertools

import pytest
from hypothesis import given, strategies as st

from antisym.ring import (
    FiniteRing,
    RingError,
    make_cyclic_ring,
    make_product_ring,
    ring_add,
    ring_mul,
    ring_neg,
    two_torsion,
    two_torsion_square_is_zero,
)
from antisym.universe import bundled_rings

Z = make_cyclic_ring


def test_cyclic_ring_examples():
    assert (Z(3).order, Z(3).characteristic) == (3, 3)
    assert (Z(4).order, Z(4).characteristic) == (4, 4)
    with pytest.raises(RingError):
        Z(1)


def test_product_ring_examples():
    R = make_product_ring([Z(4), Z(2)])
    assert (R.order, R.characteristic, R.label) == (8, 4, "Z4xZ2")
    assert make_product_ring([Z(3)]) == Z(3)
    R = make_product_ring([Z(4), Z(3)])
    assert (R.order, R.characteristic) == (12, 12)
    with pytest.raises(RingError):
        make_product_ring([])


def test_arithmetic_examples():
    assert ring_add(Z(4), (2,), (2,)) == (0,)
    assert ring_mul(Z(6), (3,), (3,)) == (3,)
    R = make_product_ring([Z(4), Z(2)])
    assert ring_mul(R, (2, 1), (2, 1)) == (0, 1)
    with pytest.raises(RingError):
        ring_add(R, (1,), (1, 1))


def test_two_torsion_examples():
    assert two_torsion(Z(3)) == {(0,)}
    assert two_torsion(Z(4)) == {(0,), (2,)}
    R = make_product_ring([Z(4), Z(2)])
    assert two_torsion(R) == {(0, 0), (2, 0), (0, 1), (2, 1)}
    assert two_torsion_square_is_zero(Z(4))
    assert not two_torsion_square_is_zero(Z(6))
    assert two_torsion_square_is_zero(Z(3))
    assert not two_torsion_square_is_zero(R)


def test_element_helpers():
    R = make_product_ring([Z(4), Z(2)])
    assert R.element(5) == (1, 1)
    assert R.element(6, 3) == (2, 1)
    assert R.zero in R and (4, 0) not in R
    assert len(R.elements()) == R.order
    assert not Z(3).is_char_two and make_product_ring([Z(2), Z(2)]).is_char_two


RINGS = bundled_rings() + [Z(2), Z(8), make_product_ring([Z(2), Z(2)]), make_product_ring([Z(3), Z(5)])]


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_ring_axioms_exhaustive(R):
    elems = R.elements()
    if R.order > 64:
        pytest.skip("covered by the sampled test")
    for a, b in itertools.product(elems, repeat=2):
        assert ring_mul(R, a, b) == ring_mul(R, b, a)
        assert ring_add(R, a, ring_neg(R, a)) == R.zero
    for a, b, c in itertools.product(elems, repeat=3):
        assert ring_mul(R, a, ring_add(R, b, c)) == ring_add(R, ring_mul(R, a, b), ring_mul(R, a, c))
        assert ring_mul(R, a, ring_mul(R, b, c)) == ring_mul(R, ring_mul(R, a, b), c)


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_characteristic_is_additive_order_of_one(R):
    x, k = R.one, 1
    while x != R.zero:
        x, k = ring_add(R, x, R.one), k + 1
    assert k == R.characteristic


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_two_torsion_is_self_negative(R):
    assert two_torsion(R) == {a for a in R.elements() if ring_neg(R, a) == a}
    assert R.zero in two_torsion(R)


@pytest.mark.parametrize("m", range(2, 25, 2))
def test_even_cyclic_two_torsion(m):
    assert two_torsion(Z(m)) == {(0,), (m // 2,)}


moduli = st.lists(st.integers(2, 12), min_size=1, max_size=3)


@given(moduli, st.data())
def test_distributive_sampled(ms, data):
    R = FiniteRing(tuple(ms))
    elem = st.tuples(*(st.integers(0, m - 1) for m in ms))
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    assert ring_mul(R, a, ring_add(R, b, c)) == ring_add(R, ring_mul(R, a, b), ring_mul(R, a, c))
    assert ring_mul(R, a, b) == ring_mul(R, b, a)


@given(moduli)
def test_characteristic_is_lcm(ms):
    import math
    R = FiniteRing(tuple(ms))
    assert R.characteristic == math.lcm(*ms)
    assert R.order == math.prod(ms)
