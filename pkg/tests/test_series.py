import random

import pytest
from hypothesis import given, settings

from asynum.errors import BoundExceeded, DimensionMismatch
from asynum.numerosity import equinumerous
from asynum.pointset import AP, EVENS, NAT, ODDS, Finite, Lift, Range, count
from asynum.sampling import random_expr
from asynum.series import (ONE, ZERO, SeriesExpr, decompose_bounded, mul_series, phi,
                           phi_sequence, positive_to_characteristic, series_of_set)
from strategies import seeds


def random_series(seed):
    rng = random.Random(seed)
    terms = tuple((rng.randint(-3, 3), random_expr(rng, rng.randint(1, 2), 1))
                  for _ in range(rng.randint(0, 3)))
    return SeriesExpr(rng.randint(-4, 4), terms)


@settings(max_examples=60, deadline=None)
@given(seeds, seeds)
def test_phi_is_a_ring_homomorphism(s1, s2):
    S, T = random_series(s1), random_series(s2)
    for n in range(0, 17, 4):
        assert phi(S + T, n) == phi(S, n) + phi(T, n)
        assert phi(S * T, n) == phi(S, n) * phi(T, n)
        assert phi(S - T, n) == phi(S, n) - phi(T, n)


def test_units_and_text():
    S = series_of_set(EVENS)
    assert (S * ONE) == S and (S + ZERO) == S
    assert series_of_set(Finite((), 1)) == ZERO
    assert (S - S).is_zero()
    assert (2 * S - 1).text() == "-1 + 2*S[ap(0,2)]"
    assert phi_sequence(S + series_of_set(ODDS), 5) == [1, 2, 3, 4, 5, 6]


def test_lifted_characteristic_vanishes():
    # S[lift(t, X)] - S[X] is zero under phi from n = max(t) on
    for t in [(0,), (3,), (1, 4)]:
        D = series_of_set(Lift(t, NAT * EVENS)) - series_of_set(NAT * EVENS)
        assert all(phi(D, n) == 0 for n in range(max(t), 33))
        assert equinumerous(Lift(t, NAT * EVENS), NAT * EVENS).kind == "Equal"


def test_product_order_is_kept():
    X, Y = series_of_set(EVENS), series_of_set(Range(0, 3))
    assert X * Y != Y * X
    assert phi_sequence(X * Y - Y * X, 20) == [0] * 21


def test_decompose_bounded():
    vals = {(4,): 3, (2, 3): -1, (0,): 1}
    d = decompose_bounded(vals, 3, d=2, constant=2)
    for x, a in vals.items():
        assert d.coefficient(x) == a
    assert d.coefficient((9,)) == 0
    assert sorted(d.X) == [(1, 1), (2, 1), (3, 1)] and sorted(d.Y) == [(1, 2)]
    S = d.to_series()
    assert phi(S, 5) == 2 + 3 + 1 - 1
    assert decompose_bounded({}, 2).is_empty()
    with pytest.raises(BoundExceeded):
        decompose_bounded({(1,): 5}, 4)
    with pytest.raises(DimensionMismatch):
        decompose_bounded({(1, 2, 3): 1}, 4, d=2)


@pytest.mark.parametrize("P, B, d", [
    (SeriesExpr(0, ((2, AP(5, 1)),)), 2, 1),
    (SeriesExpr(0, ((1, AP(2, 1)), (1, AP(3, 1)))), 1, 1),
    (SeriesExpr(3, ((3, NAT), (3, NAT * NAT))), 3, 2),
    (SeriesExpr(1, ((2, EVENS * ODDS),)), 2, 2),
    (SeriesExpr(4), 4, 1),
])
def test_positive_to_characteristic(P, B, d):
    c = positive_to_characteristic(P, B, d, H=32)
    assert c.n0 <= 1
    assert 2 ** c.k > B * 2 ** d
    for n in range(max(c.n0, 0), 33):
        assert count(c.X, n) == phi(P, n)
    words = [w for w, _ in c.tags]
    # prefix-free tags
    for a in words:
        for b in words:
            assert a is b or a != b[:len(a)]


def test_positive_to_characteristic_examples():
    c = positive_to_characteristic(SeriesExpr(0, ((2, AP(5, 1)),)), 2, 1)
    assert c.k == 3 and c.n0 == 0
    c = positive_to_characteristic(SeriesExpr(0, ((1, AP(2, 1)), (1, AP(3, 1)))), 1, 1)
    assert c.k == 2
    with pytest.raises(BoundExceeded):
        positive_to_characteristic(SeriesExpr(0, ((-1, NAT),)), 2, 1)
    with pytest.raises(DimensionMismatch):
        positive_to_characteristic(SeriesExpr(0, ((1, NAT * NAT),)), 2, 1)
