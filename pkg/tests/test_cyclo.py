"""Exact cyclotomic arithmetic against sympy/mpmath oracles and field axioms."""

from fractions import Fraction

import mpmath as mp
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lzero import CycloElt, IncompatibleOrders, IntPoly, cyclotomic_poly
from lzero.cyclo import phi_degree, zeta_power_vector


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@pytest.mark.parametrize("k", list(range(1, 61)) + [105])
def test_cyclotomic_poly_matches_sympy(k):
    x = sympy.symbols("x")
    want = [int(c) for c in reversed(sympy.cyclotomic_poly(k, x).as_poly(x).all_coeffs())]
    assert list(cyclotomic_poly(k).coeffs) == want


def test_cyclotomic_product_is_x_n_minus_1():
    for n in (1, 2, 6, 12, 30):
        prod = IntPoly.of(1)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        want = [-1] + [0] * (n - 1) + [1]
        assert list(prod.coeffs) == want


def test_intpoly_divmod_roundtrip():
    a = IntPoly.of(3, 0, -2, 1, 5)
    b = IntPoly.of(-1, 1, 1)
    q, r = divmod(a, b)
    got = b * q + r
    assert list(got.coeffs) == list(a.coeffs)
    assert r.degree < b.degree


# ---------------------------------------------------------------------------
# CycloElt: frozen anchors


def test_zeta_basics():
    z5 = CycloElt.zeta(5)
    assert z5 ** 5 == CycloElt.one()
    assert z5 ** 4 == z5.inverse()
    # Phi_5(zeta_5) = 0
    acc = CycloElt.zero(5)
    for i in range(5):
        acc = acc + z5 ** i
    # 1 + z + z^2 + z^3 + z^4 = 0
    assert acc.is_zero()


def test_cross_order_identities():
    # zeta_6 = -zeta_3^2 and zeta_2 = -1 hold after merging orders.
    assert CycloElt.zeta(6) == -(CycloElt.zeta(3) ** 2)
    assert CycloElt.zeta(2) == CycloElt.rational(-1)
    assert CycloElt.zeta(4) ** 2 == CycloElt.rational(-1)


def test_embed_into_requires_divisibility():
    with pytest.raises(IncompatibleOrders):
        CycloElt.zeta(5).embed_into(12)


def test_rational_value_and_integrality():
    half = CycloElt.rational(Fraction(1, 2), 12)
    assert half.rational_value() == Fraction(1, 2)
    assert not half.is_algebraic_integer()
    assert CycloElt.zeta(12).is_algebraic_integer()
    assert CycloElt.zeta(12).rational_value() is None


def test_norm_of_one_minus_zeta_p():
    # N(1 - zeta_p) = p for prime p.
    for p in (3, 5, 7, 11, 13):
        elt = CycloElt.one(p) - CycloElt.zeta(p)
        assert elt.norm() == p


def test_galois_conjugates_product_is_norm():
    a = CycloElt(5, [1, 2, 0, -1])
    prod = CycloElt.one(5)
    for c in a.conjugates():
        prod = prod * c
    assert prod.rational_value() == a.norm()


def test_from_strings_roundtrip():
    a = CycloElt(8, [Fraction(3, 5), 0, Fraction(-1, 7), 2])
    assert CycloElt.from_strings(8, a.coord_strings()) == a


def test_zeta_power_vector_matches_zeta():
    for k in (7, 8, 9, 12):
        for m in range(2 * k):
            assert CycloElt(k, zeta_power_vector(k, m)) == CycloElt.zeta(k, m)


# ---------------------------------------------------------------------------
# numeric oracle: embed into C via mpmath


def _to_complex(a: CycloElt) -> mp.mpc:
    z = mp.exp(2j * mp.pi / a.order)
    return mp.fsum(
        (mp.mpc(c.numerator) / c.denominator * z ** i for i, c in enumerate(a.coords)),
        absolute=False,
    )


def test_arithmetic_matches_complex_embedding():
    mp.mp.dps = 40
    a = CycloElt(12, [Fraction(1, 3), 2, 0, -1])
    b = CycloElt(12, [0, Fraction(5, 7), 1, 1])
    for got, want in [
        (a * b, _to_complex(a) * _to_complex(b)),
        (a + b, _to_complex(a) + _to_complex(b)),
        (a.inverse(), 1 / _to_complex(a)),
        (a ** 3, _to_complex(a) ** 3),
        (a.embed_into(36), _to_complex(a)),
    ]:
        assert abs(_to_complex(got) - want) < mp.mpf("1e-30")


# ---------------------------------------------------------------------------
# field axioms on random elements


def _elts(order):
    frac = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
    )
    d = phi_degree(order)
    return st.lists(frac, min_size=d, max_size=d).map(lambda cs: CycloElt(order, cs))


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([3, 4, 5, 8, 9, 12]))
def test_ring_axioms(data, order):
    a = data.draw(_elts(order))
    b = data.draw(_elts(order))
    c = data.draw(_elts(order))
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == CycloElt.zero(order)
    assert a * CycloElt.one(order) == a


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([3, 4, 5, 8, 12]))
def test_inverse_and_norm_multiplicativity(data, order):
    a = data.draw(_elts(order))
    b = data.draw(_elts(order))
    if not a.is_zero():
        assert a * a.inverse() == CycloElt.one(order)
        assert (a / a) == CycloElt.one(order)
    assert (a * b).norm() == a.norm() * b.norm()


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from([5, 8, 12]))
def test_galois_action_is_ring_morphism(data, order):
    a = data.draw(_elts(order))
    b = data.draw(_elts(order))
    from math import gcd

    for j in range(1, order):
        if gcd(j, order) != 1:
            continue
        assert (a * b).galois_conj(j) == a.galois_conj(j) * b.galois_conj(j)
        assert (a + b).galois_conj(j) == a.galois_conj(j) + b.galois_conj(j)
        assert CycloElt.zeta(order).galois_conj(j) == CycloElt.zeta(order, j)


def test_mixed_order_arithmetic_merges():
    a = CycloElt.zeta(3) + CycloElt.zeta(4)
    assert a.order == 12
    # (z3 + z4)(z3^2 + z4^3) = 1 + z3 z4^3 + z3^2 z4 + 1
    lhs = a * (CycloElt.zeta(3, 2) + CycloElt.zeta(4, 3))
    rhs = (
        CycloElt.rational(2)
        + CycloElt.zeta(12, 4 + 9)
        + CycloElt.zeta(12, 8 + 3)
    )
    assert lhs == rhs
