"""The derivation ring, its exponential, and the substitution maps."""

import math
from fractions import Fraction

import pytest

from umbralcalc.errors import (
    IndexOutOfRange,
    NotDeltaSeries,
    OrderTooSmall,
    UnsupportedVariable,
)
from umbralcalc.genseries import GenSeries
from umbralcalc.polyring import (
    MultiPoly,
    derivation,
    derivation_powers,
    exp_derivation,
    generic_composite_series,
    specialize_fock,
    specialize_x,
    specialize_y,
    to_univar,
)
from umbralcalc.sampling import random_delta, random_multipoly, random_series, rng_for
from umbralcalc.series import TruncatedSeries, exp_t
from umbralcalc.umbral import composed_expansion
from umbralcalc.univar import UnivarPoly

F = Fraction

Y = MultiPoly.y
X = MultiPoly.x


# -- the derivation ------------------------------------------------------------


def test_derivation_on_generators():
    assert derivation(Y(0)) == Y(1) * X(1)
    assert derivation(X(1)) == X(2)
    assert derivation(Y(-1)) == Y(0) * X(1)


def test_derivation_twice_on_y0():
    expected = Y(2) * X(1) * X(1) + Y(1) * X(2)
    assert derivation(derivation(Y(0))) == expected


def test_derivation_product_rule():
    rng = rng_for(0, "product-rule")
    for _ in range(10):
        p = random_multipoly(rng)
        q = random_multipoly(rng)
        lhs = derivation(p * q)
        rhs = derivation(p) * q + p * derivation(q)
        assert lhs == rhs


def test_derivation_rejects_plain_variables():
    with pytest.raises(UnsupportedVariable):
        derivation(MultiPoly.plain_x())
    with pytest.raises(UnsupportedVariable):
        derivation(MultiPoly.plain_w())


def test_y_floor():
    with pytest.raises(IndexOutOfRange):
        Y(-5)
    assert Y(-5, floor=-6)  # explicit floor admits deeper indices
    with pytest.raises(IndexOutOfRange):
        X(0)


# -- e^(wD) ----------------------------------------------------------------------


def test_exp_derivation_order_zero():
    p = Y(0) * X(1)
    assert exp_derivation(p, 0) == GenSeries([p])


def test_exp_derivation_y0_to_order_two():
    gs = exp_derivation(Y(0), 2)
    assert gs.coeff(0) == Y(0)
    assert gs.coeff(1) == Y(1) * X(1)
    assert gs.coeff(2) == F(1, 2) * (Y(2) * X(1) * X(1) + Y(1) * X(2))


def test_exp_derivation_is_algebra_map():
    rng = rng_for(1, "automorphism")
    for _ in range(5):
        p = random_multipoly(rng)
        q = random_multipoly(rng)
        lhs = exp_derivation(p * q, 6)
        rhs = exp_derivation(p, 6) * exp_derivation(q, 6)
        assert lhs == rhs


# -- substitution maps -------------------------------------------------------------


def _b_series(order=8):
    # e^t - 1: EGF coefficients B_j = 1 for j >= 1
    return exp_t(order) - 1


def test_specialize_x_on_generators():
    b = random_delta(rng_for(2, "chi"), 8)
    assert specialize_x(X(2), b) == b.egf(2) * MultiPoly.plain_x()
    assert specialize_x(Y(3), b) == Y(3)
    expected = b.egf(1) * b.egf(2) * MultiPoly.plain_x() ** 2
    assert specialize_x(X(1) * X(2), b) == expected


def test_specialize_x_errors():
    b = _b_series(2)
    with pytest.raises(OrderTooSmall):
        specialize_x(X(3), b)
    with pytest.raises(NotDeltaSeries):
        specialize_x(X(1), exp_t(8))
    with pytest.raises(UnsupportedVariable):
        specialize_x(MultiPoly.plain_x(), _b_series(8))


def test_specialize_y_on_generators():
    a = random_series(rng_for(3, "psi"), 8)
    assert specialize_y(Y(2), a) == MultiPoly.const(a.egf(2))
    assert specialize_y(MultiPoly.plain_x(), a) == MultiPoly.plain_x()
    lhs = specialize_y(Y(0) * Y(1) * MultiPoly.plain_x() ** 3, a)
    assert lhs == a.egf(0) * a.egf(1) * MultiPoly.plain_x() ** 3


def test_specialize_y_negative_indices_default_to_zero():
    a = random_series(rng_for(4, "psi-neg"), 6)
    assert specialize_y(Y(-1), a) == MultiPoly.zero()
    assert specialize_y(Y(-1), a, extension={-1: F(7)}) == MultiPoly.const(7)


def test_specialize_y_errors():
    a = random_series(rng_for(5, "psi-err"), 2)
    with pytest.raises(OrderTooSmall):
        specialize_y(Y(3), a)
    with pytest.raises(UnsupportedVariable):
        specialize_y(X(1), a)


def test_specialize_fock():
    b = _b_series(8)
    assert specialize_fock(MultiPoly.one(), b) == MultiPoly.one()
    assert specialize_fock(X(3), b) == b.egf(3) * MultiPoly.plain_x()
    assert specialize_fock(X(1) * X(1), b) == b.egf(1) ** 2 * MultiPoly.plain_x() ** 2
    with pytest.raises(UnsupportedVariable):
        specialize_fock(Y(0), b)


def test_homomorphism_laws():
    rng = rng_for(6, "homs")
    b = random_delta(rng, 10)
    a = random_series(rng, 10)
    for _ in range(5):
        p = random_multipoly(rng)
        q = random_multipoly(rng)
        assert specialize_x(p * q, b) == specialize_x(p, b) * specialize_x(q, b)
        xp = specialize_x(p, b)
        xq = specialize_x(q, b)
        assert specialize_y(xp * xq, a) == specialize_y(xp, a) * specialize_y(xq, a)


def test_to_univar():
    p = 3 * MultiPoly.plain_x() ** 2 + MultiPoly.const(F(1, 2))
    assert to_univar(p) == UnivarPoly([F(1, 2), 0, 3])
    with pytest.raises(UnsupportedVariable):
        to_univar(Y(0))


# -- the nested-series expansion ----------------------------------------------------


def test_generic_composite_series_low_orders():
    gs = generic_composite_series(2)
    assert gs.coeff(0) == Y(0)
    assert gs.coeff(1) == Y(1) * X(1)
    assert gs.coeff(2) == F(1, 2) * (Y(2) * X(1) * X(1) + Y(1) * X(2))


def test_generic_composite_matches_exp_derivation():
    assert exp_derivation(Y(0), 10) == generic_composite_series(10)


def test_generic_composite_specializes_to_exp_xw():
    # with B = t and all y-coefficients 1 the whole series becomes e^(xw)
    gs = generic_composite_series(6)
    t = TruncatedSeries.identity(6)
    e = exp_t(6)
    img = gs.map(lambda q: to_univar(specialize_y(specialize_x(q, t), e)))
    x = UnivarPoly.x()
    for k in range(7):
        assert img.coeff(k) == x**k / F(math.factorial(k))


# -- the identity chain: substituted images of y_n and x_n ---------------------------


def test_chain_images_of_y_indices():
    """psi_A chi_B e^(wD) y_n gives the w-expansion of the n-th EGF shift of A
    evaluated at x B(w)."""
    rng = rng_for(7, "chain-y")
    order = 6
    a = random_series(rng, order + 4)
    b = random_delta(rng, order + 4)
    for n in (-1, 0, 1, 2, 3):
        gs = exp_derivation(Y(n), order)
        img = gs.map(lambda q: to_univar(specialize_y(specialize_x(q, b), a)))
        expect = composed_expansion(a.egf_shift(n).truncate(order), b, order)
        assert img == expect


def test_chain_images_of_x_indices():
    """psi_A chi_B e^(wD) x_n gives x times the n-th EGF shift of B."""
    rng = rng_for(8, "chain-x")
    order = 6
    a = random_series(rng, order + 4)
    b = random_delta(rng, order + 4)
    x = UnivarPoly.x()
    for n in (1, 2, 3):
        gs = exp_derivation(X(n), order)
        img = gs.map(lambda q: to_univar(specialize_y(specialize_x(q, b), a)))
        shifted = b.egf_shift(n)
        expect = GenSeries([x * shifted.coeff(k) for k in range(order + 1)])
        assert img == expect


def test_derivation_powers_prefix():
    powers = derivation_powers(Y(0), 3)
    assert len(powers) == 4
    assert powers[1] == derivation(Y(0))
    assert powers[3] == derivation(derivation(derivation(Y(0))))
