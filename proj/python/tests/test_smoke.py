import math

import pytest

import _ezeta as ez

PI = math.pi


def test_riemann_zeta_basics():
    assert ez.riemann_zeta(2) == pytest.approx(PI**2 / 6, abs=1e-14)
    assert ez.riemann_zeta(4) == pytest.approx(PI**4 / 90, abs=1e-14)


def test_extended_mzv_euler_identity():
    nat = ez.sequence("natural")
    r = ez.extended_mzv(nat, [2, 1])
    assert r.converged
    assert r.value.real == pytest.approx(ez.riemann_zeta(3), abs=1e-10)


def test_star_mzv():
    nat = ez.sequence("natural")
    r = ez.extended_star_mzv(nat, [2, 1])
    assert r.value.real == pytest.approx(2 * ez.riemann_zeta(3), abs=1e-10)


def test_complementary_fixed_point():
    nat = ez.sequence("natural")
    c = ez.complementary_term(nat, 5)
    assert c.inv_value.real == pytest.approx(0.2, abs=1e-10)


def test_pronic_closed_form_values():
    assert ez.cf_pronic(2) == pytest.approx(0.0, abs=1e-12)
    expected = -7 + 5 * PI**2 / 6 - ez.riemann_zeta(3)
    assert ez.cf_pronic(3) == pytest.approx(expected, abs=1e-12)


def test_bessel_zero_half_order():
    assert ez.bessel_zero(0.5, 3) == pytest.approx(3 * PI, abs=1e-12)


def test_bessel_small_values():
    assert ez.cf_bessel_small(0.0, 2) == pytest.approx(0.25)
    assert ez.cf_bessel_small(0.5, 2) == pytest.approx(1 / 6)


def test_verify_euler_report():
    odd = ez.sequence("odd")
    report = ez.verify_euler(odd)
    assert report.passed
    assert report.residual < 1e-8


def test_verify_besselpoly():
    report = ez.verify_besselpoly(3, 0)
    assert report.passed
    assert report.residual < 1e-10


def test_explicit_sequence_validation():
    with pytest.raises(ValueError):
        ez.sequence("explicit", values=[1.0, 0.0, 2.0])


def test_divergent_series_raises():
    nat = ez.sequence("natural")
    with pytest.raises(ArithmeticError):
        ez.extended_zeta(nat, 1.0)
