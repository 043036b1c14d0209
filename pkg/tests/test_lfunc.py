import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lapoints import calibration
from lapoints.characters import character, enumerate_characters, primitive_characters
from lapoints.lfunc import (
    LDomainError,
    Method,
    NearAPointError,
    afe_error_shape,
    delta_factor,
    delta_factor_product_form,
    delta_log_deriv,
    evaluate,
    l_afe,
    l_pair,
    l_value,
    log_deriv_shifted,
    lprime_afe,
    root_number,
    xi_completed,
)
from lapoints.special import PoleError

CATALAN = 0.915965594177219


def mp_l(s, chi, deriv=0):
    coeffs = [complex(chi(n)) for n in range(chi.q)]
    with mpmath.workdps(25):
        return complex(mpmath.dirichlet(s, coeffs, deriv))


def test_reference_examples(chi4):
    assert l_value(2, chi4) == pytest.approx(CATALAN, abs=1e-14)
    assert l_value(1, chi4) == pytest.approx(math.pi / 4, abs=1e-13)
    assert l_value(2, character(1, 0)) == pytest.approx(math.pi**2 / 6, abs=1e-14)
    with pytest.raises(PoleError):
        l_value(1, character(4, 0))
    with pytest.raises(LDomainError):
        l_value(2, chi4, deriv=2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3, 1), (4, 1), (5, 1), (5, 2), (7, 2), (8, 1), (6, 1), (12, 2)]),
       st.floats(-1, 2), st.floats(-60, 60))
def test_reference_vs_mpmath(qi, sigma, t):
    chi = character(*qi)
    s = complex(sigma, t)
    # mpmath's own special-casing misbehaves within ~1e-30 of s = 0 and s = 1
    assume(abs(s) > 1e-6 and abs(s - 1) > 1e-6)
    v, d = l_pair(s, chi)
    rv, rd = mp_l(s, chi), mp_l(s, chi, 1)
    assert abs(v - rv) <= 1e-10 * max(1, abs(rv))
    assert abs(d - rd) <= 1e-9 * max(1, abs(rd))


def test_near_one_nonprincipal():
    # s = 1 is removable for nonprincipal characters
    for chi in (character(3, 1), character(5, 2), character(8, 3)):
        for eps in (1e-9, 1e-6j, 1e-3):
            v, d = l_pair(1 + eps, chi)
            assert abs(v - mp_l(1 + eps, chi)) < 1e-11
            assert abs(d - mp_l(1 + eps, chi, 1)) < 1e-10


def test_delta_examples(chi4):
    assert abs(delta_factor(0.5 + 25j, chi4)) == pytest.approx(1, abs=1e-9)
    assert abs(delta_log_deriv(0.5 + 100j, chi4) + math.log(4 * 100 / (2 * math.pi))) < 0.02
    zeta = character(1, 0)
    assert delta_factor(-1, zeta) * l_value(2, zeta) == pytest.approx(-1 / 12, abs=1e-12)


def test_delta_requires_primitive():
    with pytest.raises(LDomainError):
        delta_factor(0.5 + 3j, character(4, 0))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 11])
def test_functional_equation_random(q):
    rng = np.random.default_rng(q)
    for chi in primitive_characters(q):
        s = rng.uniform(-0.5, 1.5, 50) + 1j * rng.uniform(-50, 50, 50)
        lhs = l_value(s, chi)
        rhs = delta_factor(s, chi) * l_value(1 - s, chi.conj())
        assert np.max(np.abs(lhs - rhs) / np.abs(lhs)) < 1e-8


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_product_form_matches(q):
    for chi in primitive_characters(q):
        for s in (0.3 + 12j, 0.5 + 40j, -0.2 + 100j, 1 + 250j):
            assert abs(delta_factor_product_form(s, chi) / delta_factor(s, chi) - 1) < 1e-9


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_delta_log_deriv_fd(q):
    for chi in primitive_characters(q):
        s, h = 0.4 + 33j, 1e-5
        fd = (delta_factor(s + h, chi) - delta_factor(s - h, chi)) / (2 * h) / delta_factor(s, chi)
        assert abs(delta_log_deriv(s, chi) - fd) < 1e-7
        for t in (30, 100, 300):
            z = complex(0.3, t)
            assert abs(delta_log_deriv(z, chi) + math.log(q * t / (2 * math.pi))) <= 2 / t


def test_xi_examples():
    for chi in primitive_characters(5):
        s = 0.3 + 17.2j
        w = root_number(chi)
        lhs = xi_completed(s, chi)
        assert abs(lhs - w * xi_completed(1 - s, chi.conj())) / abs(lhs) < 1e-8
    chi4 = character(4, 1)
    s = 0.5 + 10j
    assert abs(xi_completed(s, chi4)) == pytest.approx(abs(xi_completed(1 - s.conjugate(), chi4.conj())), rel=1e-9)
    zeta = character(1, 0)
    assert xi_completed(2, zeta) == pytest.approx(xi_completed(-1, zeta), rel=1e-10)


def test_xi_high():
    chi = character(4, 1)
    s = 0.5 + 800j
    v = xi_completed(s, chi)
    assert np.isfinite(v)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(3, 1), (4, 1), (5, 1), (7, 4), (8, 3)]), st.floats(-1, 2), st.floats(-80, 80))
def test_conjugation(qi, sigma, t):
    chi = character(*qi)
    s = complex(sigma, t)
    assert abs(l_value(s.conjugate(), chi.conj()) - l_value(s, chi).conjugate()) < 1e-11 * max(1, abs(l_value(s, chi)))


def test_afe_examples(chi4):
    s = 0.5 + 50j
    assert abs(l_afe(s, chi4) - l_value(s, chi4)) <= 5 * 50**-0.25
    assert abs(lprime_afe(s, chi4) - l_value(s, chi4, 1)) <= 5 * 50**-0.25 * math.log(50)
    chi3 = character(3, 1)
    s = 0.8 + 100j
    assert abs(l_afe(s, chi3) - l_value(s, chi3)) <= calibration.afe_constant("rane", 3) * afe_error_shape(s, "rane_afe")


def test_afe_envelope_decreases(chi4):
    c = calibration.afe_constant("rane", 4)
    env = [c * t**-0.5 for t in (50, 100, 200, 400)]
    assert env == sorted(env, reverse=True)
    for t, e in zip((50, 100, 200, 400), env):
        s = complex(1, t)
        assert abs(l_afe(s, chi4) - l_value(s, chi4)) <= e


def test_lprime_edge_and_fd(chi4):
    s = 100j
    c = calibration.afe_constant("lprime", 4)
    assert abs(lprime_afe(s, chi4) - l_value(s, chi4, 1)) <= c * math.log(100)
    s, h = 0.5 + 80j, 1e-4
    fd = (l_afe(s + h, chi4) - l_afe(s - h, chi4)) / (2 * h)
    budget = c * afe_error_shape(s, "lprime_afe") + calibration.afe_constant("rane", 4) * afe_error_shape(s, "rane_afe")
    assert abs(lprime_afe(s, chi4) - fd) <= budget


def test_afe_domain(chi4):
    for bad in (1.2 + 50j, -0.1 + 50j, 0.5 + 5j):
        with pytest.raises(LDomainError):
            l_afe(bad, chi4)
        with pytest.raises(LDomainError):
            lprime_afe(bad, chi4)
    with pytest.raises(LDomainError):
        l_afe(0.5 + 50j, character(4, 0))


def test_evaluate_methods(chi4):
    s = 0.5 + 60j
    ref = evaluate(s, chi4)
    assert ref.method is Method.HURWITZ_DIRECT and ref.est_error < 1e-10
    r = evaluate(s, chi4, method="rane_afe")
    assert abs(r.value - ref.value) <= r.est_error
    lp = evaluate(s, chi4, deriv=1, method="lprime_afe")
    assert abs(lp.value - l_value(s, chi4, 1)) <= lp.est_error
    with pytest.raises(LDomainError):
        evaluate(s, chi4, deriv=1, method="rane_afe")
    with pytest.raises(LDomainError):
        evaluate(s, chi4, deriv=0, method="lprime_afe")


def test_log_deriv_shifted(chi4):
    # at sigma = 2, -L'/L = sum Lambda(n) chi(n) n^{-s}
    n = np.arange(2, 200001)
    from lapoints.arith import get_sieve

    lam = get_sieve().von_mangoldt_table(200000)[2:]
    series = -np.sum(lam * chi4.at(n) * n**-2.0)
    assert log_deriv_shifted(2, chi4, 0) == pytest.approx(series, abs=1e-5)
    s = 0.7 + 20j
    assert log_deriv_shifted(s, chi4, l_value(s, chi4) + 1) == pytest.approx(-l_value(s, chi4, 1), rel=1e-12)
    rho = 0.5 + 6.020948904697597j
    with pytest.raises(NearAPointError):
        log_deriv_shifted(rho, chi4, l_value(rho, chi4))


@pytest.mark.parametrize("chi", [c for q in (3, 4, 5, 7, 8, 12) for c in enumerate_characters(q)],
                         ids=lambda c: f"q{c.q}i{c.index}")
def test_derivative_integrity(chi):
    rng = np.random.default_rng(chi.q * 100 + chi.index)
    s = rng.uniform(0, 1, 20) + 1j * rng.uniform(1, 100, 20)
    h = 1e-5
    d = l_value(s, chi, 1)
    fd = (l_value(s + h, chi) - l_value(s - h, chi)) / (2 * h)
    assert np.max(np.abs(d - fd) / np.abs(d)) <= 1e-6
