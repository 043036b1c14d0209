"""Dirichlet L-functions: the Hurwitz reference evaluator, the functional
equation factor Delta(s, chi), the completed function xi, and the two
approximate functional equations (for L and for L')."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .characters import DirichletCharacter
from .special import (
    PoleError,
    _hurwitz_core,
    digamma,
    em_params,
    log_gamma,
)

AFE_T0 = 10.0
NEAR_APOINT = 1e-13


class LDomainError(ValueError):
    pass


class NearAPointError(ArithmeticError):
    """|L(s) - a| is too small to divide by."""


class Method(str, Enum):
    HURWITZ_DIRECT = "hurwitz_direct"
    RANE_AFE = "rane_afe"
    LPRIME_AFE = "lprime_afe"


@dataclass(frozen=True)
class LEvaluation:
    s: complex
    value: complex
    method: Method
    est_error: float
    derivative: complex | None = None


def _pole_piece(z: np.ndarray, xs: np.ndarray, weights: np.ndarray, want_deriv: bool):
    """sum_r w_r x_r^{1-s}/(s-1) and its s-derivative, assuming sum_r w_r = 0.

    Written as sum_r w_r (x_r^{1-s} - 1)/(s-1) so s = 1 is a removable point."""
    u = z - 1.0
    val = np.zeros_like(z)
    der = np.zeros_like(z) if want_deriv else None
    small = np.abs(u) * float(np.max(np.log(xs))) < 0.05
    for w, x in zip(weights, xs):
        lx = math.log(x)
        e = np.exp(-u * lx)
        with np.errstate(divide="ignore", invalid="ignore"):
            v = np.where(small, 0, np.expm1(-u * lx) / u)
            d = np.where(small, 0, (-lx * e * u - np.expm1(-u * lx)) / (u * u)) if want_deriv else None
        # series: sum_{k>=1} (-lx)^k u^{k-1}/k!
        vs = np.zeros_like(z)
        ds = np.zeros_like(z)
        for k in range(1, 16):
            vs += (-lx) ** k * u ** (k - 1) / math.factorial(k)
            if k >= 2:
                ds += (-lx) ** k * (k - 1) * u ** (k - 2) / math.factorial(k)
        val += w * np.where(small, vs, v)
        if want_deriv:
            der += w * np.where(small, ds, d)
    return val, der


def l_pair(s, chi: DirichletCharacter, want_deriv: bool = True):
    """(L(s, chi), L'(s, chi)) via L = q^{-s} sum_r chi(r) zeta(s, r/q)."""
    z = np.asarray(s, dtype=complex)
    scalar = z.ndim == 0
    shape = z.shape
    z = np.atleast_1d(z).ravel()
    q = chi.q
    if chi.is_principal and np.any(z == 1.0):
        raise PoleError("L(s, chi) has a pole at s=1 for principal chi")
    residues = [r for r in range(1, q + 1) if chi(r) != 0]
    weights = np.array([chi(r) for r in residues])
    params = em_params(z, 1.0 / q)
    acc = np.zeros_like(z)
    dacc = np.zeros_like(z) if want_deriv else None
    for r, w in zip(residues, weights):
        v, d = _hurwitz_core(z, r / q, params, want_deriv, pole_term=False)
        acc += w * v
        if want_deriv:
            dacc += w * d
    xs = np.array([params.shift + r / q for r in residues])
    # x^{1-s}/(s-1) summed with the character weights
    if chi.is_principal:
        u = z - 1.0
        for w, x in zip(weights, xs):
            lx = math.log(x)
            e = np.exp(-u * lx)
            acc += w * e / u
            if want_deriv:
                dacc += w * (-lx * e / u - e / (u * u))
    else:
        pv, pd = _pole_piece(z, xs, weights, want_deriv)
        acc += pv
        if want_deriv:
            dacc += pd
    lq = math.log(q)
    qs = np.exp(-z * lq)
    val = qs * acc
    der = (-lq * val + qs * dacc) if want_deriv else None
    if scalar:
        return complex(val[0]), (complex(der[0]) if want_deriv else None)
    return val.reshape(shape), (der.reshape(shape) if want_deriv else None)


def l_value(s, chi: DirichletCharacter, deriv: int = 0):
    if deriv not in (0, 1):
        raise LDomainError("deriv must be 0 or 1")
    v, d = l_pair(s, chi, want_deriv=bool(deriv))
    return d if deriv else v


def _require_primitive(chi: DirichletCharacter):
    if not chi.is_primitive:
        raise LDomainError(f"character {chi.char_id} is not primitive")


@lru_cache(maxsize=None)
def root_number(chi: DirichletCharacter) -> complex:
    """tau(chi) / (i^nu sqrt(q))."""
    return chi.gauss_sum() / (cmath.exp(0.5j * math.pi * chi.parity) * math.sqrt(chi.q))


def log_delta_factor(s, chi: DirichletCharacter):
    _require_primitive(chi)
    z = np.asarray(s, dtype=complex)
    nu = chi.parity
    tau = chi.gauss_sum()
    const = cmath.log(tau / (cmath.exp(0.5j * math.pi * nu) * math.sqrt(math.pi)))
    return const + z * math.log(math.pi / chi.q) + log_gamma(0.5 * (1 - z + nu)) - log_gamma(0.5 * (z + nu))


def delta_factor(s, chi: DirichletCharacter):
    """Delta(s, chi) with L(s, chi) = Delta(s, chi) L(1-s, conj chi)."""
    return np.exp(log_delta_factor(s, chi)) if np.ndim(s) else cmath.exp(log_delta_factor(s, chi))


def delta_factor_product_form(s, chi: DirichletCharacter):
    """i tau(chi) chi(-1) (2 pi)^{s-1} q^{-s} Gamma(1-s) e^{-i pi s/2}.

    This is the leading piece of Delta for Im s > 0; it differs from
    delta_factor by a relative O(exp(-pi Im s))."""
    _require_primitive(chi)
    z = np.asarray(s, dtype=complex)
    tau = chi.gauss_sum()
    logv = (z - 1) * math.log(2 * math.pi) - z * math.log(chi.q) + log_gamma(1 - z) - 0.5j * math.pi * z
    out = 1j * tau * chi(-1) * np.exp(logv)
    return complex(out) if out.ndim == 0 else out


def delta_log_deriv(s, chi: DirichletCharacter):
    """Delta'/Delta(s, chi) = log(pi/q) - psi((1-s+nu)/2)/2 - psi((s+nu)/2)/2."""
    _require_primitive(chi)
    z = np.asarray(s, dtype=complex)
    nu = chi.parity
    out = math.log(math.pi / chi.q) - 0.5 * digamma(0.5 * (1 - z + nu)) - 0.5 * digamma(0.5 * (z + nu))
    return complex(out) if np.ndim(out) == 0 else out


def log_xi_completed(s, chi: DirichletCharacter):
    """log xi(s, chi); the Gamma factor underflows binary64 near Im s ~ 900."""
    _require_primitive(chi)
    z = np.asarray(s, dtype=complex)
    nu = chi.parity
    w = 0.5 * (z + nu)
    return w * math.log(chi.q / math.pi) + log_gamma(w) + np.log(l_value(z, chi))


def xi_completed(s, chi: DirichletCharacter):
    """xi(s, chi) = (q/pi)^{(s+nu)/2} Gamma((s+nu)/2) L(s, chi)."""
    out = np.exp(log_xi_completed(s, chi))
    return complex(out) if np.ndim(out) == 0 else out


def _check_afe_domain(z: complex):
    if not (0.0 <= z.real <= 1.0):
        raise LDomainError(f"approximate functional equation needs 0 <= Re s <= 1, got {z}")
    if z.imag < AFE_T0:
        raise LDomainError(f"approximate functional equation needs Im s >= {AFE_T0}, got {z}")


def _afe_sums(z: complex, chi: DirichletCharacter):
    t = z.imag
    x = math.sqrt(chi.q * t / (2 * math.pi))
    n = np.arange(1, int(math.floor(x)) + 1)
    c = chi.at(n)
    logn = np.log(n)
    ns = np.exp(-z * logn)  # n^{-s}
    ns1 = np.exp((z - 1) * logn)  # n^{s-1}
    cc = np.conj(c)
    return {
        "first": complex(np.sum(c * ns)),
        "first_log": complex(np.sum(c * logn * ns)),
        "second": complex(np.sum(cc * ns1)),
        "second_log": complex(np.sum(cc * logn * ns1)),
    }


def _afe_constant(kind: str, q: int) -> float:
    from .calibration import afe_constant

    return afe_constant(kind, q)


def l_afe(s: complex, chi: DirichletCharacter) -> complex:
    """Two-sum approximate functional equation of length sqrt(qt/2pi) for L."""
    _require_primitive(chi)
    z = complex(s)
    _check_afe_domain(z)
    sums = _afe_sums(z, chi)
    return sums["first"] + delta_factor(z, chi) * sums["second"]


def lprime_afe(s: complex, chi: DirichletCharacter) -> complex:
    """Approximate functional equation for L' with Delta'/Delta replaced by -log(qt/2pi)."""
    _require_primitive(chi)
    z = complex(s)
    _check_afe_domain(z)
    sums = _afe_sums(z, chi)
    delta = delta_factor(z, chi)
    logqt = math.log(chi.q * z.imag / (2 * math.pi))
    return -sums["first_log"] - logqt * delta * sums["second"] + delta * sums["second_log"]


def afe_error_shape(s: complex, method: Method | str) -> float:
    """t^{-sigma/2}, times log t for the L' expansion."""
    z = complex(s)
    t = z.imag
    shape = t ** (-z.real / 2)
    if Method(method) is Method.LPRIME_AFE:
        shape *= math.log(t)
    return shape


def evaluate(s: complex, chi: DirichletCharacter, deriv: int = 0, method: Method | str = Method.HURWITZ_DIRECT) -> LEvaluation:
    method = Method(method)
    z = complex(s)
    if method is Method.HURWITZ_DIRECT:
        v, d = l_pair(z, chi, want_deriv=bool(deriv))
        scale = max(1.0, abs(d if deriv else v))
        return LEvaluation(z, d if deriv else v, method, 1e-12 * scale, d)
    if method is Method.RANE_AFE:
        if deriv:
            raise LDomainError("rane_afe evaluates L only; use lprime_afe for L'")
        v = l_afe(z, chi)
        return LEvaluation(z, v, method, _afe_constant("rane", chi.q) * afe_error_shape(z, method))
    if not deriv:
        raise LDomainError("lprime_afe evaluates L' only")
    v = lprime_afe(z, chi)
    return LEvaluation(z, v, method, _afe_constant("lprime", chi.q) * afe_error_shape(z, method), v)


def log_deriv_shifted(s, chi: DirichletCharacter, a: complex):
    """L'(s, chi) / (L(s, chi) - a)."""
    v, d = l_pair(s, chi)
    den = np.asarray(v) - a
    if np.any(np.abs(den) < NEAR_APOINT):
        raise NearAPointError(f"|L(s) - a| < {NEAR_APOINT:g}: s is (numerically) an a-point")
    out = np.asarray(d) / den
    return complex(out) if out.ndim == 0 else out
