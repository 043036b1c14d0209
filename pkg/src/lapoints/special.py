"""Complex log-Gamma, digamma and Hurwitz zeta (with d/ds) in binary64.

Every routine accepts a scalar or an ndarray of complex arguments and returns
the same shape. Hurwitz zeta uses Euler-Maclaurin summation; log-Gamma and
digamma shift the argument right by recurrence and then apply the Stirling
series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

LOG_2PI = math.log(2 * math.pi)
STIRLING_TERMS = 12
STIRLING_MIN_ABS = 16.0
EM_BERNOULLI_TERMS = 12
EM_TARGET = 1e-12


class PoleError(ZeroDivisionError):
    pass


class SpecialDomainError(ValueError):
    pass


@lru_cache(maxsize=None)
def bernoulli_even(count: int) -> tuple[float, ...]:
    """B_2, B_4, ..., B_{2 count} (Akiyama-Tanigawa)."""
    n_max = 2 * count
    a = [Fraction(0)] * (n_max + 1)
    out = []
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(float(a[0]))
    return tuple(out)


def _as_array(s):
    arr = np.asarray(s, dtype=complex)
    return arr, arr.ndim == 0


def _check_gamma_poles(z: np.ndarray):
    bad = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    if np.any(bad):
        raise PoleError(f"Gamma has a pole at {z[bad].ravel()[0]}")


def log_gamma(s):
    """Principal branch of log Gamma(s) (the one continuous on C minus (-inf, 0])."""
    z, scalar = _as_array(s)
    z = np.atleast_1d(z)
    _check_gamma_poles(z)
    # shift until Re w >= STIRLING_MIN_ABS; the recurrence uses principal logs
    shift = int(max(0, math.ceil(STIRLING_MIN_ABS - float(np.min(z.real))))) if z.size else 0
    acc = np.zeros_like(z)
    for k in range(shift):
        acc += np.log(z + k)
    w = z + shift
    out = (w - 0.5) * np.log(w) - w + 0.5 * LOG_2PI
    inv = 1.0 / w
    inv2 = inv * inv
    pw = inv
    for k, b in enumerate(bernoulli_even(STIRLING_TERMS), start=1):
        out += b / (2 * k * (2 * k - 1)) * pw
        pw = pw * inv2
    out -= acc
    return complex(out[0]) if scalar else out


def digamma(s):
    """psi(s) = Gamma'(s)/Gamma(s)."""
    z, scalar = _as_array(s)
    z = np.atleast_1d(z)
    _check_gamma_poles(z)
    shift = int(max(0, math.ceil(STIRLING_MIN_ABS - float(np.min(z.real))))) if z.size else 0
    acc = np.zeros_like(z)
    for k in range(shift):
        acc += 1.0 / (z + k)
    w = z + shift
    inv = 1.0 / w
    inv2 = inv * inv
    out = np.log(w) - 0.5 * inv
    pw = inv2
    for k, b in enumerate(bernoulli_even(STIRLING_TERMS), start=1):
        out -= b / (2 * k) * pw
        pw = pw * inv2
    out -= acc
    return complex(out[0]) if scalar else out


@dataclass(frozen=True)
class EulerMaclaurinParams:
    shift: int
    bernoulli_terms: int
    target_abs_error: float


def em_params(s, alpha: float = 1.0, target: float = EM_TARGET) -> EulerMaclaurinParams:
    """Pick N so the first omitted Euler-Maclaurin term is below `target`."""
    z = np.atleast_1d(np.asarray(s, dtype=complex))
    t_max = float(np.max(np.abs(z.imag))) if z.size else 0.0
    sigma_min = float(np.min(z.real)) if z.size else 1.0
    n = int(max(10, math.ceil(0.6 * t_max + 10)))
    # for Re s < 1 the direct sum has terms up to N^{-sigma}; once the remainder is
    # below the rounding floor of that sum, a larger N only adds cancellation error
    while True:
        floor = 4e-16 * (n + alpha) ** max(0.0, 1.0 - sigma_min)
        if _em_remainder_bound(z, alpha, n, EM_BERNOULLI_TERMS) <= max(target, floor):
            break
        n = int(n * 1.1) + 1
    return EulerMaclaurinParams(n, EM_BERNOULLI_TERMS, target)


def _em_remainder_bound(z: np.ndarray, alpha: float, n: int, m: int) -> float:
    # |B_{2m+2}/(2m+2)! * s(s+1)...(s+2m) * (N+a)^(-s-2m-1)| * |s+2m+1| / (Re s + 2m + 1)
    b = abs(bernoulli_even(m + 1)[-1]) / math.factorial(2 * m + 2)
    poch = np.ones_like(z)
    for k in range(2 * m + 1):
        poch = poch * (z + k)
    x = n + alpha
    mag = b * np.abs(poch) * x ** (-z.real - 2 * m - 1)
    denom = np.maximum(z.real + 2 * m + 1, 1.0)
    return float(np.max(mag * np.abs(z + 2 * m + 1) / denom)) if z.size else 0.0


_CHUNK_ELEMENTS = 1 << 21


def _hurwitz_core(z: np.ndarray, alpha: float, params: EulerMaclaurinParams, want_deriv: bool,
                  pole_term: bool = True):
    """Euler-Maclaurin sum. With pole_term=False the (N+a)^{1-s}/(s-1) piece is
    left out so a caller can combine it across residues (it cancels at s=1)."""
    n = params.shift
    base = np.arange(n) + alpha
    logb = np.log(base)
    val = np.empty_like(z)
    der = np.empty_like(z) if want_deriv else None
    step = max(1, _CHUNK_ELEMENTS // max(n, 1))
    for i in range(0, z.size, step):
        zz = z[i : i + step]
        terms = np.exp(-np.outer(zz, logb))
        val[i : i + step] = terms.sum(axis=1)
        if want_deriv:
            der[i : i + step] = -(terms @ logb)

    x = n + alpha
    lx = math.log(x)
    xs = np.exp(-z * lx)  # x^{-s}
    val += 0.5 * xs
    if want_deriv:
        der += -0.5 * lx * xs
    if pole_term:
        sm1 = z - 1.0
        val += x * xs / sm1
        if want_deriv:
            der += -lx * x * xs / sm1 - x * xs / (sm1 * sm1)

    # Bernoulli corrections: B_2j/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    poch = np.ones_like(z)
    dpoch = np.zeros_like(z)
    xpow = xs / x  # x^{-s-1}
    k = 0
    fact = 1.0
    for j, b in enumerate(bernoulli_even(params.bernoulli_terms), start=1):
        while k <= 2 * j - 2:
            if want_deriv:
                dpoch = dpoch * (z + k) + poch
            poch = poch * (z + k)
            k += 1
        fact *= (2 * j - 1) * (2 * j)
        c = b / fact
        val += c * poch * xpow
        if want_deriv:
            der += c * (dpoch - lx * poch) * xpow
        xpow = xpow / (x * x)
    return val, der


def hurwitz_zeta(s, alpha: float, deriv: int = 0, params: EulerMaclaurinParams | None = None):
    """zeta(s, alpha) = sum_{n>=0} (n+alpha)^{-s}, or its s-derivative when deriv=1."""
    if deriv not in (0, 1):
        raise SpecialDomainError("deriv must be 0 or 1")
    val, der = hurwitz_zeta_pair(s, alpha, want_deriv=bool(deriv), params=params)
    return der if deriv else val


def hurwitz_zeta_pair(s, alpha: float, want_deriv: bool = True, params: EulerMaclaurinParams | None = None):
    """Return (zeta(s, alpha), d/ds zeta(s, alpha)) from one shared summation."""
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise SpecialDomainError(f"alpha={alpha} outside (0, 1]")
    z, scalar = _as_array(s)
    z = np.atleast_1d(z).ravel()
    if np.any(z == 1.0):
        raise PoleError("Hurwitz zeta has a pole at s=1")
    params = params or em_params(z, alpha)
    val, der = _hurwitz_core(z, alpha, params, want_deriv)
    shape = np.shape(np.asarray(s))
    if scalar:
        return complex(val[0]), (complex(der[0]) if want_deriv else None)
    return val.reshape(shape), (der.reshape(shape) if want_deriv else None)
