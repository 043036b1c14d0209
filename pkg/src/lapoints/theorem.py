"""Both sides of the explicit formulas for sum L'(rho_a, chi) X^{rho_a}.

Left side: the a-points from `apoints` fed through the reference L'. Right
sides: the general-X formula (with an a-dependent block), its a = 0 special
case, and the closed form for X/q integral, which needs the twisted Stieltjes
constants C_n = ((-1)^n/n!) sum_k Lambda(k) chi(k) log^n(k)/k.

The displayed formulas are implemented as printed. Two knobs exist because
the printed versions are internally inconsistent (see the ledger):
`phase_sign` selects e^{+2 pi i k X/q} or e^{-2 pi i k X/q} in the k-sums,
and `normalization="gauss"` multiplies the k-sum block by the unimodular
factor tau(chi)/sqrt(q) (chi(-1) tau(chi)/sqrt(q) for the + sign), which the
printed formulas leave out.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import apoints
from .arith import ArithDomainError, get_sieve, lambda_log_conv_table
from .characters import DirichletCharacter
from .lfunc import l_pair
from .special import log_gamma

T_MIN = 10.0
STIELTJES_STEPS = (1e-2, 5e-3, 2.5e-3)
STIELTJES_STEPS_HIGH = (1e-1, 5e-2, 2.5e-2, 1.25e-2)
STIELTJES_GAP = 1e-6
SMOOTHING_SIEVE = 4 * 10**6
ZERO_HEIGHT = 40.0


class TheoremDomainError(ValueError):
    pass


class SieveLimitError(ArithDomainError):
    """k-range of a sum exceeds the sieve."""


class ConsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class StieltjesCoeffs:
    char_id: dict
    values: tuple[complex, ...]
    method_gap: float
    derivative_values: tuple[complex, ...] = field(default=(), compare=False)
    smoothed_values: tuple[complex, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class VerificationRow:
    T: float
    X: float
    a: complex
    empirical: complex
    rhs: complex
    residual: float
    normalized_residual: float
    mode: str = "theorem1"
    phase_sign: int = -1
    n_points: int = 0
    envelope: float = float("nan")
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


def _check_common(chi: DirichletCharacter, X: float, T: float):
    if not chi.is_primitive:
        raise TheoremDomainError(f"character {chi.char_id} is not primitive")
    if not X > 0:
        raise TheoremDomainError(f"X must be positive, got {X}")
    if T < T_MIN:
        raise TheoremDomainError(f"T must be >= {T_MIN}, got {T}")


def is_positive_integer(X: float) -> bool:
    return float(X).is_integer() and X >= 1


def delta_indicator(X: float) -> int:
    """1 if X is an integer >= 1, else 0."""
    return 1 if is_positive_integer(X) else 0


def _chi_delta(chi: DirichletCharacter, X: float) -> complex:
    """Delta(X) chi[Delta(X) X]; chi is never evaluated at a non-integer."""
    if not delta_indicator(X):
        return 0j
    return chi(int(X))


def k_range(chi: DirichletCharacter, X: float, T: float) -> int:
    return int(math.floor(chi.q * T / (2 * math.pi * X)))


def _k_sums(chi: DirichletCharacter, X: float, T: float, sign: int, sieve_limit: int):
    """The four exponential sums over k <= qT/(2 pi X)."""
    K = k_range(chi, X, T)
    if K > sieve_limit:
        raise SieveLimitError(f"k-range {K} exceeds sieve limit {sieve_limit}")
    if K < 1:
        return 0j, 0j, 0j, 0j
    k = np.arange(1, K + 1)
    cb = np.conj(chi.at(k))
    # reduce kX mod q before the exponential so large k keep full phase accuracy
    ph = np.exp(sign * 2j * math.pi * np.mod(k * X, chi.q) / chi.q)
    w = cb * ph
    lk = np.log(k)
    # sum_{k=mn} Lambda(n) conj chi(n) conj chi(m) log m = conj chi(k) (Lambda*log)(k),
    # chi being completely multiplicative
    conv = lambda_log_conv_table(K, get_sieve(sieve_limit))[1:]
    return np.sum(lk * lk * w), np.sum(lk * w), np.sum(w), np.sum(conv * w)


def _k_block(chi, X, T, sign, normalization, sieve_limit):
    s2, s1, s0, sc = _k_sums(chi, X, T, sign, sieve_limit)
    rq = math.sqrt(chi.q)
    lX = math.log(X)
    out = (
        X / rq * s2
        + X * lX / (2 * rq) * s1
        - (X * lX * lX / (2 * rq) + 1j * math.pi / 4 * X * lX / rq) * s0
        - X / rq * sc
    )
    return out * _normalization_factor(chi, sign, normalization)


def _normalization_factor(chi, sign, normalization):
    if normalization == "printed":
        return 1.0
    if normalization == "gauss":
        f = chi.gauss_sum() / math.sqrt(chi.q)
        return f if sign < 0 else chi(-1) * f
    raise TheoremDomainError(f"unknown normalization {normalization!r}")


def _delta_block(chi, X, T):
    c = _chi_delta(chi, X)
    if c == 0:
        return 0j
    lX = math.log(X)
    L = math.log(chi.q * T / (2 * math.pi))
    out = -c * lX * (T / (4 * math.pi) * L - T / (4 * math.pi) + 1j * math.pi / 4 * T / (2 * math.pi))
    out += c * T / (2 * math.pi) * _conv_at(int(X))
    return out


def _conv_at(X: int) -> float:
    sieve = get_sieve() if X <= get_sieve().limit else get_sieve(X)
    return sieve.lambda_log_conv(X)


def _a_block(chi, a, T):
    L = math.log(chi.q * T / (2 * math.pi))
    return -a * T / (2 * math.pi) * L * L + a * T / math.pi * L - a * T / math.pi


def _sign(phase_sign) -> int:
    if phase_sign in (-1, "minus", "-"):
        return -1
    if phase_sign in (1, "plus", "+"):
        return 1
    raise TheoremDomainError(f"phase_sign must be plus or minus, got {phase_sign!r}")


def theorem1_rhs(chi: DirichletCharacter, a: complex, X: float, T: float, phase_sign=-1,
                 normalization: str = "printed", sieve_limit: int = 10**6) -> complex:
    """Main terms of the general-X formula, term by term as displayed."""
    _check_common(chi, X, T)
    sign = _sign(phase_sign)
    return complex(
        _a_block(chi, complex(a), T) + _delta_block(chi, X, T)
        + _k_block(chi, X, T, sign, normalization, sieve_limit)
    )


def lemma_zero_sum_rhs(chi: DirichletCharacter, X: float, T: float, phase_sign=-1,
                       normalization: str = "printed", sieve_limit: int = 10**6) -> complex:
    """Main terms of the a = 0 formula (sum over the nontrivial zeros)."""
    _check_common(chi, X, T)
    sign = _sign(phase_sign)
    return complex(_delta_block(chi, X, T) + _k_block(chi, X, T, sign, normalization, sieve_limit))


def corollary_rhs(chi: DirichletCharacter, a: complex, X: float, T: float, coeffs: StieltjesCoeffs) -> complex:
    """Closed form for X/q a positive integer, error term dropped."""
    _check_common(chi, X, T)
    ratio = X / chi.q
    if not is_positive_integer(ratio):
        raise TheoremDomainError(f"X/q must be a positive integer, got {ratio}")
    if coeffs.char_id != chi.char_id:
        raise TheoremDomainError("Stieltjes coefficients belong to a different character")
    a = complex(a)
    C0, C1 = coeffs.values[0], coeffs.values[1]
    q = chi.q
    rq = math.sqrt(q)
    L = math.log(q * T / (2 * math.pi))
    lX = math.log(X)
    cX = chi(int(X))
    conv = _conv_at(int(X))
    base = rq * T / (2 * math.pi)
    out = (1 - 2 * a / rq) * rq * T / (4 * math.pi) * L * L
    out += base * L * (2 * a / rq + C0 - 1 - (rq + cX) / (2 * rq) * lX)
    out += base * (1 - C0 - C0 * C0 + 3 * C1 - 2 * a / rq + cX / q * conv)
    out -= base * lX * (C0 - 1 + 0.5 * lX + (1j * math.pi / 4 - 0.5) * (cX / rq - 1))
    return complex(out)


def corollary_envelope(T: float, c: float) -> float:
    return T * math.exp(-c * math.sqrt(math.log(T)))


def theorem_envelope(q: int, T: float) -> float:
    return math.sqrt(T) * math.log(q * T) ** 3


# --------------------------------------------------------------------------
# left side


def empirical_sum(points, X: float, chi: DirichletCharacter | None = None) -> complex:
    """sum over points of multiplicity * L'(rho) * X^rho."""
    points = list(points)
    if not X > 0:
        raise TheoremDomainError(f"X must be positive, got {X}")
    if not points:
        return 0j
    ids = {(p.char_id["q"], p.char_id["index"]) for p in points}
    avals = {p.a for p in points}
    if len(ids) > 1 or len(avals) > 1:
        raise TheoremDomainError("points come from more than one (character, a) pair")
    if chi is None:
        from .characters import character

        (q, idx), = ids
        chi = character(q, idx)
    elif (chi.q, chi.index) not in ids:
        raise TheoremDomainError("points belong to a different character")
    rho = np.array([p.rho for p in points])
    mult = np.array([p.multiplicity for p in points], dtype=float)
    d = l_pair(rho, chi)[1]
    return complex(np.sum(mult * d * np.exp(rho * math.log(X))))


# --------------------------------------------------------------------------
# Stieltjes coefficients


def _neg_log_deriv(s, chi):
    v, d = l_pair(np.asarray(s, dtype=complex), chi)
    return -d / v


_STENCILS = {
    0: ({0: 1.0}, 0),
    1: ({1: 0.5, -1: -0.5}, 1),
    2: ({1: 1.0, 0: -2.0, -1: 1.0}, 2),
    3: ({2: 0.5, 1: -1.0, -1: 1.0, -2: -0.5}, 3),
    4: ({2: 1.0, 1: -4.0, 0: 6.0, -1: -4.0, -2: 1.0}, 4),
}


def _central_difference(chi, n, h):
    weights, power = _STENCILS[n]
    offs = np.array(sorted(weights))
    vals = _neg_log_deriv(1.0 + offs * h, chi)
    return complex(sum(weights[o] * v for o, v in zip(offs, vals)) / h**power)


def _richardson(values: list[complex]) -> complex:
    """Eliminate h^2, h^4, ... from estimates on a halving step ladder."""
    table = list(values)
    level = 1
    while len(table) > 1:
        f = 4.0**level
        table = [(f * table[i + 1] - table[i]) / (f - 1) for i in range(len(table) - 1)]
        level += 1
    return table[0]


def stieltjes_by_derivative(chi: DirichletCharacter, n_max: int, steps=STIELTJES_STEPS) -> list[complex]:
    """C_n = (1/n!) (d/ds)^n (-L'/L)(1) by central differences and Richardson extrapolation."""
    out = []
    for n in range(n_max + 1):
        if n == 0:
            out.append(complex(_neg_log_deriv(1.0, chi)))
            continue
        # third and fourth differences: rounding on the small steps and truncation
        # from the trivial zero at distance 1 both bite, so use a longer, wider ladder
        ladder = steps if n <= 2 else STIELTJES_STEPS_HIGH
        d = [_central_difference(chi, n, h) for h in ladder]
        out.append(_richardson(d) / math.factorial(n))
    return out


def _smoothing_weight(n: int):
    """Polynomial P with W(u) = P(u) e^{-u} whose Mellin transform is
    Gamma(w) [(1+w)(2+w)/2]^{n+2}. Multiplying the transform by (c + w)
    corresponds to applying c - u d/du to W."""
    P = np.polynomial.Polynomial([1.0])
    u = np.polynomial.Polynomial([0.0, 1.0])
    for c in [1.0] * (n + 2) + [2.0] * (n + 2):
        P = c * P - u * P.deriv() + u * P
    return P / 2.0 ** (n + 2)


def _kernel_taylor(w0: complex, x: float, n: int, order: int) -> complex:
    """Taylor coefficient [order] of Gamma(w) R(w) x^w at w0, by a Cauchy integral."""
    m = 64
    r = min(0.25, 0.5 * abs(w0))
    theta = 2 * math.pi * np.arange(m) / m
    w = w0 + r * np.exp(1j * theta)
    R = ((1 + w) * (2 + w) / 2) ** (n + 2)
    g = np.exp(log_gamma(w) + w * math.log(x)) * R
    return complex(np.mean(g * np.exp(-1j * order * theta)) / r**order)


@lru_cache(maxsize=4)
def _lambda_table(limit: int) -> np.ndarray:
    return get_sieve(limit).von_mangoldt_table(limit)


@lru_cache(maxsize=32)
def _nontrivial_zeros(chi: DirichletCharacter, height: float) -> tuple[complex, ...]:
    up = [p.rho for p in apoints.locate_apoints(chi, 0, apoints.BOTTOM_EPS, height) for _ in range(p.multiplicity)]
    down = [
        p.rho.conjugate()
        for p in apoints.locate_apoints(chi.conj(), 0, apoints.BOTTOM_EPS, height)
        for _ in range(p.multiplicity)
    ]
    return tuple(up + down)


def stieltjes_by_smoothing(chi: DirichletCharacter, n_max: int, limit: int = SMOOTHING_SIEVE) -> list[complex]:
    """Smoothed partial sums of the defining series, completed by the zero residues.

    sum_k a_k W(k/x) = C_n - sum_rho Res_{w=rho-1}[F_n(1+w) Gamma(w) R(w) x^w] + O(x^-3),
    F_n = (1/n!) (-L'/L)^{(n)}. R kills the poles at w = -1, -2 (trivial zeros
    included), and the Gamma factor makes the zero sum converge like exp(-pi |gamma|/2).
    """
    lam = _lambda_table(limit)
    k = np.nonzero(lam)[0]
    lk = np.log(k)
    base = lam[k] * chi.at(k) / k
    zeros = _nontrivial_zeros(chi, ZERO_HEIGHT)
    out = []
    for n in range(n_max + 1):
        P = _smoothing_weight(n)
        u = np.linspace(0, 400, 40001)
        tail_ok = np.abs(P(u)) * np.exp(-u) < 1e-19
        u_max = float(u[np.nonzero(~tail_ok)[0][-1]]) + 1.0
        x = limit / u_max
        uk = k / x
        wgt = np.where(uk < u_max, P(uk) * np.exp(-np.minimum(uk, u_max)), 0.0)
        smoothed = complex(np.sum(base * (-lk) ** n / math.factorial(n) * wgt))
        corr = sum((-1) ** n * _kernel_taylor(r - 1, x, n, n) for r in zeros)
        out.append(smoothed + corr)
    return out


def stieltjes(chi: DirichletCharacter, n_max: int) -> StieltjesCoeffs:
    if chi.is_principal:
        raise TheoremDomainError("Stieltjes coefficients need a nonprincipal character")
    if not 0 <= n_max <= 4:
        raise TheoremDomainError("n_max must be in 0..4")
    if not chi.is_primitive:
        raise TheoremDomainError("Stieltjes coefficients are computed for primitive characters")
    d = stieltjes_by_derivative(chi, n_max)
    s = stieltjes_by_smoothing(chi, n_max)
    gap = max(abs(x - y) for x, y in zip(d, s))
    coeffs = StieltjesCoeffs(chi.char_id, tuple(d), gap, tuple(d), tuple(s))
    if gap > STIELTJES_GAP:
        raise ConsistencyError(f"Stieltjes methods disagree by {gap:.3g} > {STIELTJES_GAP:g}")
    return coeffs


# --------------------------------------------------------------------------
# verification harness


MODES = ("theorem1", "lemma_zero", "corollary")


def _points_for(chi, a, T, include_trivial, cache_dir):
    pts = apoints.APointCache(chi, a, cache_dir).points_upto(T)
    if not include_trivial:
        pts = apoints.nontrivial(pts)
    return pts


def residual_table(chi: DirichletCharacter, a: complex, X: float, T_grid, mode: str = "theorem1",
                   phase_sign=-1, include_trivial: bool = False, cache_dir=None,
                   normalization: str = "printed", coeffs: StieltjesCoeffs | None = None,
                   corollary_c: float | None = None) -> list[VerificationRow]:
    """One row per grid height; failures are recorded on the row, not raised."""
    if mode not in MODES:
        raise TheoremDomainError(f"mode must be one of {MODES}")
    a = complex(a)
    if mode == "lemma_zero" and a != 0:
        raise TheoremDomainError("lemma_zero mode is the a = 0 formula")
    sign = _sign(phase_sign)
    if mode == "corollary" and coeffs is None:
        coeffs = stieltjes(chi, 1)
    rows = []
    for T_req in sorted(T_grid):
        T = float(T_req)
        try:
            T = apoints.safe_height(float(T_req), chi, a)
            pts = [p for p in _points_for(chi, a, T, include_trivial, cache_dir) if p.gamma <= T]
            emp = empirical_sum(pts, X, chi)
            if mode == "theorem1":
                rhs = theorem1_rhs(chi, a, X, T, sign, normalization)
            elif mode == "lemma_zero":
                rhs = lemma_zero_sum_rhs(chi, X, T, sign, normalization)
            else:
                rhs = corollary_rhs(chi, a, X, T, coeffs)
            res = abs(emp - rhs)
            env = theorem_envelope(chi.q, T)
            cenv = corollary_envelope(T, corollary_c) if (mode == "corollary" and corollary_c is not None) else env
            rows.append(VerificationRow(T, X, a, emp, rhs, res, res / env, mode, sign, len(pts), cenv))
        except (ArithmeticError, ValueError) as exc:
            nan = float("nan")
            rows.append(VerificationRow(T, X, a, complex(nan, nan), complex(nan, nan), nan, nan, mode, sign, 0,
                                        nan, f"{type(exc).__name__}: {exc}"))
    return rows
