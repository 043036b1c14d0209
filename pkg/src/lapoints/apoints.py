"""Counting and locating a-points of L(s, chi), i.e. zeros of L(s, chi) - a.

Counts come from the argument principle on rectangles
[strip_left, strip_right] x [t_lo, t_hi]. arg f is sampled along each side and
the sampling is refined until consecutive samples differ in argument by less
than pi/2 (and in modulus by less than a factor e). Location cuts the strip
into short windows, counts each window, and runs batched Newton iterations
until every window has as many distinct roots as its winding number says.
"""
from __future__ import annotations

import json
import logging
import math
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .characters import DirichletCharacter
from .lfunc import l_pair

log = logging.getLogger(__name__)

STRIP_LEFT = -1.0
BOTTOM_EPS = 1e-3
LOW_REGION = 5.0
ARG_STEP = math.pi / 2
CONTOUR_MIN_ABS = 1e-10
NEWTON_STEP_TOL = 1e-12
NEWTON_MAX_ITER = 100
RESIDUAL_ACCEPT = 1e-9
ROUND_GUARD = 0.25
CACHE_SCHEMA_VERSION = 1


class ContourTooCloseError(ArithmeticError):
    """|f| fell below CONTOUR_MIN_ABS on a contour; pick a different height."""


class NonConvergenceError(ArithmeticError):
    def __init__(self, msg, windows=()):
        super().__init__(msg)
        self.windows = list(windows)


class APointDomainError(ValueError):
    pass


class MismatchError(ArithmeticError):
    def __init__(self, msg, discrepant=()):
        super().__init__(msg)
        self.discrepant = list(discrepant)


@dataclass(frozen=True)
class APoint:
    beta: float
    gamma: float
    a: complex
    char_id: dict
    newton_residual: float
    multiplicity: int = 1

    @property
    def rho(self) -> complex:
        return complex(self.beta, self.gamma)


@dataclass(frozen=True)
class CountReport:
    exact_count: int
    main_term: float
    c_a: float
    T_used: float
    raw_winding: float = field(default=float("nan"), compare=False)
    strip: tuple[float, float] = (STRIP_LEFT, float("nan"))


# --------------------------------------------------------------------------
# target functions


class LMinusA:
    """f(s) = L(s, chi) - a."""

    def __init__(self, chi: DirichletCharacter, a: complex):
        self.chi = chi
        self.a = complex(a)

    def pair(self, z):
        v, d = l_pair(z, self.chi)
        return v - self.a, d

    def value(self, z):
        return l_pair(z, self.chi, want_deriv=False)[0] - self.a


class ScaledLMinusOne:
    """f(s) = q^s (L(s, chi) - 1); same zeros as L - 1, different function."""

    def __init__(self, chi: DirichletCharacter):
        self.chi = chi
        self.a = 1.0 + 0j
        self.lq = math.log(chi.q)

    def pair(self, z):
        v, d = l_pair(z, self.chi)
        qs = np.exp(np.asarray(z) * self.lq)
        return qs * (v - 1.0), qs * (self.lq * (v - 1.0) + d)

    def value(self, z):
        v = l_pair(z, self.chi, want_deriv=False)[0]
        return np.exp(np.asarray(z) * self.lq) * (v - 1.0)


# --------------------------------------------------------------------------
# strip geometry


def c_a(chi: DirichletCharacter, a: complex) -> float:
    """m = min{n >= 2: chi(n) != 0} when a = 1, else 1."""
    return float(chi.first_support) if complex(a) == 1 else 1.0


def _support_tail(chi: DirichletCharacter, sigma: float, start: int, scale: float = 1.0) -> float:
    """Upper bound for sum_{n >= start, chi(n) != 0} (scale/n)^sigma."""
    n = np.arange(start, start + 20000)
    mask = np.abs(chi.at(n)) > 0
    head = float(np.sum((scale / n[mask]) ** sigma))
    last = start + 20000 - 0.5
    return head + scale**sigma * last ** (1 - sigma) / (sigma - 1)


def strip_right(chi: DirichletCharacter, a: complex) -> float:
    """Smallest integer sigma >= 3 to the right of which L - a provably has no zeros.

    For a != 1: |L - a| >= |1 - a| - sum_{n>=2} |chi(n)| n^-sigma, required above
    max(0.1, |1-a|/2). For a = 1: m^s (L - 1) = chi(m) + sum_{n>m} chi(n) (m/n)^s,
    and the tail is required below 1/2. Both bounds decrease in sigma.
    """
    a = complex(a)
    sigma = 3
    if a == 1:
        m = chi.first_support
        while _support_tail(chi, sigma, m + 1, scale=m) >= 0.5:
            sigma += 1
        return float(sigma)
    gap = abs(1 - a)
    need = max(0.1, gap / 2) if gap > 0.2 else gap / 2
    while gap - _support_tail(chi, sigma, 2) <= need:
        sigma += 1
        if sigma > 200:
            raise APointDomainError(f"a={a} too close to 1 for a finite strip")
    return float(sigma)


# --------------------------------------------------------------------------
# argument tracking


def _refine_path(fun, z: np.ndarray, fz: np.ndarray, max_rounds: int = 60):
    """Insert midpoints until consecutive samples are within ARG_STEP in argument."""
    for _ in range(max_rounds):
        if np.min(np.abs(fz)) < CONTOUR_MIN_ABS:
            k = int(np.argmin(np.abs(fz)))
            raise ContourTooCloseError(f"|f| = {abs(fz[k]):.3g} < {CONTOUR_MIN_ABS:g} at s = {z[k]}")
        ratio = fz[1:] / fz[:-1]
        bad = (np.abs(np.angle(ratio)) >= ARG_STEP) | (np.abs(np.log(np.abs(ratio))) > 1.0)
        if not bad.any():
            return z, fz
        idx = np.nonzero(bad)[0]
        if np.min(np.abs(z[idx + 1] - z[idx])) < 1e-11:
            raise ContourTooCloseError(f"argument refinement stalled near s = {z[idx[0]]}")
        mids = 0.5 * (z[idx] + z[idx + 1])
        fm = fun(mids)
        z = np.insert(z, idx + 1, mids)
        fz = np.insert(fz, idx + 1, fm)
    raise ContourTooCloseError("argument refinement did not settle")


def _segment_grid(z0: complex, z1: complex, h: float) -> np.ndarray:
    n = max(2, int(math.ceil(abs(z1 - z0) / h)) + 1)
    return z0 + (z1 - z0) * np.linspace(0.0, 1.0, n)


def _arg_increments(fz: np.ndarray) -> np.ndarray:
    return np.angle(fz[1:] / fz[:-1])


def _edge_step(t: float, q: int) -> float:
    return min(0.25, 0.6 / math.log(q * max(t, 1.0) / (2 * math.pi) + math.e))


class _Polyline:
    """A refined vertical edge: per-piece argument change between marked heights."""

    def __init__(self, fun, sigma: float, heights: np.ndarray, q: int):
        heights = np.asarray(heights, dtype=float)
        pieces = []
        for lo, hi in zip(heights[:-1], heights[1:]):
            pieces.append(_segment_grid(complex(sigma, lo), complex(sigma, hi), _edge_step(hi, q))[:-1])
        z = np.concatenate(pieces + [np.array([complex(sigma, heights[-1])])])
        z, fz = _refine_path(fun, z, fun(z))
        cum = np.concatenate([[0.0], np.cumsum(_arg_increments(fz))])
        idx = np.searchsorted(z.imag, heights)
        self.piece_change = np.diff(cum[idx])
        self.n_samples = z.size
        self.min_abs = float(np.min(np.abs(fz)))


def _horizontal_change(fun, t: float, left: float, right: float) -> float:
    z = _segment_grid(complex(left, t), complex(right, t), 0.1)
    z, fz = _refine_path(fun, z, fun(z))
    return float(np.sum(_arg_increments(fz)))


def _horizontal_changes(fun, heights, left: float, right: float) -> np.ndarray:
    """Left-to-right argument change along each horizontal cut, evaluated in one batch."""
    heights = list(heights)
    grids = [_segment_grid(complex(left, t), complex(right, t), 0.1) for t in heights]
    sizes = [g.size for g in grids]
    flat = np.concatenate(grids)
    fz_flat = fun(flat)
    out = []
    pos = 0
    for g, n in zip(grids, sizes):
        z, fz = _refine_path(fun, g, fz_flat[pos : pos + n])
        pos += n
        out.append(float(np.sum(_arg_increments(fz))))
    return np.array(out)


def rectangle_winding(fun, left: float, right: float, t_lo: float, t_hi: float, q: int = 1) -> float:
    """(1/2pi) * total argument change of f around the rectangle, counterclockwise."""
    total = _horizontal_change(fun, t_lo, left, right)
    total += _Polyline(fun, right, np.array([t_lo, t_hi]), q).piece_change.sum()
    total -= _horizontal_change(fun, t_hi, left, right)
    total -= _Polyline(fun, left, np.array([t_lo, t_hi]), q).piece_change.sum()
    return total / (2 * math.pi)


def _round_winding(raw: float) -> int:
    n = int(round(raw))
    if abs(raw - n) > ROUND_GUARD or n < 0:
        raise ContourTooCloseError(f"winding {raw:.4f} is not within {ROUND_GUARD} of a nonnegative integer")
    return n


def circle_winding(fun, center: complex, radius: float, n: int = 64) -> int:
    z = center + radius * np.exp(2j * math.pi * np.arange(n + 1) / n)
    z, fz = _refine_path(fun, z, fun(z))
    return _round_winding(float(np.sum(_arg_increments(fz))) / (2 * math.pi))


# --------------------------------------------------------------------------
# Newton


def newton_batch(target, z0: np.ndarray, max_iter: int = NEWTON_MAX_ITER, max_step: float = 0.5):
    """Damped Newton on all starts at once. Returns (z, residual, converged)."""
    z = np.array(z0, dtype=complex)
    conv = np.zeros(z.size, dtype=bool)
    active = np.ones(z.size, dtype=bool)
    for _ in range(max_iter):
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        f, d = target.pair(z[idx])
        with np.errstate(divide="ignore", invalid="ignore"):
            step = f / d
        bad = ~np.isfinite(step)
        step[bad] = 0
        big = np.abs(step) > max_step
        step[big] *= max_step / np.abs(step[big])
        z[idx] -= step
        done = (np.abs(step) < NEWTON_STEP_TOL) & ~bad
        # leaving the region of interest: stop early
        lost = bad | (np.abs(z[idx].real) > 50)
        conv[idx[done]] = True
        active[idx[done | lost]] = False
    res = np.abs(np.asarray(target.value(z)))
    conv |= res <= RESIDUAL_ACCEPT * 1e-3
    return z, res, conv


# --------------------------------------------------------------------------
# scanner


def _dedupe(z: np.ndarray, tol: float = 1e-7) -> list[complex]:
    out: list[complex] = []
    for w in sorted(z.tolist(), key=lambda c: (c.imag, c.real)):
        if not any(abs(w - u) < tol for u in out):
            out.append(w)
    return out


def _window_cuts(t_lo: float, t_hi: float, q: int) -> np.ndarray:
    cuts = [t_lo]
    t = t_lo
    while True:
        w = min(0.5, 0.5 * 2 * math.pi / math.log(q * max(t, 1.0) / (2 * math.pi) + math.e))
        t = t + w
        if t >= t_hi - 0.05:
            break
        cuts.append(t)
    cuts.append(t_hi)
    return np.array(cuts)


class APointScanner:
    """Finds the a-points of L(s, chi) for one (chi, a) inside the strip."""

    def __init__(self, chi: DirichletCharacter, a: complex, target=None, left: float = STRIP_LEFT,
                 right: float | None = None):
        self.chi = chi
        self.a = complex(a)
        self.target = target if target is not None else LMinusA(chi, self.a)
        self.left = float(left)
        self.right = float(right if right is not None else strip_right(chi, self.a))
        self.q = chi.q

    @property
    def strip(self) -> tuple[float, float]:
        return (self.left, self.right)

    def _fun(self, z):
        return self.target.value(z)

    # ---- counting

    def winding(self, t_lo: float, t_hi: float) -> float:
        return rectangle_winding(self._fun, self.left, self.right, t_lo, t_hi, self.q)

    def count(self, T: float, t_lo: float = BOTTOM_EPS) -> int:
        return _round_winding(self.winding(t_lo, T))

    def window_counts(self, cuts: np.ndarray) -> np.ndarray:
        right = _Polyline(self._fun, self.right, cuts, self.q).piece_change
        left = _Polyline(self._fun, self.left, cuts, self.q).piece_change
        horiz = _horizontal_changes(self._fun, cuts, self.left, self.right)
        raw = (horiz[:-1] + right - horiz[1:] - left) / (2 * math.pi)
        return np.array([_round_winding(r) for r in raw])

    # ---- locating

    def _inside(self, z: complex, lo: float, hi: float, left=None, right=None) -> bool:
        left = self.left if left is None else left
        right = self.right if right is None else right
        return lo < z.imag <= hi and left < z.real < right

    def _to_apoint(self, z: complex, mult: int = 1) -> APoint:
        res = abs(complex(LMinusA(self.chi, self.a).value(z)))
        return APoint(float(z.real), float(z.imag), self.a, self.chi.char_id, float(res), mult)

    def _starts(self, lo: float, hi: float, dense: bool) -> list[complex]:
        sig = [0.5, 0.1, 0.9] if not dense else list(np.linspace(self.left + 0.1, self.right - 0.1, 7))
        ts = [0.5 * (lo + hi)] if not dense else [lo + f * (hi - lo) for f in (0.15, 0.5, 0.85)]
        return [complex(s, t) for s in sig for t in ts]

    def locate(self, t_lo: float, t_hi: float) -> list[APoint]:
        """All a-points with t_lo < gamma <= t_hi and left < beta < right, sorted by gamma."""
        if t_hi <= t_lo:
            return []
        cuts = _window_cuts(t_lo, t_hi, self.q)
        counts = self.window_counts(cuts)
        nwin = len(counts)
        found: list[list[complex]] = [[] for _ in range(nwin)]
        pool: list[complex] = []

        def harvest(zs, conv):
            for z, ok in zip(zs, conv):
                if ok:
                    pool.append(complex(z))

        # pass 1: cheap starts in every occupied window; pass 2: dense starts where short
        for dense in (False, True):
            need = [k for k in range(nwin) if counts[k] > len(found[k])]
            if not need:
                break
            starts = [s for k in need for s in self._starts(cuts[k], cuts[k + 1], dense)]
            z, _, conv = newton_batch(self.target, np.array(starts))
            harvest(z, conv)
            found = self._assign(pool, cuts)

        short = [k for k in range(nwin) if counts[k] != len(found[k])]
        failed = []
        for k in short:
            roots = self._solve_rect(cuts[k], cuts[k + 1], self.left, self.right, int(counts[k]), depth=0)
            if roots is None:
                failed.append((float(cuts[k]), float(cuts[k + 1])))
                continue
            found[k] = roots
        if failed:
            raise NonConvergenceError(f"Newton failed in {len(failed)} window(s)", failed)

        points = []
        for k in range(nwin):
            for z, mult in self._multiplicities(found[k], int(counts[k])):
                points.append(self._to_apoint(z, mult))
        points.sort(key=lambda p: p.gamma)
        return points

    def _assign(self, pool, cuts):
        uniq = _dedupe(np.array(pool)) if pool else []
        found: list[list[complex]] = [[] for _ in range(len(cuts) - 1)]
        for z in uniq:
            if not (self.left < z.real < self.right):
                continue
            k = int(np.searchsorted(cuts, z.imag, side="left")) - 1
            if 0 <= k < len(found) and cuts[k] < z.imag <= cuts[k + 1]:
                found[k].append(z)
        return found

    def _multiplicities(self, roots: list[complex], count: int):
        if len(roots) == count:
            return [(z, 1) for z in roots]
        # fewer distinct roots than the winding: some root is multiple
        out = []
        for z in roots:
            out.append((z, circle_winding(self._fun, z, 1e-4)))
        if sum(m for _, m in out) != count:
            raise NonConvergenceError(f"multiplicities {out} do not add to winding {count}")
        return out

    def _solve_rect(self, lo, hi, left, right, n, depth):
        """Recursive bisection of a rectangle holding n a-points."""
        if n == 0:
            return []
        starts = []
        for fs in np.linspace(0.1, 0.9, 5):
            for ft in (0.2, 0.5, 0.8):
                starts.append(complex(left + fs * (right - left), lo + ft * (hi - lo)))
        rng = np.random.default_rng(depth * 7919 + int(lo * 1000))
        starts += list(complex(left, lo) + rng.random(8) * (right - left) + 1j * rng.random(8) * (hi - lo))
        z, _, conv = newton_batch(self.target, np.array(starts))
        roots = [w for w in _dedupe(z[conv]) if lo < w.imag <= hi and left < w.real < right]
        if len(roots) == n:
            return roots
        if max(hi - lo, right - left) < 1e-4:
            # a cluster that will not separate: treat as one multiple root
            return roots if len(roots) == 1 else None
        if depth > 30:
            return None
        out = []
        if hi - lo >= right - left:
            mid = 0.5 * (lo + hi) + 1e-3 * (hi - lo) * math.sin(depth + 1)
            parts = [(lo, mid, left, right), (mid, hi, left, right)]
        else:
            mid = 0.5 * (left + right) + 1e-3 * (right - left) * math.sin(depth + 1)
            parts = [(lo, hi, left, mid), (lo, hi, mid, right)]
        for (plo, phi, pl, pr) in parts:
            m = _round_winding(rectangle_winding(self._fun, pl, pr, plo, phi, self.q))
            sub = self._solve_rect(plo, phi, pl, pr, m, depth + 1)
            if sub is None:
                return None
            out += sub
        return out


# --------------------------------------------------------------------------
# module-level operations


def main_term(chi: DirichletCharacter, a: complex, T: float) -> float:
    """(T/2pi) log(qT / (2 pi c_a e))."""
    return T / (2 * math.pi) * math.log(chi.q * T / (2 * math.pi * c_a(chi, a) * math.e))


def _nearby_ordinates(chi, a, t_lo, t_hi) -> list[float]:
    scanner = APointScanner(chi, a)
    for shift in (0.0, 0.0137, -0.0211, 0.0313):
        try:
            return [p.gamma for p in scanner.locate(max(BOTTOM_EPS, t_lo + shift), t_hi + shift)]
        except ContourTooCloseError:
            continue
    raise ContourTooCloseError(f"no usable scan window near [{t_lo}, {t_hi}]")


def safe_height(T_request: float, chi: DirichletCharacter, a: complex, ordinates=None) -> float:
    """A height in [T_request, T_request + 1) at distance >= 0.5/log(T_request)
    from every a-point ordinate. T_request itself is returned when it qualifies."""
    if T_request < LOW_REGION:
        raise APointDomainError(f"T_request must be >= {LOW_REGION}")
    if ordinates is None:
        ordinates = _nearby_ordinates(chi, a, T_request - 1.0, T_request + 2.0)
    ords = np.array(sorted(ordinates), dtype=float)
    need = 0.5 / math.log(T_request)

    def dist(t):
        return float(np.min(np.abs(ords - t))) if ords.size else math.inf

    if dist(T_request) >= need:
        return float(T_request)
    cand = [T_request, math.nextafter(T_request + 1.0, T_request)]
    inside = ords[(ords >= T_request - 1) & (ords <= T_request + 2)]
    cand += [0.5 * (u + v) for u, v in zip(inside[:-1], inside[1:])]
    cand = [c for c in cand if T_request <= c < T_request + 1.0]
    best = max(cand, key=dist)
    # round so the value survives a JSON/CSV round trip unchanged
    best = float(f"{best:.12g}")
    if dist(best) < need:
        raise APointDomainError(f"no height in [{T_request}, {T_request + 1}) clears {need:.3g}")
    return best


def count_apoints(chi: DirichletCharacter, a: complex, T: float) -> CountReport:
    if not chi.is_primitive:
        raise APointDomainError("a-point counting needs a primitive character")
    scanner = APointScanner(chi, a)
    raw = scanner.winding(BOTTOM_EPS, T)
    return CountReport(_round_winding(raw), main_term(chi, a, T), c_a(chi, a), float(T), raw, scanner.strip)


def locate_apoints(chi: DirichletCharacter, a: complex, t_lo: float, t_hi: float,
                   nontrivial_only: bool = False) -> list[APoint]:
    if not chi.is_primitive:
        raise APointDomainError("a-point location needs a primitive character")
    pts = APointScanner(chi, a).locate(t_lo, t_hi)
    if nontrivial_only:
        pts = [p for p in pts if p.beta > 0]
    return pts


def nontrivial(points: list[APoint]) -> list[APoint]:
    return [p for p in points if p.beta > 0]


def a1_transform_check(chi: DirichletCharacter, T: float, a: complex = 1, t_lo: float = BOTTOM_EPS,
                       tol: float = 1e-9) -> bool:
    """1-points from L - 1 must coincide with zeros of q^s (L - 1) found separately."""
    if complex(a) != 1:
        raise APointDomainError("a1_transform_check applies to a = 1 only")
    if T <= t_lo:
        return True
    direct = APointScanner(chi, 1).locate(t_lo, T)
    scaled_scanner = APointScanner(chi, 1, target=ScaledLMinusOne(chi))
    scaled = scaled_scanner.locate(t_lo, T)
    bad = []
    if len(direct) != len(scaled):
        bad.append(("count", len(direct), len(scaled)))
    for p, r in zip(direct, scaled):
        if abs(p.rho - r.rho) > tol:
            bad.append((p.rho, r.rho))
    if bad:
        raise MismatchError(f"{len(bad)} discrepant 1-point(s)", bad)
    return True


# --------------------------------------------------------------------------
# cache


def cache_dir(default: str | os.PathLike | None = None) -> Path:
    env = os.environ.get("APOINT_CACHE_DIR")
    if env:
        return Path(env)
    return Path(default) if default is not None else Path.home() / ".cache" / "lapoints"


def _fmt(x: float) -> str:
    return f"{x:.15g}"


class APointCache:
    """JSON file of all a-points in (BOTTOM_EPS, t_max] for one (chi, a)."""

    def __init__(self, chi: DirichletCharacter, a: complex, directory: str | os.PathLike | None = None):
        self.chi = chi
        self.a = complex(a)
        self.scanner = APointScanner(chi, self.a)
        self.dir = cache_dir(directory)
        tag = f"q{chi.q}_i{chi.index}_a{_fmt(self.a.real)}_{_fmt(self.a.imag)}"
        self.path = self.dir / f"apoints_{tag}.json"

    def load(self):
        try:
            data = json.loads(self.path.read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if (
            data.get("schema_version") != CACHE_SCHEMA_VERSION
            or list(data.get("strip", [])) != [self.scanner.left, self.scanner.right]
            or data.get("q") != self.chi.q
            or data.get("char_index") != self.chi.index
            or complex(*data.get("a", [math.nan, 0])) != self.a
        ):
            return None
        pts = [
            APoint(p["beta"], p["gamma"], self.a, self.chi.char_id, p["newton_residual"], p["multiplicity"])
            for p in data["points"]
        ]
        return float(data["t_max"]), pts

    def save(self, t_max: float, points: list[APoint]):
        self.dir.mkdir(parents=True, exist_ok=True)
        data = {
            "schema_version": CACHE_SCHEMA_VERSION,
            "q": self.chi.q,
            "char_index": self.chi.index,
            "a": [self.a.real, self.a.imag],
            "strip": [self.scanner.left, self.scanner.right],
            "t_max": t_max,
            "points": [
                {
                    "beta": float(_fmt(p.beta)),
                    "gamma": float(_fmt(p.gamma)),
                    "multiplicity": p.multiplicity,
                    "newton_residual": float(_fmt(p.newton_residual)),
                }
                for p in points
            ],
        }
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, indent=1))
        os.replace(tmp, self.path)

    def points_upto(self, T: float) -> list[APoint]:
        """All a-points in the strip with BOTTOM_EPS < gamma <= T, scanning only what is missing.

        T must be a safe height (see safe_height)."""
        got = self.load()
        t_max, pts = got if got else (BOTTOM_EPS, [])
        if T > t_max:
            new = self.scanner.locate(t_max, T)
            pts = sorted(pts + new, key=lambda p: p.gamma)
            pts = _reparse(pts)
            self.save(T, pts)
            t_max = T
        return [p for p in pts if p.gamma <= T]


def _reparse(points: list[APoint]) -> list[APoint]:
    # round to the serialized precision so cold and warm runs agree bit for bit
    return [
        APoint(float(_fmt(p.beta)), float(_fmt(p.gamma)), p.a, p.char_id, float(_fmt(p.newton_residual)),
               p.multiplicity)
        for p in points
    ]
