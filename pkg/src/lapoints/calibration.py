"""Frozen calibration constants (data/calibration.json).

The file is produced by `lapoints calibrate` and checked in. Tests compare
fresh measurements against these values, so regenerating it is a deliberate
act, not something the test suite ever does.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

CALIBRATION_FILE = "calibration.json"


class CalibrationError(KeyError):
    pass


@lru_cache(maxsize=1)
def load() -> dict:
    text = resources.files("lapoints").joinpath("data", CALIBRATION_FILE).read_text()
    return json.loads(text)


def afe_constant(kind: str, q: int) -> float:
    table = load()["afe"].get(kind, {})
    try:
        return float(table[str(q)])
    except KeyError:
        if "default" in table:
            return float(table["default"])
        raise CalibrationError(f"no AFE constant for kind={kind!r}, q={q}") from None


def count_constant() -> float:
    return float(load()["count_C"])


def theorem_bound() -> float:
    return float(load()["theorem_normalized_bound"])


def corollary_c() -> float | None:
    """The frozen c in T exp(-c sqrt(log T)); None when calibration found no positive c."""
    c = load()["corollary"]["c"]
    return None if c is None else float(c)


# --------------------------------------------------------------------------
# producing the file

AFE_Q = (3, 4, 5, 7, 8)
AFE_SIGMAS = (0.0, 0.25, 0.5, 0.75, 1.0)
AFE_TS = (20.0, 50.0, 100.0, 200.0, 500.0)
COUNT_Q = (3, 4, 5)
COUNT_A = (0, 0.5, 2j, 1)
COUNT_T = (50.0, 100.0, 200.0, 500.0)
THEOREM_CASES = ((0, 1.0), (0, 2.0), (0, 2.0**0.5), (0.5, 1.0), (2j, 1.0), (1, 1.0))
THEOREM_T = (50.0, 100.0, 200.0, 500.0)
COROLLARY_T = (100.0, 300.0)
MARGIN = 1.25


def afe_ratios(q: int):
    """max over the grid and the primitive characters mod q of |AFE - reference| / shape."""
    from .characters import primitive_characters
    from .lfunc import Method, afe_error_shape, l_afe, l_pair, lprime_afe

    out = {"rane": 0.0, "lprime": 0.0}
    for chi in primitive_characters(q):
        for sg in AFE_SIGMAS:
            for t in AFE_TS:
                s = complex(sg, t)
                v, d = l_pair(s, chi)
                out["rane"] = max(out["rane"], abs(l_afe(s, chi) - v) / afe_error_shape(s, Method.RANE_AFE))
                out["lprime"] = max(out["lprime"], abs(lprime_afe(s, chi) - d) / afe_error_shape(s, Method.LPRIME_AFE))
    return out


def count_deviations():
    """(q, index, a, T_used, count, main_term, |count - main| / log(qT)) over the count grid."""
    import math

    from .apoints import count_apoints, safe_height
    from .characters import primitive_characters

    rows = []
    for q in COUNT_Q:
        for chi in primitive_characters(q):
            for a in COUNT_A:
                for T in COUNT_T:
                    Tu = safe_height(T, chi, a)
                    r = count_apoints(chi, a, Tu)
                    rows.append((q, chi.index, a, Tu, r.exact_count, r.main_term,
                                 abs(r.exact_count - r.main_term) / math.log(q * Tu)))
    return rows


def theorem_rows(phase_sign=-1, normalization="printed", cache_dir=None):
    from .characters import character
    from .theorem import residual_table

    chi = character(4, 1)
    out = []
    for a, X in THEOREM_CASES:
        out += residual_table(chi, a, X, THEOREM_T, "theorem1", phase_sign, cache_dir=cache_dir,
                              normalization=normalization)
    return out


def measure_corollary_c(cache_dir=None):
    """Largest c > 0 with residual <= T exp(-c sqrt(log T)) on the a = 0, X = q runs,
    or None when some residual already exceeds T (no positive c works)."""
    import math

    from .characters import character
    from .theorem import residual_table, stieltjes

    chi = character(4, 1)
    coeffs = stieltjes(chi, 1)
    rows = residual_table(chi, 0, 4.0, COROLLARY_T, "corollary", coeffs=coeffs, cache_dir=cache_dir)
    bounds = [-math.log(r.residual / r.T) / math.sqrt(math.log(r.T)) for r in rows]
    c = min(bounds)
    return (c if c > 0 else None), rows


def calibrate(path=None, cache_dir=None) -> dict:
    import math
    from pathlib import Path

    afe = {"rane": {}, "lprime": {}}
    for q in AFE_Q:
        r = afe_ratios(q)
        for kind in afe:
            afe[kind][str(q)] = float(f"{r[kind]:.4g}")
    for kind in afe:
        afe[kind]["default"] = 5.0
    worst_count = max(row[-1] for row in count_deviations())
    worst_thm = max(r.normalized_residual for r in theorem_rows(cache_dir=cache_dir))
    c, rows = measure_corollary_c(cache_dir)
    data = {
        "afe": afe,
        "count_C": float(f"{MARGIN * worst_count:.2g}"),
        "count_worst_observed": worst_count,
        "theorem_normalized_bound": float(f"{MARGIN * worst_thm:.2g}"),
        "theorem_worst_observed": worst_thm,
        "corollary": {
            "c": c,
            "feasible": c is not None,
            "residual_over_T": [r.residual / r.T for r in rows],
            "T": [r.T for r in rows],
        },
        "margin": MARGIN,
    }
    if path is None:
        path = Path(__file__).parent / "data" / CALIBRATION_FILE
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    load.cache_clear()
    return data
