"""Summability engine: Cesaro, weighted, and Abel means plus harnesses.

The double-indexed harness takes a family of real coefficient rows
``a_k^{(m)}`` with Abel targets ``alpha_m`` and measures how fast the
weighted means

    (n+1)^{-1} sum_{k<=n} (n+1-k) a_k   (== the Cesaro mean of partial sums)

approach the targets simultaneously in (m, n).  Its hypotheses are
checked by finite proxies only: the one-sided partial-sum bound by an
observed constant, and uniform convergence by Abel evaluation on a fixed
t-grid (a declared config knob, with t = 1 filled by the target values).

``tauber_decomposition_check`` verifies the exact finite-ledger identity
splitting the boundary-mean series minus a Cesaro mean into weighted
delta-tails; ``uniform_gap`` is the monotone-family uniform-convergence
gap estimator; ``euler_bracket`` is the elementary bracket
(1 - 1/(n+1))^{n+1} < 1/e < (1 - 1/(n+1))^n used by radius schedules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ComplexCoefficients,
    IndexOutOfRange,
    InvalidParameter,
    NotMonotone,
)
from .logmilin import LogData

DEFAULT_T_GRID = (0.0, 0.5, 0.9, 0.99, 0.999, 1.0)


# -- means ---------------------------------------------------------------


def _check_index(coeffs, n: int) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    if coeffs.ndim != 1:
        raise InvalidParameter("coefficients must be 1-D")
    if not 0 <= n < len(coeffs):
        raise IndexOutOfRange(f"mean index {n} outside 0..{len(coeffs) - 1}")
    return coeffs


def cesaro_mean(coeffs, n: int):
    """Average of the partial sums s_0..s_n."""
    coeffs = _check_index(coeffs, n)
    s = np.cumsum(coeffs[: n + 1])
    return s.sum() / (n + 1)


def weighted_mean(coeffs, n: int):
    """(n+1)^{-1} sum_{k<=n} (n+1-k) a_k; identical to the Cesaro mean."""
    coeffs = _check_index(coeffs, n)
    w = (n + 1) - np.arange(n + 1)
    return np.dot(w, coeffs[: n + 1]) / (n + 1)


def abel_mean(coeffs, t: float):
    """Power-series value sum a_k t^k on 0 <= t < 1."""
    coeffs = np.asarray(coeffs)
    if not 0.0 <= t < 1.0:
        raise InvalidParameter("abel mean needs 0 <= t < 1")
    return np.polyval(coeffs[::-1], t)


def mean(kind: str, coeffs, param):
    """Dispatch on kind in {cesaro, weighted, abel}."""
    if kind == "cesaro":
        return cesaro_mean(coeffs, int(param))
    if kind == "weighted":
        return weighted_mean(coeffs, int(param))
    if kind == "abel":
        return abel_mean(coeffs, float(param))
    raise InvalidParameter(f"unknown mean kind {kind!r}")


# -- double-indexed family harness ---------------------------------------


@dataclass(frozen=True)
class DoubleFamily:
    """Coefficient rows a_k^{(m)} with their Abel targets alpha_m.

    All rows share one truncation order; ``alpha_bound`` records the
    observed ceiling on |alpha_m|.
    """

    m_values: np.ndarray
    coeff_rows: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        m_values = np.asarray(self.m_values, dtype=int)
        rows = np.asarray(self.coeff_rows)
        alpha = np.asarray(self.alpha)
        if rows.ndim != 2 or len(m_values) != rows.shape[0] or len(alpha) != rows.shape[0]:
            raise InvalidParameter("need one coefficient row and one alpha per m")
        if len(m_values) == 0:
            raise InvalidParameter("family must not be empty")
        if np.any(np.diff(m_values) <= 0):
            raise InvalidParameter("m_values must be strictly increasing")
        if not (np.all(np.isfinite(alpha)) and np.all(np.isfinite(rows))):
            raise InvalidParameter("family data must be finite")
        object.__setattr__(self, "m_values", m_values)
        object.__setattr__(self, "coeff_rows", rows)
        object.__setattr__(self, "alpha", alpha)

    @property
    def alpha_bound(self) -> float:
        return float(np.max(np.abs(self.alpha)))


@dataclass(frozen=True)
class DeviationSurface:
    """|alpha_m - weighted mean at n| over the (m, n) grid."""

    m_values: np.ndarray
    d: np.ndarray  # shape (len(m_values), order+1), non-negative

    @property
    def n_count(self) -> int:
        return self.d.shape[1]


@dataclass(frozen=True)
class TauberHarnessReport:
    """Observables of one harness run.

    ``tail_sup[N]`` is the supremum of the deviation surface over
    m > min(N, max m - 1) and n > min(N, max n - 1); the clamping keeps
    the window non-empty on a finite grid, and the array is non-increasing
    by construction.  ``iii_bounded`` is the doubling heuristic for the
    one-sided partial-sum bound: the observed constant over the full
    range must not materially exceed the half-range one.
    """

    l_observed: float
    uniform_gap: float
    deviation: DeviationSurface
    tail_n: np.ndarray
    tail_sup: np.ndarray
    iii_bounded: bool
    abel_values: np.ndarray  # per (m, t-grid point)
    t_grid: np.ndarray


def tail_supremum(d: np.ndarray, m_values: np.ndarray):
    """Clamped joint tail suprema of a non-negative surface.

    Returns (N_grid, sup array); see :class:`TauberHarnessReport`.
    """
    m_values = np.asarray(m_values, dtype=int)
    n_cols = d.shape[1]
    max_m = int(m_values[-1])
    max_n = n_cols - 1
    # suffix maxima along n for every row
    suffix = np.maximum.accumulate(d[:, ::-1], axis=1)[:, ::-1]
    n_grid = np.arange(max(max_m, max_n))
    sup = np.empty(len(n_grid))
    for i, n_cut in enumerate(n_grid):
        row_cut = min(n_cut, max_m - 1)
        col_cut = min(n_cut, max_n - 1)
        rows = m_values > row_cut
        sup[i] = float(np.max(suffix[rows, col_cut + 1]))
    return n_grid, sup


def simultaneous_tauber_harness(fam: DoubleFamily, t_grid=DEFAULT_T_GRID) -> TauberHarnessReport:
    """Run the double-indexed weighted-mean experiment on real rows.

    Complex rows are rejected outright (imaginary parts above 1e-14)
    rather than silently projected: the machinery is only valid for real
    coefficients.
    """
    rows = np.asarray(fam.coeff_rows)
    if np.iscomplexobj(rows):
        worst = float(np.max(np.abs(rows.imag)))
        if worst > 1e-14:
            raise ComplexCoefficients(
                f"rows carry imaginary parts up to {worst:.3g}; the harness needs real data"
            )
        rows = rows.real
    alpha = np.asarray(fam.alpha, dtype=float)

    partial = np.cumsum(rows, axis=1)
    l_observed = float(np.max(partial - alpha[:, None]))
    # doubling heuristic for the one-sided bound: linear growth doubles it
    half = rows.shape[1] // 2
    l_half = float(np.max(partial[:, : half + 1] - alpha[:, None]))
    iii_bounded = l_observed <= max(1.25 * l_half, l_half + 1e-9) + 1e-9

    t_grid = np.asarray(t_grid, dtype=float)
    abel_vals = np.empty((rows.shape[0], len(t_grid)))
    for j, t in enumerate(t_grid):
        if t >= 1.0:
            abel_vals[:, j] = alpha  # continuity extension at the endpoint
        else:
            abel_vals[:, j] = rows @ (t ** np.arange(rows.shape[1]))
    uniform_gap = (
        float(np.max(np.abs(abel_vals[-1] - abel_vals[-2])))
        if rows.shape[0] >= 2 else 0.0
    )

    weighted = np.cumsum(partial, axis=1) / np.arange(1, rows.shape[1] + 1)
    d = np.abs(alpha[:, None] - weighted)
    surface = DeviationSurface(m_values=fam.m_values, d=d)
    tail_n, tail_sup_vals = tail_supremum(d, fam.m_values)
    return TauberHarnessReport(
        l_observed=l_observed,
        uniform_gap=uniform_gap,
        deviation=surface,
        tail_n=tail_n,
        tail_sup=tail_sup_vals,
        iii_bounded=iii_bounded,
        abel_values=abel_vals,
        t_grid=t_grid,
    )


# -- exact finite-ledger decomposition ------------------------------------


def tauber_decomposition_check(ld: LogData, n: int, r: float) -> float:
    """Residual of the split of F(r) - sigma_n into weighted delta sums.

    Both sides are computed from the same finite ledger with the same
    truncation K (the ledger top index):

        LHS = sum_{k<=K} b_k r^k - sigma_n
        RHS = (1-r) sum_{k=1}^{K} delta_k r^k
              + sum_{k=n}^{K} (delta_k / k) r^k
              + sum_{k=1}^{n-1} (delta_k / k) (r^k - 1)
              - delta_n / n
              + delta_K r^{K+1}

    The last term closes the truncation of the two telescoping formulas
    at order K, making the identity exact up to rounding; it vanishes as
    K grows.  Tests algebra, not analysis.
    """
    if not 0.0 < r < 1.0:
        raise InvalidParameter("r must lie in (0, 1)")
    k_top = ld.top_index
    if not 2 <= n <= k_top:
        raise IndexOutOfRange(f"n must lie in 2..{k_top}")
    b = ld.f_coeffs
    delta = ld.delta
    rk = r ** np.arange(k_top + 1)

    lhs = np.dot(b, rk) - ld.sigma[n]
    ks = np.arange(1, k_top + 1, dtype=float)
    rhs = (1.0 - r) * np.dot(delta[1:], rk[1:])
    rhs += np.dot(delta[n:] / ks[n - 1 :], rk[n:])
    rhs += np.dot(delta[1:n] / ks[: n - 1], rk[1:n] - 1.0)
    rhs -= delta[n] / n
    rhs += delta[k_top] * r ** (k_top + 1)
    return float(abs(lhs - rhs))


# -- uniform-convergence gap estimator ------------------------------------


@dataclass(frozen=True)
class UniformGapReport:
    sup_gaps: np.ndarray
    dini_ok: bool
    limit_max_jump: float


def uniform_gap(samples, limit) -> UniformGapReport:
    """Sup-norm gaps of monotone sample rows against a candidate limit.

    Each row must be non-increasing along the shared grid (1e-9 slack);
    ``dini_ok`` records whether the gaps are eventually decreasing (the
    trailing half is non-increasing).  The limit's largest adjacent jump
    is reported as its continuity proxy.
    """
    samples = np.asarray(samples, dtype=float)
    limit = np.asarray(limit, dtype=float)
    if samples.ndim != 2 or limit.ndim != 1 or samples.shape[1] != len(limit):
        raise InvalidParameter("samples must be rows over the limit's grid")
    rises = np.diff(samples, axis=1)
    worst = float(np.max(rises)) if rises.size else 0.0
    if worst > 1e-9:
        m_bad = int(np.argmax(np.max(rises, axis=1)))
        raise NotMonotone(
            f"sample row {m_bad} increases by {worst:.3g} along the grid"
        )
    sup_gaps = np.max(np.abs(samples - limit[None, :]), axis=1)
    half = len(sup_gaps) // 2
    trailing = sup_gaps[half:]
    dini_ok = bool(np.all(np.diff(trailing) <= 1e-12))
    limit_max_jump = float(np.max(np.abs(np.diff(limit)))) if len(limit) > 1 else 0.0
    return UniformGapReport(sup_gaps=sup_gaps, dini_ok=dini_ok,
                            limit_max_jump=limit_max_jump)


def euler_bracket(n: int):
    """((1 - 1/(n+1))^{n+1}, (1 - 1/(n+1))^n) and whether 1/e sits inside."""
    if n < 1:
        raise InvalidParameter("n must be at least 1")
    base = 1.0 - 1.0 / (n + 1)
    lower = base ** (n + 1)
    upper = base ** n
    ok = lower < np.exp(-1.0) < upper
    return lower, upper, bool(ok)
