"""Entropy functions, the optimized sparse-sum exponent, and every explicit
bound formula, all evaluated in log2 space (raw values overflow past r ~ 100).

The exponent eta(rho) minimizes, over a weight-split parameter kappa and a
cutoff parameter lambda, the maximum of three exponent pieces:

  small-weight piece   f = kappa*H(lambda/kappa) + (1-kappa)*H*((rho-lambda)/(1-kappa))
  cross-pair piece     g = 1/4 + (H(rho) + (1-kappa)*H*((rho-lambda)/(1-kappa))) / 2
  diagonal-pair piece  h = (H(rho) + kappa) / 2

subject to 0 < kappa < 1 and 0 < lambda <= kappa*rho (the split-entropy
profile peaks at kappa*rho, so larger lambda never helps).  The max of the
three is piecewise smooth with kinks at the H* plateau and at envelope
switches, so the minimizer is a dense grid followed by shrinking-window
refinement rather than anything gradient-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def entropy_H(g: float) -> float:
    """Binary entropy; 0 at both endpoints."""
    if not 0.0 <= g <= 1.0:
        raise ValueError(f"entropy argument {g} outside [0, 1]")
    if g == 0.0 or g == 1.0:
        return 0.0
    return -g * math.log2(g) - (1.0 - g) * math.log2(1.0 - g)


def entropy_Hstar(g: float) -> float:
    """Binary entropy capped at its maximum: H on [0, 1/2], 1 above."""
    if g < 0.0:
        raise ValueError(f"capped entropy argument {g} negative")
    return 1.0 if g > 0.5 else entropy_H(g)


def _check_params(rho: float, kappa: float, lam: float) -> None:
    if not 0.0 < rho <= 0.5:
        raise ValueError(f"rho={rho} outside (0, 1/2]")
    if not 0.0 < kappa < 1.0:
        raise ValueError(f"kappa={kappa} outside (0, 1)")
    if not 0.0 < lam <= kappa * rho + 1e-15:
        raise ValueError(f"lambda={lam} outside (0, kappa*rho]")


def exponent_small_weight(rho: float, kappa: float, lam: float) -> float:
    _check_params(rho, kappa, lam)
    return kappa * entropy_H(lam / kappa) + (1.0 - kappa) * entropy_Hstar((rho - lam) / (1.0 - kappa))


def exponent_cross_pairs(rho: float, kappa: float, lam: float) -> float:
    _check_params(rho, kappa, lam)
    tail = (1.0 - kappa) * entropy_Hstar((rho - lam) / (1.0 - kappa))
    return 0.25 + 0.5 * (entropy_H(rho) + tail)


def exponent_diag_pairs(rho: float, kappa: float, lam: float) -> float:
    # independent of lam; the argument is kept for a uniform signature
    _check_params(rho, kappa, lam)
    return 0.5 * (entropy_H(rho) + kappa)


@dataclass(frozen=True)
class EtaResult:
    rho: float
    eta: float
    kappa_opt: float
    lambda_opt: float
    tol: float


def _H_np(g: np.ndarray) -> np.ndarray:
    g = np.clip(g, 0.0, 1.0)
    out = np.zeros_like(g)
    inner = (g > 0.0) & (g < 1.0)
    gi = g[inner]
    out[inner] = -gi * np.log2(gi) - (1.0 - gi) * np.log2(1.0 - gi)
    return out


def _Hstar_np(g: np.ndarray) -> np.ndarray:
    return np.where(g > 0.5, 1.0, _H_np(np.minimum(g, 0.5)))


def _pieces(rho: float, kappa: np.ndarray, lam: np.ndarray):
    """The three exponent pieces, vectorized over (kappa, lambda) arrays."""
    h_rho = entropy_H(rho)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(kappa < 1.0, (rho - lam) / (1.0 - kappa), np.inf)
    tail = (1.0 - kappa) * _Hstar_np(np.where(np.isfinite(ratio), ratio, 1.0))
    f = kappa * _H_np(lam / kappa) + tail
    g = 0.25 + 0.5 * (h_rho + tail)
    h = 0.5 * (h_rho + kappa)
    return f, g, h


def _inner_min(rho: float, kappa: np.ndarray):
    """min over 0 < lambda <= kappa*rho of max(f, g, h), per kappa.

    On that range f is increasing in lambda (the split-entropy profile
    rises until kappa*rho) while g is nonincreasing and h constant, so the
    minimum sits either at a boundary or at the f = g crossing, found by
    lockstep bisection.
    """
    hi = kappa * rho
    lo = np.full_like(kappa, 1e-15)
    f_hi, g_hi, h = _pieces(rho, kappa, hi)
    f_lo, g_lo, _ = _pieces(rho, kappa, lo)

    at_hi = f_hi <= g_hi            # f never catches g: stay at the peak
    at_lo = f_lo >= g_lo            # f already above g: push lambda to 0+
    lam = np.where(at_hi, hi, lo)
    a, b = lo.copy(), hi.copy()
    for _ in range(64):
        mid = 0.5 * (a + b)
        f_m, g_m, _ = _pieces(rho, kappa, mid)
        below = f_m <= g_m
        a = np.where(below, mid, a)
        b = np.where(below, b, mid)
    cross = 0.5 * (a + b)
    lam = np.where(~at_hi & ~at_lo, cross, lam)
    f_v, g_v, _ = _pieces(rho, kappa, lam)
    return np.maximum(np.maximum(f_v, g_v), h), lam


@lru_cache(maxsize=4096)
def eta(rho: float, tol: float = 1e-5) -> EtaResult:
    """Minimize the exponent envelope over the feasible (kappa, lambda) set.

    Deterministic: the lambda direction is solved exactly per kappa (see
    _inner_min), and the remaining one-dimensional kappa problem is scanned
    on a dense grid and re-scanned on shrinking windows until the window is
    far below tol.  The returned value is an upper bound for the true
    minimum; the perturbation invariant in the tests keeps it honest.
    """
    if not 0.0 < rho <= 0.5:
        raise ValueError(f"rho={rho} outside (0, 1/2]")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    eps = 1e-9
    lo_k, hi_k = eps, 1.0 - eps
    best_k = best_lam = None
    best_v = math.inf
    for _ in range(14):
        kappa = np.linspace(lo_k, hi_k, 2001)
        vals, lams = _inner_min(rho, kappa)
        i = int(np.argmin(vals))
        if vals[i] < best_v:
            best_v = float(vals[i])
            best_k = float(kappa[i])
            best_lam = float(lams[i])
        step = kappa[1] - kappa[0]
        lo_k = max(eps, best_k - 2.0 * step)
        hi_k = min(1.0 - eps, best_k + 2.0 * step)
        if step < tol * 1e-4:
            break

    return EtaResult(rho=rho, eta=best_v, kappa_opt=best_k,
                     lambda_opt=best_lam, tol=tol)


def simplified_eta(rho: float) -> float:
    """The closed-form relaxation H(rho)/2 + 3/8 of the optimized exponent."""
    return 0.5 * entropy_H(rho) + 0.375


def split_entropy_unimodal(rho: float, kappa: float,
                           samples: int = 1000, slack: float = 1e-12) -> bool:
    """Check that E(lam) = kappa*H*(lam/kappa) + (1-kappa)*H*((rho-lam)/(1-kappa))
    increases on (0, kappa*rho] and decreases after, on a sampled grid."""
    if not (0.0 < kappa < 1.0 and 0.0 < rho <= 0.5):
        raise ValueError("need 0 < kappa < 1 and 0 < rho <= 1/2")
    peak = kappa * rho

    def e(lam: float) -> float:
        return (kappa * entropy_Hstar(lam / kappa)
                + (1.0 - kappa) * entropy_Hstar((rho - lam) / (1.0 - kappa)))

    xs = [rho * (i + 1) / (samples + 1) for i in range(samples)]
    prev = None
    for x in xs:
        cur = e(x)
        if prev is not None:
            if x <= peak and cur < prev - slack:
                return False
            if prev_x > peak and cur > prev + slack:
                return False
        prev, prev_x = cur, x
    # the peak value dominates every sample
    top = e(peak)
    return all(e(x) <= top + slack for x in xs)


def log2_binomial(n: int, k: int) -> float:
    if not 0 <= k <= n:
        raise ValueError(f"binomial ({n}, {k}) out of range")
    return math.log2(math.comb(n, k))


def trivial_bound_log2(q: int, r: int, s: int) -> float:
    """log2 of the summand count C(r,s)(q-1)^s."""
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    return log2_binomial(r, s) + s * math.log2(q - 1) if q > 1 else 0.0


def sparse_weil_bound_log2(q: int, r: int, s: int, d1: int, d2: int) -> float:
    """log2 of (d1 + max(d2,2)) * 2^{s+1} * C(r,s) * q^{r/2}."""
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    if d1 < 0 or d2 < 0:
        raise ValueError("degrees must be nonnegative")
    return (math.log2(d1 + max(d2, 2)) + (s + 1)
            + log2_binomial(r, s) + 0.5 * r * math.log2(q))


def mult_sparse_bound_log2(q: int, r: int, s: int, t: int) -> float:
    """log2 of 2^s * t * C(r,s) * q^{r/2} (pure multiplicative sums;
    t = number of distinct zeros and poles of the argument)."""
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    if t < 1:
        raise ValueError("t must be >= 1")
    return s + math.log2(t) + log2_binomial(r, s) + 0.5 * r * math.log2(q)


def sparse_exponent(r: int, s: int, tol: float = 1e-5) -> float:
    """eta(rho) * r with rho = min(s, r-s)/r.

    This is an exponent only: the bound it belongs to carries an o(r) term
    with no explicit constant, so it is never asserted against a specific
    computed sum.
    """
    if not 1 <= s < r:
        raise ValueError("need 1 <= s < r")
    rho = min(s, r - s) / r
    return eta(rho, tol).eta * r


def sqrt_count_bound_log2(q: int, r: int, s: int) -> float:
    """log2 of #G_r(s)^{1/2} * q^{3r/8}: the fixed-q generalization."""
    return 0.5 * trivial_bound_log2(q, r, s) + 0.375 * r * math.log2(q)


def weil_full_bound(q: int, r: int, d1: int, d2: int) -> float:
    """Full-field mixed-sum bound 2(D1+D2)q^{r/2}."""
    return 2.0 * (d1 + d2) * q ** (r / 2.0)


def weil_subspace_bound(q: int, r: int, d1: int, d2: int) -> float:
    """Coordinate-subspace bound 2(D1+max(D2,2))q^{r/2}."""
    return 2.0 * (d1 + max(d2, 2)) * q ** (r / 2.0)


def nontrivial_threshold(q: int) -> tuple[float, bool]:
    """Sparsity ratio s/r above which the large-q bound beats the trivial one.

    Returns (threshold, threshold < 1); the bound can only win for some
    feasible s when the threshold is below 1.
    """
    if q <= 3:
        raise ValueError("threshold needs q >= 4 (log2((q-1)/2) must be positive)")
    value = math.log2(q) / (2.0 * math.log2((q - 1) / 2.0))
    return value, value < 1.0


def entropy_inverse(c: float) -> float:
    """The unique rho in (0, 1/2] with H(rho) = c, by bisection to 1e-9.

    The exact maximum is special-cased: H is flat at 1/2, so float bisection
    cannot separate the endpoint from its 1e-8 neighborhood.
    """
    if not 0.0 < c <= 1.0:
        raise ValueError(f"target {c} outside (0, 1]")
    if c == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if entropy_H(mid) < c:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    return 0.5 * (lo + hi)


def binomial_sum_entropy_bound(n: int, gamma: float) -> bool:
    """Exact check of sum_{k <= gamma*n} C(n,k) <= 2^{n*H(gamma)}."""
    if not 0.0 < gamma <= 0.5:
        raise ValueError("need 0 < gamma <= 1/2")
    lhs = sum(math.comb(n, k) for k in range(int(gamma * n) + 1))
    return math.log2(lhs) <= n * entropy_H(gamma) + 1e-12


@dataclass(frozen=True)
class BoundRow:
    """One evaluated bound with its applicability and, if refused, why."""

    name: str
    log2_value: float
    applicable: bool
    reason: str = ""
