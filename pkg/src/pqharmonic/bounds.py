"""Closed-form coefficient, distortion, covering and convexity-radius bounds for the T-family.

The distortion bound comes in two flavours that differ only in the divisor
of the |b_1| correction term D:

* ``"statement"``: D = phi_1 / beta
* ``"proof"``:     D = phi_1 / (1 - alpha)

The proof form is what the coefficient inequality actually supports and is
the default everywhere.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

import numpy as np

from .errors import DegenerateDenominator, HypothesisViolated, NonpositiveDenominator
from .family import FamilySpec

RADIUS_K_MAX = 512
RADIUS_STOP_AFTER = 8


class DistortionMode(str, Enum):
    STATEMENT = "statement"
    PROOF = "proof"


def _mode(mode) -> DistortionMode:
    return DistortionMode(mode.value if isinstance(mode, DistortionMode) else mode)


def coeff_bounds(spec: FamilySpec, k: int) -> tuple[float | None, float]:
    """(max |a_k|, max |b_k|) over the T-family; a_max is None for k = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ph = spec.phis(k)[k]
    if ph <= 0:
        raise NonpositiveDenominator(f"phi_{k} = {ph} <= 0")
    b_max = (1.0 - spec.alpha) / ph
    if k == 1:
        return None, b_max
    g = spec.gammas(k)[k]
    if g <= 0:
        raise NonpositiveDenominator(f"gamma_{k} = {g} <= 0")
    return (1.0 - spec.alpha) / g, b_max


def beta(spec: FamilySpec) -> float:
    return float(min(spec.gammas(2)[2], spec.phis(2)[2]))


def check_thm3_hypothesis(spec: FamilySpec, K: int = 50) -> bool:
    """True iff gamma_2..gamma_K and phi_1..phi_K are non-decreasing."""
    if K < 3:
        raise ValueError("probe depth K must be >= 3")
    limit = min(spec.lam.max_index, spec.u.max_index, spec.mu.max_index, spec.v.max_index)
    K = int(min(K, limit))
    g = spec.gammas(K)[2:]
    ph = spec.phis(K)[1:]
    return bool(np.all(np.diff(g) >= 0) and np.all(np.diff(ph) >= 0))


def _b1_factor(spec: FamilySpec, mode: DistortionMode) -> float:
    phi1 = spec.phis(1)[1]
    divisor = beta(spec) if mode is DistortionMode.STATEMENT else 1.0 - spec.alpha
    return phi1 / divisor


def _require_hypothesis(spec: FamilySpec):
    if not check_thm3_hypothesis(spec):
        raise HypothesisViolated("gamma_k / phi_k are not non-decreasing")
    if beta(spec) <= 0:
        raise HypothesisViolated("beta <= 0")


def distortion(spec: FamilySpec, b1_abs: float, r, mode=DistortionMode.PROOF):
    """(lower, upper) bounds on |f(z)| for |z| = r; r may be an array.

    The lower bound is clamped at 0.
    """
    mode = _mode(mode)
    _require_hypothesis(spec)
    r = np.asarray(r, dtype=float)
    c = (1.0 - spec.alpha) / beta(spec) * (1.0 - _b1_factor(spec, mode) * b1_abs)
    upper = (1.0 + b1_abs) * r + c * r**2
    lower = np.maximum((1.0 - b1_abs) * r - c * r**2, 0.0)
    if r.ndim == 0:
        return float(lower), float(upper)
    return lower, upper


def covering_radius(spec: FamilySpec, b1_abs: float, mode=DistortionMode.PROOF) -> float:
    """Radius of a disc centred at 0 contained in f(D)."""
    mode = _mode(mode)
    _require_hypothesis(spec)
    bt = beta(spec)
    alpha = spec.alpha
    if mode is DistortionMode.STATEMENT:
        phi1 = spec.phis(1)[1]
        return float((bt - 1.0 + alpha + (phi1 - bt) * b1_abs) / bt)
    d = _b1_factor(spec, mode)
    return float((1.0 - b1_abs) - (1.0 - alpha) / bt * (1.0 - d * b1_abs))


def convexity_radius_terms(spec: FamilySpec, b1_abs: float, ks: Iterable[int]) -> np.ndarray:
    denom = 1.0 - spec.phis(1)[1] / (1.0 - spec.alpha) * b1_abs
    if denom <= 0:
        raise DegenerateDenominator(f"1 - phi_1 b_1/(1-alpha) = {denom} <= 0")
    ks = np.asarray(list(ks), dtype=float)
    return ((1.0 - b1_abs) / (ks * denom)) ** (1.0 / (ks - 1.0))


def convexity_radius(spec: FamilySpec, b1_abs: float) -> float:
    """min_k {(1 - b_1) / (k [1 - phi_1 b_1/(1 - alpha)])}^(1/(k-1)), capped at 1."""
    best = np.inf
    prev = np.inf
    rising = 0
    for k in range(2, RADIUS_K_MAX + 1):
        t = float(convexity_radius_terms(spec, b1_abs, [k])[0])
        best = min(best, t)
        rising = rising + 1 if t > prev else 0
        if rising >= RADIUS_STOP_AFTER:
            break
        prev = t
    return float(min(best, 1.0))
