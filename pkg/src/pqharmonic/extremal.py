"""Extreme points of the T-family hull and the weight decomposition of its members."""

from __future__ import annotations

from dataclasses import dataclass
import warnings

import numpy as np

from .errors import InvalidWeights, NotMember
from .family import FamilySpec, is_member_T, fit_truncation
from .series import HarmonicFunction

WEIGHT_TOL = 1e-12


class NonUnivalentWarning(UserWarning):
    """Raised for hull elements with |b_1| = 1 (outside the open class)."""


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Convex weights; ``x[k-1]`` pairs with h_k and ``y[k-1]`` with g_{m_k}."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.array(self.x, dtype=float).ravel()
        y = np.array(self.y, dtype=float).ravel()
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def validate(self, tol: float = WEIGHT_TOL):
        if np.any(self.x < -tol) or np.any(self.y < -tol):
            raise InvalidWeights("weights must be non-negative")
        total = self.x.sum() + self.y.sum()
        if abs(total - 1.0) > tol:
            raise InvalidWeights(f"weights sum to {total!r}, expected 1")

    def to_json(self) -> dict:
        return {"x": self.x.tolist(), "y": self.y.tolist()}


def _h_coeff(spec: FamilySpec) -> np.ndarray:
    """(1 - alpha)/gamma_k for k = 0..N, zero below k = 2."""
    g = spec.gammas()
    out = np.zeros_like(g)
    out[2:] = (1.0 - spec.alpha) / g[2:]
    return out


def _g_coeff(spec: FamilySpec) -> np.ndarray:
    """(-1)^(m+i-1) (1 - alpha)/phi_k for k = 0..N, zero at k = 0."""
    ph = spec.phis()
    out = np.zeros_like(ph)
    out[1:] = spec.t_sign * (1.0 - spec.alpha) / ph[1:]
    return out


def extreme_h(spec: FamilySpec, k: int) -> HarmonicFunction:
    """h_1 = z and h_k = z - (1 - alpha)/gamma_k z^k."""
    if not 1 <= k <= spec.trunc:
        raise ValueError(f"k must lie in 1..{spec.trunc}")
    f = HarmonicFunction.identity(spec.trunc)
    if k == 1:
        return f
    a = f.a.copy()
    a[k] = -_h_coeff(spec)[k]
    return HarmonicFunction(a, f.b)


def extreme_g(spec: FamilySpec, k: int) -> HarmonicFunction:
    """g_{m_k} = z + (-1)^(m+i-1) (1 - alpha)/phi_k conj(z)^k.

    For k = 1 the co-analytic coefficient can reach modulus 1; such a point
    is returned with a :class:`NonUnivalentWarning`.
    """
    if not 1 <= k <= spec.trunc:
        raise ValueError(f"k must lie in 1..{spec.trunc}")
    f = HarmonicFunction.identity(spec.trunc)
    b = f.b.copy()
    b[k] = _g_coeff(spec)[k]
    if k == 1 and abs(b[1]) >= 1.0 - WEIGHT_TOL:
        warnings.warn(f"extreme point g_1 has |b_1| = {abs(b[1]):.6g}; not sense-preserving",
                      NonUnivalentWarning, stacklevel=2)
    return HarmonicFunction(f.a, b)


def is_degenerate_extreme(spec: FamilySpec, kind: str, k: int) -> bool:
    return bool(kind == "g" and k == 1 and abs(_g_coeff(spec)[1]) >= 1.0 - WEIGHT_TOL)


def combine(spec: FamilySpec, w: WeightVector, tol: float = WEIGHT_TOL) -> HarmonicFunction:
    """sum_k x_k h_k + y_k g_{m_k}."""
    w.validate(tol)
    n = spec.trunc
    if w.x.size > n or w.y.size > n:
        raise InvalidWeights(f"weights extend past truncation {n}")
    x = np.zeros(n + 1)
    y = np.zeros(n + 1)
    x[1 : 1 + w.x.size] = w.x
    y[1 : 1 + w.y.size] = w.y
    a = -_h_coeff(spec) * x
    a[1] = 1.0
    b = _g_coeff(spec) * y
    return HarmonicFunction(a.astype(complex), b.astype(complex))


def decompose(f: HarmonicFunction, spec: FamilySpec, tol: float = 1e-12) -> WeightVector:
    """Weights x_k = gamma_k |a_k|/(1-alpha), y_k = phi_k |b_k|/(1-alpha), x_1 = remainder."""
    if not is_member_T(f, spec, tol):
        raise NotMember("function is not a T-family member for this spec")
    f = fit_truncation(f, spec)
    scale = 1.0 - spec.alpha
    x = spec.gammas() * np.abs(f.a) / scale
    y = spec.phis() * np.abs(f.b) / scale
    x[:2] = 0.0
    y[0] = 0.0
    # round-off can push the remainder a hair below zero at the boundary
    x[1] = max(1.0 - x[2:].sum() - y[1:].sum(), 0.0)
    return WeightVector(x[1:], y[1:])


def random_weights(rng: np.random.Generator, n: int, concentration: float = 0.3) -> WeightVector:
    """Dirichlet-distributed weights over x_1..x_n, y_1..y_n."""
    w = rng.dirichlet(np.full(2 * n, concentration))
    return WeightVector(w[:n], w[n:])


def random_t_member(spec: FamilySpec, rng: np.random.Generator, *, max_b1: float = 0.95,
                    concentration: float = 0.3) -> HarmonicFunction:
    """Random hull element whose |b_1| stays below ``max_b1``."""
    n = spec.trunc
    w = rng.dirichlet(np.full(2 * n, concentration))
    x, y = w[:n], w[n:]
    cap = max_b1 / abs(_g_coeff(spec)[1])
    if y[0] > cap:
        x[0] += y[0] - cap
        y[0] = cap
    return combine(spec, WeightVector(x, y))
