"""Brute-force numerical oracles on polar grids of the unit disc."""

from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from . import bounds as _bounds
from .errors import PreconditionUnmet
from .family import FamilySpec, coefficient_functional, fit_truncation, has_t_pattern, ratio_parts
from .series import HarmonicFunction, derivative_parts, evaluate

DISTORTION_ANGLES = 720


@dataclass(frozen=True)
class GridSpec:
    radii: tuple[float, ...]
    angles_per_circle: int = 360
    r_max: float = 0.999

    def __post_init__(self):
        radii = tuple(sorted(float(r) for r in self.radii))
        if not radii or radii[0] <= 0 or radii[-1] >= 1 or radii[-1] > self.r_max + 1e-15:
            raise ValueError("radii must lie in (0, r_max] with r_max < 1")
        if self.r_max >= 1:
            raise ValueError("r_max must be < 1")
        if self.angles_per_circle < 8:
            raise ValueError("need at least 8 angles per circle")
        object.__setattr__(self, "radii", radii)

    @classmethod
    def uniform(cls, n_radii: int = 12, angles: int = 360, r_max: float = 0.999) -> "GridSpec":
        return cls(tuple(r_max * (i + 1) / n_radii for i in range(n_radii)), angles, r_max)

    @property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angles_per_circle) / self.angles_per_circle

    def circle(self, r: float) -> np.ndarray:
        return r * np.exp(1j * self.angles)

    def to_json(self) -> dict:
        return {"radii": list(self.radii), "angles_per_circle": self.angles_per_circle,
                "r_max": self.r_max}


@dataclass
class VerificationReport:
    passed: bool
    min_margin: float
    witness: complex | None = None
    checks_run: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        m = self.min_margin
        return {
            "passed": self.passed,
            "min_margin": m if math.isfinite(m) else str(m),
            "witness": None if self.witness is None else [self.witness.real, self.witness.imag],
            "checks_run": self.checks_run,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class _Chunk:
    """Per-circle minimum: (margin, r, theta, z, count, zero_hits)."""

    margin: float
    r: float
    theta: float
    z: complex | None
    count: int
    bad: int


def _chunk_min(margins: np.ndarray, r: float, thetas: np.ndarray, zs: np.ndarray) -> _Chunk:
    bad = int(np.count_nonzero(np.isnan(margins)))
    m = np.where(np.isnan(margins), -np.inf, margins)
    idx = int(np.argmin(m))  # first occurrence = smallest theta on ties
    return _Chunk(float(m[idx]), r, float(thetas[idx]), complex(zs[idx]), m.size, bad)


def reduce_chunks(chunks) -> tuple[float, complex | None, int, int]:
    """Order-independent min-reduction; ties go to the lexicographically smallest (r, theta)."""
    chunks = list(chunks)
    if not chunks:
        return math.inf, None, 0, 0
    best = min(chunks, key=lambda c: (c.margin, c.r, c.theta))
    return best.margin, best.z, sum(c.count for c in chunks), sum(c.bad for c in chunks)


def _report(chunks, tol, label) -> VerificationReport:
    margin, witness, count, bad = reduce_chunks(chunks)
    notes = []
    if bad:
        notes.append(f"{label}: {bad} grid point(s) with vanishing denominator counted as failures")
    return VerificationReport(margin >= -tol, margin, witness, count, notes)


def re_condition_chunks(f: HarmonicFunction, spec: FamilySpec, grid: GridSpec):
    f = fit_truncation(f, spec)
    th = grid.angles
    for r in grid.radii:
        z = grid.circle(r)
        num, den = ratio_parts(f, spec, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            margin = np.where(np.abs(den) < 1e-14, np.nan, (num / den).real - spec.alpha)
        yield _chunk_min(margin, r, th, z)


def check_re_condition(f: HarmonicFunction, spec: FamilySpec, grid: GridSpec | None = None,
                       tol: float = 1e-9) -> VerificationReport:
    """min over the grid of Re(ratio) - alpha."""
    grid = grid or GridSpec.uniform()
    return _report(re_condition_chunks(f, spec, grid), tol, "re-condition")


def sense_chunks(f: HarmonicFunction, grid: GridSpec):
    th = grid.angles
    for r in grid.radii:
        z = grid.circle(r)
        hp, gp = derivative_parts(f, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            margin = np.where(np.abs(hp) < 1e-14, np.nan, 1.0 - np.abs(gp / hp))
        yield _chunk_min(margin, r, th, z)


def check_sense_preserving(f: HarmonicFunction, grid: GridSpec | None = None,
                           tol: float = 1e-9) -> VerificationReport:
    """min over the grid of 1 - |g'/h'|; critical points of h count as failures."""
    grid = grid or GridSpec.uniform()
    return _report(sense_chunks(f, grid), tol, "sense-preserving")


def check_distortion(f: HarmonicFunction, spec: FamilySpec, mode=_bounds.DistortionMode.PROOF,
                     radii=None, tol: float = 1e-9,
                     angles: int = DISTORTION_ANGLES) -> VerificationReport:
    """Sampled |f(r e^{it})| against the distortion envelope at each radius."""
    if radii is None:
        radii = [0.1 * i for i in range(1, 10)]
    b1 = abs(f.b[1])
    th = 2 * np.pi * np.arange(angles) / angles
    chunks = []
    for r in sorted(radii):
        z = r * np.exp(1j * th)
        mod = np.abs(evaluate(f, z))
        lo, hi = _bounds.distortion(spec, b1, r, mode)
        chunks.append(_chunk_min(np.minimum(mod - lo, hi - mod), r, th, z))
    return _report(chunks, tol, "distortion")


def convex_image_test(f: HarmonicFunction, r: float, samples: int = 720,
                      rel_slack: float = 1e-12) -> bool:
    """Is the sampled image curve t -> f(r e^{it}) a convex polygon?"""
    if not 0 < r < 1:
        raise ValueError("need 0 < r < 1")
    if samples < 64:
        raise ValueError("need at least 64 samples")
    th = 2 * np.pi * np.arange(samples) / samples
    pts = evaluate(f, r * np.exp(1j * th))
    e = np.roll(pts, -1) - pts
    e = e[np.abs(e) > 0]
    if e.size < 3:
        return False
    e_next = np.roll(e, -1)
    cross = (np.conj(e) * e_next).imag
    slack = rel_slack * np.abs(e) * np.abs(e_next)
    one_sign = bool(np.all(cross >= -slack) or np.all(cross <= slack))
    if not one_sign:
        return False
    turning = float(np.sum(np.angle(e_next / e)))
    return abs(abs(turning) - 2 * np.pi) < 1e-6


def brute_convexity_radius(f: HarmonicFunction, tol_r: float = 1e-3, samples: int = 2048,
                           r_cap: float = 0.999) -> float:
    """Bisection estimate of the largest r with convex images at r and 0.99 r."""

    def ok(r):
        return convex_image_test(f, r, samples) and convex_image_test(f, 0.99 * r, samples)

    if ok(r_cap):
        return r_cap
    lo, hi = 0.0, r_cap
    while hi - lo > tol_r:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def necessity_radii() -> np.ndarray:
    return np.concatenate([np.linspace(0.0, 0.99, 2000)[1:], 1.0 - np.geomspace(1e-2, 1e-4, 400)[1:]])


def necessity_probe(f: HarmonicFunction, spec: FamilySpec, margin: float = 0.05) -> VerificationReport:
    """Walk z = r up the positive real axis looking for Re(ratio) < alpha.

    ``passed`` means a violation was found.
    """
    if margin < 0.05:
        raise PreconditionUnmet("the probe needs a violation margin of at least 0.05")
    if not has_t_pattern(f, spec):
        raise PreconditionUnmet("function lacks the T-family sign pattern")
    F = coefficient_functional(f, spec)
    if F < 1.0 + margin:
        raise PreconditionUnmet(f"functional {F:.6g} < 1 + {margin}")
    r = necessity_radii()
    num, den = ratio_parts(f, spec, r.astype(complex))
    with np.errstate(divide="ignore", invalid="ignore"):
        val = (num / den).real - spec.alpha
    bad = np.flatnonzero(val < 0)
    notes = [f"functional = {F:.12g}"]
    if bad.size:
        idx = int(bad[0])
        return VerificationReport(True, float(val[idx]), complex(r[idx]), int(r.size), notes)
    return VerificationReport(False, float(np.nanmin(val)), None, int(r.size),
                              notes + ["no violation found below r = 0.9999"])
