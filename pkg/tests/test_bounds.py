import numpy as np
import pytest

from pqharmonic.bounds import (DistortionMode, beta, check_thm3_hypothesis, coeff_bounds,
                               convexity_radius, convexity_radius_terms, covering_radius, distortion)
from pqharmonic.errors import DegenerateDenominator, HypothesisViolated, NonpositiveDenominator
from pqharmonic.family import FamilySpec, preset

from conftest import all_presets

MODES = list(DistortionMode)


def test_coeff_bounds(starlike, convex):
    assert coeff_bounds(starlike, 2) == pytest.approx((0.25, 0.25))
    assert coeff_bounds(starlike, 1)[1] == pytest.approx(1.0)
    assert coeff_bounds(convex, 2) == pytest.approx((0.0625, 0.0625))


def test_coeff_bounds_degenerate():
    spec = FamilySpec(m=0, n=0, i=0, j=0, lam="k", mu=[0.0] * 8, u="1", v=[0.0] * 8, trunc=8)
    with pytest.raises(NonpositiveDenominator):
        coeff_bounds(spec, 1)


def test_beta():
    assert beta(preset("starlike")) == 4
    assert beta(preset("starlike", 0.5)) == 3.5
    assert beta(preset("starlike_q", q=0.5)) == pytest.approx(3.0)


def test_hypothesis():
    assert check_thm3_hypothesis(preset("starlike"), 50)
    assert check_thm3_hypothesis(preset("convex", 0.9), 50)
    lam = [5.0, 1.0] + [float(k) + 10 for k in range(4, 65)]
    bad = FamilySpec(m=0, n=0, lam=lam, u=[0.0] * 63, mu="k", v="1")
    assert not check_thm3_hypothesis(bad, 50)
    with pytest.raises(HypothesisViolated):
        distortion(bad, 0.0, 0.5)


def test_distortion_examples(starlike):
    for mode in MODES:
        assert distortion(starlike, 0.0, 0.5, mode) == pytest.approx((0.4375, 0.5625))
        assert distortion(starlike, 0.3, 0.0, mode) == (0.0, 0.0)
    assert distortion(starlike, 0.2, 0.5, "proof") == pytest.approx((0.35, 0.65))


def test_distortion_lower_clamped():
    lo, _ = distortion(preset("convolution", 0.0), 0.9, 0.99)
    assert lo >= 0.0


def test_covering_examples(starlike):
    for mode in MODES:
        assert covering_radius(starlike, 0.0, mode) == pytest.approx(0.75)
    assert covering_radius(preset("starlike", 0.5), 0.0, "statement") == pytest.approx(1 - 0.5 / 3.5)
    assert covering_radius(starlike, 0.2, "proof") == pytest.approx(0.6)


@pytest.mark.parametrize("spec", all_presets(0.3), ids=lambda s: s.name)
@pytest.mark.parametrize("b1", [0.0, 0.1, 0.4])
def test_covering_is_limit_of_lower_bound(spec, b1):
    bt = beta(spec)
    c = (1 - spec.alpha) / bt * (1 - spec.phis(1)[1] / (1 - spec.alpha) * b1)
    limit = (1 - b1) - c  # lower bound polynomial evaluated at r = 1
    assert covering_radius(spec, b1, "proof") == pytest.approx(limit, abs=1e-12)


@pytest.mark.parametrize("spec", all_presets(0.3), ids=lambda s: s.name)
def test_modes_agree_at_b1_zero(spec):
    r = np.linspace(0, 0.99, 50)
    lo_s, hi_s = distortion(spec, 0.0, r, "statement")
    lo_p, hi_p = distortion(spec, 0.0, r, "proof")
    assert np.allclose(lo_s, lo_p, rtol=0, atol=1e-12) and np.allclose(hi_s, hi_p, rtol=0, atol=1e-12)
    assert covering_radius(spec, 0.0, "statement") == pytest.approx(
        covering_radius(spec, 0.0, "proof"), abs=1e-12)


@pytest.mark.parametrize("spec", all_presets(0.2), ids=lambda s: s.name)
def test_distortion_monotone(spec):
    r = np.linspace(0, 0.999, 400)
    for b1 in (0.0, 0.3):
        lo, hi = distortion(spec, b1, r)
        assert np.all(np.diff(hi) >= 0)
        c = (1 - spec.alpha) / beta(spec) * (1 - spec.phis(1)[1] / (1 - spec.alpha) * b1)
        vertex = (1 - b1) / (2 * c) if c > 0 else np.inf
        below = r < vertex
        assert np.all(np.diff(lo[below]) >= -1e-15)


def test_convexity_radius_examples(starlike):
    assert convexity_radius(starlike, 0.0) == 0.5
    for alpha in (0.0, 0.3, 0.8):
        for b1 in (0.0, 0.2, 0.7):
            assert convexity_radius(preset("starlike", alpha), b1) == pytest.approx(0.5, abs=1e-15)
    spec = FamilySpec(m=0, n=0, mu=[2.0] * 64, v="1", lam="k", u="1", alpha=0.0)
    with pytest.raises(DegenerateDenominator):
        convexity_radius(spec, 0.5)


@pytest.mark.parametrize("spec", all_presets(0.4), ids=lambda s: s.name)
def test_convexity_radius_range_and_argmin(spec):
    r = convexity_radius(spec, 0.0)
    assert 0 < r <= 1
    t2, t3 = convexity_radius_terms(spec, 0.0, [2, 3])
    if t2 <= t3:
        assert r == pytest.approx(t2)
    brute = min(convexity_radius_terms(spec, 0.0, range(2, 513)).min(), 1.0)
    assert r == pytest.approx(brute)
