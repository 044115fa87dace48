import warnings

import numpy as np
import pytest

from pqharmonic.errors import InvalidWeights, NotMember
from pqharmonic.extremal import (NonUnivalentWarning, WeightVector, combine, decompose, extreme_g,
                                 extreme_h, random_t_member, random_weights)
from pqharmonic.family import coefficient_functional, is_member_sufficient, is_member_T
from pqharmonic.series import HarmonicFunction

from conftest import all_presets

H = HarmonicFunction.from_coeffs


def test_extreme_h_examples(starlike, convex):
    assert extreme_h(starlike, 1).allclose(H())
    assert extreme_h(starlike, 2).allclose(H([-0.25]))
    assert extreme_h(convex, 2).allclose(H([-0.0625]))


def test_extreme_g_examples(starlike, convex):
    assert extreme_g(starlike, 2).allclose(H([], [0, -0.25]))
    with pytest.warns(NonUnivalentWarning):
        g1 = extreme_g(starlike, 1)
    assert g1.allclose(H([], [-1.0]))
    with pytest.warns(NonUnivalentWarning):
        assert extreme_g(convex, 1).allclose(H([], [-1.0]))


@pytest.mark.parametrize("spec", all_presets(0.25), ids=lambda s: s.name)
def test_extreme_points_on_boundary(spec):
    assert coefficient_functional(extreme_h(spec, 1), spec) == 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonUnivalentWarning)
        for k in range(2, 9):
            assert coefficient_functional(extreme_h(spec, k), spec) == pytest.approx(1, abs=1e-12)
        for k in range(1, 9):
            assert coefficient_functional(extreme_g(spec, k), spec) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("spec", all_presets(0.25), ids=lambda s: s.name)
def test_extreme_supports_disjoint(spec):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonUnivalentWarning)
        supports = set()
        for k in range(2, 9):
            f = extreme_h(spec, k)
            s = tuple(("a", i) for i in np.flatnonzero(f.a[2:]) + 2)
            assert len(s) == 1
            supports.add(s)
        for k in range(1, 9):
            f = extreme_g(spec, k)
            s = tuple(("b", i) for i in np.flatnonzero(f.b[1:]) + 1)
            assert len(s) == 1
            supports.add(s)
    assert len(supports) == 15


def test_combine_examples(starlike):
    assert combine(starlike, WeightVector([1.0], [])).allclose(H())
    f = combine(starlike, WeightVector([0.0, 1.0], []))
    assert f.allclose(H([-0.25])) and coefficient_functional(f, starlike) == pytest.approx(1)
    f = combine(starlike, WeightVector([0.0, 0.5], [0.0, 0.5]))
    assert f.allclose(H([-0.125], [0, -0.125]))


def test_combine_rejects_bad_weights(starlike):
    with pytest.raises(InvalidWeights):
        combine(starlike, WeightVector([0.5], []))
    with pytest.raises(InvalidWeights):
        combine(starlike, WeightVector([1.5, -0.5], []))


def test_decompose_examples(starlike):
    w = decompose(H(), starlike)
    assert w.x[0] == 1 and w.x[1:].sum() == 0 and w.y.sum() == 0
    w = decompose(H([-0.25]), starlike)
    assert w.x[1] == pytest.approx(1) and w.x[0] == pytest.approx(0)
    w = decompose(H([-0.125], [0, -0.125]), starlike)
    assert w.x[1] == pytest.approx(0.5) and w.y[1] == pytest.approx(0.5)
    assert w.x[0] == pytest.approx(0, abs=1e-15)


def test_decompose_rejects_non_members(starlike):
    with pytest.raises(NotMember):
        decompose(H([-0.3]), starlike)
    with pytest.raises(NotMember):
        decompose(H([0.1]), starlike)


@pytest.mark.parametrize("spec", all_presets(0.6), ids=lambda s: s.name)
def test_closure_under_combination(spec, rng):
    for _ in range(1000 // 6):
        f = combine(spec, random_weights(rng, spec.trunc))
        assert is_member_sufficient(f, spec)
        assert coefficient_functional(f, spec) <= 1 + 1e-12


@pytest.mark.parametrize("spec", all_presets(0.3), ids=lambda s: s.name)
def test_round_trip(spec, rng):
    for _ in range(20):
        f = random_t_member(spec, rng)
        assert is_member_T(f, spec)
        assert combine(spec, decompose(f, spec)).allclose(f, atol=1e-12)
