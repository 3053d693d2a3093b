"""Four-vector families, velocity transformation, helicity rule and the
infinite-velocity frame."""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tachyon.errors import ConstraintViolation, RegimeError, UndefinedHelicity
from tachyon.fourmomentum import (
    InfiniteVelocity,
    MassiveState,
    SpacelikeState,
    TachyonState,
    boost_four_vector,
    energy_momentum,
    four_vector,
    helicity_transform,
    infinite_velocity_frame,
    lorentz,
    massive_vector,
    s_transform,
    tachyon_dual_vector,
    tachyon_vector,
    transform_state,
    velocity_compose,
    wigner_rotation,
)
from tachyon.verify import random_subluminal, random_tachyon, random_unit

seeds = st.integers(0, 2**32 - 1)
X = np.array([1.0, 0.0, 0.0])


def printed_dual(w, s, c=1.0):
    """Family d exactly as printed (subtractive form)."""
    beta2 = w @ w / c**2
    root = math.sqrt(beta2 - 1)
    den = abs(s @ w) / c - root
    a0 = (beta2 / root - abs(s @ w) / c) / den
    a = (w / c / root - np.sign(s @ w) * s) / den
    return np.concatenate([[a0], a])


def printed_infinite_frame(w, s, c=1.0):
    root = math.sqrt(w @ w - c * c)
    return c * c * (w - np.sign(s @ w) * root * s) / (w @ w - abs(s @ w) * root)


def event_velocity(v, V, c=1.0):
    """Velocity seen from frame V, via two boosted worldline events."""
    L = lorentz(V, c)
    e1 = L @ np.concatenate([[c * 1.0], v])
    return c * e1[1:] / e1[0]


def tachyon_case(seed):
    rng = np.random.default_rng(seed)
    state = random_tachyon(rng)
    while True:
        V = random_subluminal(rng)
        if abs(state.w @ V - 1.0) > 1e-3:
            return state, V


class TestStates:
    def test_constraint_enforced(self):
        with pytest.raises(ConstraintViolation):
            TachyonState(1.0, [2.0, 0, 0], [0, 1.0, 0])

    def test_subluminal_tachyon_rejected(self):
        with pytest.raises(RegimeError):
            TachyonState(1.0, [0.5, 0, 0], [1.0, 0, 0])

    def test_infinite_must_follow_s(self):
        TachyonState(1.0, [-np.inf, 0, 0], [1.0, 0, 0])
        with pytest.raises(ConstraintViolation):
            TachyonState(1.0, [np.inf, 0, 0], [0, 1.0, 0])

    def test_massive_regime(self):
        with pytest.raises(RegimeError):
            MassiveState(1.0, [1.0, 0, 0])


class TestVelocityCompose:
    def test_identity(self):
        v = np.array([0.3, -0.2, 0.1])
        assert np.array_equal(velocity_compose(v, np.zeros(3)), v)

    def test_comoving(self):
        assert np.allclose(velocity_compose([0.5, 0, 0], [0.5, 0, 0]), 0.0, atol=1e-15)

    def test_infinite_signal(self):
        assert isinstance(velocity_compose([2.0, 0, 0], [0.5, 0, 0]), InfiniteVelocity)

    @given(seeds)
    def test_matches_event_oracle(self, seed):
        rng = np.random.default_rng(seed)
        V = random_subluminal(rng)
        for v in (random_subluminal(rng), random_tachyon(rng).w):
            assume(abs(1 - v @ V) > 1e-3)
            assert np.allclose(velocity_compose(v, V), event_velocity(v, V), rtol=1e-9, atol=1e-9)

    def test_infinite_input(self):
        V = np.array([0.3, 0.4, 0.0])
        out = velocity_compose([np.inf, 0, 0], V)
        # limit of a very fast finite velocity
        assert np.allclose(out, velocity_compose([1e12, 0, 0], V), rtol=1e-9)


class TestFamilies:
    def test_rest_frame(self):
        A = massive_vector([0, 0, 0])
        assert A.a0 == 1.0 and np.all(A.a == 0)

    def test_tachyon_example(self):
        A = tachyon_vector([2.0, 0, 0], [1.0, 0, 0])
        assert A.components == pytest.approx([1 / math.sqrt(3), 2 / math.sqrt(3), 0, 0], abs=1e-15)

    def test_tachyon_momentum_floor(self):
        A = tachyon_vector([1e8, 0, 0], [1.0, 0, 0])
        assert A.a0 == pytest.approx(0.0, abs=1e-7)
        assert np.linalg.norm(A.a) == pytest.approx(1.0, abs=1e-12)
        inf = tachyon_vector([np.inf, 0, 0], [1.0, 0, 0])
        assert inf.a0 == 0.0 and np.linalg.norm(inf.a) == 1.0

    def test_norms(self):
        assert massive_vector([0.3, 0.2, 0.1]).norm() == pytest.approx(1.0)
        assert four_vector("spacelike-s", SpacelikeState([0.3, 0, 0], [0, 1.0, 0])).norm() == pytest.approx(-1.0)
        assert tachyon_vector([2.0, 0.5, 0], [1.0, 0, 0]).norm() == pytest.approx(-1.0)

    @given(seeds)
    def test_dual_matches_printed_form(self, seed):
        state = random_tachyon(np.random.default_rng(seed))
        expected = printed_dual(state.w, state.s)
        got = tachyon_dual_vector(state).components
        assert np.allclose(got, expected, rtol=1e-7, atol=1e-9)

    @given(seeds)
    def test_comoving_boost_kills_momentum(self, seed):
        v = random_subluminal(np.random.default_rng(seed))
        A = boost_four_vector(massive_vector(v), v)
        assert A.components == pytest.approx([1, 0, 0, 0], abs=1e-12)

    @given(seeds)
    def test_norm_preserved(self, seed):
        state, V = tachyon_case(seed)
        for A in (tachyon_vector(state), tachyon_dual_vector(state)):
            assert boost_four_vector(A, V).norm() == pytest.approx(A.norm(), rel=1e-9, abs=1e-9)

    def test_zero_boost(self):
        A = tachyon_vector([2.0, 0.5, 0], [1.0, 0, 0])
        assert np.array_equal(boost_four_vector(A, np.zeros(3)).components, A.components)


class TestCovariance:
    @given(seeds)
    def test_massive(self, seed):
        rng = np.random.default_rng(seed)
        state, V = MassiveState(1.0, random_subluminal(rng)), random_subluminal(rng)
        lhs = boost_four_vector(four_vector("timelike-massive", state), V).components
        assert np.allclose(lhs, four_vector("timelike-massive", transform_state(state, V)).components, atol=1e-10)

    @given(seeds)
    def test_spacelike(self, seed):
        rng = np.random.default_rng(seed)
        state = SpacelikeState(random_subluminal(rng), random_unit(rng))
        V = random_subluminal(rng)
        lhs = boost_four_vector(four_vector("spacelike-s", state), V).components
        assert np.allclose(lhs, four_vector("spacelike-s", transform_state(state, V)).components, atol=1e-10)

    @given(seeds, st.sampled_from(["tachyon", "tachyon-dual"]))
    def test_tachyon_families(self, seed, family):
        state, V = tachyon_case(seed)
        lhs = boost_four_vector(four_vector(family, state), V).components
        rhs = four_vector(family, transform_state(state, V)).components
        assert np.allclose(lhs, rhs, rtol=1e-9, atol=1e-9)

    @given(seeds)
    def test_constraint_preserved(self, seed):
        state, V = tachyon_case(seed)
        moved = transform_state(state, V)
        if not moved.infinite:
            w, s = moved.w, moved.s
            assert (s @ w) ** 2 > w @ w - 1.0

    def test_to_infinite_velocity(self):
        state = TachyonState(1.0, [2.0, 0, 0], [1.0, 0, 0])
        moved = transform_state(state, [0.5, 0, 0])
        assert moved.infinite
        E, p = energy_momentum(moved)
        assert E == 0.0 and np.linalg.norm(p) == pytest.approx(1.0)


class TestHelicity:
    def test_below_threshold(self):
        assert helicity_transform(TachyonState(1.0, [2.0, 0, 0], X), [0.4, 0, 0]) == 1

    def test_above_threshold(self):
        assert helicity_transform(TachyonState(1.0, [2.0, 0, 0], X), [0.6, 0, 0]) == -1

    def test_zero_boost(self):
        state = TachyonState(1.0, [-3.0, 0.2, 0], X)
        assert helicity_transform(state, np.zeros(3)) == state.helicity

    def test_undefined_on_threshold(self):
        with pytest.raises(UndefinedHelicity):
            helicity_transform(TachyonState(1.0, [2.0, 0, 0], X), [0.5, 0, 0])

    @given(seeds)
    def test_sign_matches_boosted_energy(self, seed):
        state, V = tachyon_case(seed)
        boosted = boost_four_vector(tachyon_vector(state), V)
        predicted = helicity_transform(state, V)
        assert predicted == np.sign(boosted.a0)
        assert (predicted != state.helicity) == (state.w @ V > 1.0)


class TestInfiniteFrame:
    def test_worked_case(self):
        V = infinite_velocity_frame(TachyonState(1.0, [2.0, 0, 0], X))
        assert V == pytest.approx([0.5, 0, 0], abs=1e-12)

    @given(seeds)
    def test_identity_and_printed_form(self, seed):
        state = random_tachyon(np.random.default_rng(seed))
        V = infinite_velocity_frame(state)
        assert state.w @ V == pytest.approx(1.0, abs=1e-10)
        assert np.linalg.norm(V) < 1.0
        assert np.allclose(V, printed_infinite_frame(state.w, state.s), rtol=1e-8, atol=1e-10)

    def test_near_light_speed_stays_subluminal(self):
        for eps in (1e-1, 1e-3, 1e-6, 1e-9):
            V = infinite_velocity_frame(TachyonState(1.0, [1.0 + eps, 0, 0], X))
            assert np.linalg.norm(V) < 1.0


class TestWigner:
    def test_collinear_is_identity(self):
        assert np.allclose(wigner_rotation([0.5, 0, 0], [0.3, 0, 0]), np.eye(3), atol=1e-12)

    def test_orthogonal_case(self):
        R = wigner_rotation([0.5, 0, 0], [0, 0.5, 0])
        assert np.allclose(R.T @ R, np.eye(3), atol=1e-12)
        assert np.linalg.det(R) == pytest.approx(1.0)
        assert R[2] == pytest.approx([0, 0, 1])  # rotation about z
        # oracle: the full composed boost matrix leaves the time axis alone
        v, V = np.array([0.5, 0, 0]), np.array([0, 0.5, 0])
        M = lorentz(velocity_compose(v, V), 1.0) @ lorentz(V) @ lorentz(-v)
        assert M[0] == pytest.approx([1, 0, 0, 0], abs=1e-12)
        assert M[:, 0] == pytest.approx([1, 0, 0, 0], abs=1e-12)

    @given(seeds)
    def test_rotation_reproduces_spacelike_boost(self, seed):
        rng = np.random.default_rng(seed)
        v, V, s = random_subluminal(rng), random_subluminal(rng), random_unit(rng)
        R = wigner_rotation(v, V)
        assert np.allclose(R.T @ R, np.eye(3), atol=1e-10)
        boosted = boost_four_vector(four_vector("spacelike-s", SpacelikeState(v, s)), V)
        rebuilt = four_vector("spacelike-s", SpacelikeState(velocity_compose(v, V), R @ s))
        assert np.allclose(boosted.components, rebuilt.components, atol=1e-10)

    def test_s_transform_trivial_cases(self):
        state = TachyonState(1.0, [3.0, 0, 0], X)
        assert s_transform(state, np.zeros(3)) == pytest.approx(X)
        assert s_transform(state, [0.2, 0, 0]) == pytest.approx(X)


class TestEnergy:
    def test_eq11(self):
        E, p = energy_momentum(TachyonState(1.0, [2.0, 0, 0], X))
        assert E == pytest.approx(1 / math.sqrt(3))
        assert p == pytest.approx([2 / math.sqrt(3), 0, 0])

    def test_monotone_along_ray(self):
        speeds = np.geomspace(1.0001, 1e6, 50)
        E = [energy_momentum(TachyonState(1.0, [w, 0, 0], X))[0] for w in speeds]
        P = [np.linalg.norm(energy_momentum(TachyonState(1.0, [w, 0, 0], X))[1]) for w in speeds]
        assert np.all(np.diff(E) < 0) and np.all(np.diff(P) < 0)
        assert E[0] > 50 and P[-1] == pytest.approx(1.0, abs=1e-9)

    def test_units(self):
        E, p = energy_momentum(TachyonState(2.0, [6.0, 0, 0], X, c=3.0))
        assert E == pytest.approx(2.0 * 9.0 / math.sqrt(3))
        assert p[0] == pytest.approx(2.0 * 3.0 * 2.0 / math.sqrt(3))
