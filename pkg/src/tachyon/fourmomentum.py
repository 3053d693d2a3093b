"""Covariant four-vector families, their parameter transformation laws, and
tachyon energy-momentum.

Four-vectors are stored dimensionless, ``(A0, A)`` with ``A0`` playing the
role of ``c t``. Physical four-momenta are ``m c`` or ``mu c`` times the
family vector, i.e. ``E = m c^2 A0`` and ``p = m c A``.

A tachyon may carry an infinite velocity, written as a vector with ``inf``
entries (e.g. ``[inf, 0, 0]``); its direction must then coincide with ``+-s``,
which is what the parameter constraint reduces to in that limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from .errors import ConstraintViolation, RegimeError, UndefinedHelicity
from .units import default_tolerance

Family = Literal["timelike-massive", "spacelike-s", "tachyon", "tachyon-dual"]
FAMILIES: tuple[Family, ...] = ("timelike-massive", "spacelike-s", "tachyon", "tachyon-dual")


def _vec(v) -> np.ndarray:
    out = np.asarray(v, dtype=float).reshape(3)
    return out.copy()


def _is_infinite(v: np.ndarray) -> bool:
    return bool(np.any(np.isinf(v)))


def _direction(v: np.ndarray) -> np.ndarray:
    """Unit vector of ``v``; for infinite vectors the sign pattern of the inf entries."""
    if _is_infinite(v):
        v = np.where(np.isinf(v), np.sign(v), 0.0)
    return v / np.linalg.norm(v)


def _infinite_sign(w: np.ndarray, s: np.ndarray) -> float:
    """+-1 such that an infinite ``w`` points along +-s; raises if it cannot."""
    pattern = np.where(np.isinf(w), np.sign(w), 0.0)
    finite_rest = np.where(np.isinf(w), 0.0, w)
    k = 1.0 if float(pattern @ s) > 0 else -1.0
    if np.any(finite_rest != 0) or np.any(pattern != k * np.sign(s)):
        raise ConstraintViolation("an infinitely fast tachyon must move along +-s")
    return k


def infinite_along(direction: np.ndarray) -> np.ndarray:
    """Velocity vector of infinite magnitude along ``direction``."""
    return np.where(direction > 0, np.inf, np.where(direction < 0, -np.inf, 0.0))


@dataclass(frozen=True)
class InfiniteVelocity:
    """Outcome of a velocity transformation whose result has infinite magnitude."""

    direction: np.ndarray


@dataclass(frozen=True, eq=False)
class MassiveState:
    m: float
    v: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "v", _vec(self.v))
        if not np.all(np.isfinite(self.v)) or not np.linalg.norm(self.v) < self.c:
            raise RegimeError(f"massive state needs |v| < c, got |v| = {np.linalg.norm(self.v)}")


@dataclass(frozen=True, eq=False)
class SpacelikeState:
    """Parameters (v, s) of the outside-cone subluminal family."""

    v: np.ndarray
    s: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "v", _vec(self.v))
        object.__setattr__(self, "s", _vec(self.s))
        if not np.linalg.norm(self.v) < self.c:
            raise RegimeError("spacelike family needs |v| < c")
        if abs(np.linalg.norm(self.s) - 1.0) > 1e3 * default_tolerance():
            raise ValueError(f"s must be a unit vector, |s| = {np.linalg.norm(self.s)}")


@dataclass(frozen=True, eq=False)
class TachyonState:
    """Tachyon with mass parameter ``mu``, velocity ``w`` and direction ``s``.

    ``pseudo`` records whether ``s`` is taken as a pseudo-vector. Both choices
    are consistent with the transformation law; how s behaves under P and T
    is fixed by the :class:`~tachyon.decay.SymmetryRuleSet` in use.
    """

    mu: float
    w: np.ndarray
    s: np.ndarray
    pseudo: bool = False
    c: float = 1.0
    tol: float = field(default_factory=default_tolerance, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "w", _vec(self.w))
        object.__setattr__(self, "s", _vec(self.s))
        if abs(np.linalg.norm(self.s) - 1.0) > 1e3 * self.tol:
            raise ValueError(f"s must be a unit vector, |s| = {np.linalg.norm(self.s)}")
        if np.any(np.isnan(self.w)):
            raise ValueError("w contains NaN")
        c = self.c
        if self.infinite:
            _infinite_sign(self.w, self.s)
            return
        w2 = float(self.w @ self.w)
        if not w2 > c * c:
            raise RegimeError(f"tachyon needs |w| > c, got |w| = {math.sqrt(w2)}")
        sw = float(self.s @ self.w)
        # (s.w)^2 - (w^2 - c^2) = c^2 - |w_perp|^2, evaluated without cancellation
        w_perp = self.w - sw * self.s
        if not c * c - float(w_perp @ w_perp) > self.tol * c * c:
            raise ConstraintViolation(f"w^2 - c^2 < (s.w)^2 violated: w^2 - c^2 = {w2 - c * c}, (s.w)^2 = {sw * sw}")

    @property
    def infinite(self) -> bool:
        return _is_infinite(self.w)

    @property
    def direction(self) -> np.ndarray:
        if self.infinite:
            return _infinite_sign(self.w, self.s) * self.s
        return _direction(self.w)

    @property
    def helicity(self) -> int:
        """sgn(s.w)."""
        sw = self.s @ self.direction
        return 1 if sw > 0 else -1

    def replace(self, **changes) -> "TachyonState":
        fields = dict(mu=self.mu, w=self.w, s=self.s, pseudo=self.pseudo, c=self.c, tol=self.tol)
        fields.update(changes)
        return TachyonState(**fields)


@dataclass(frozen=True, eq=False)
class CovariantFourVector:
    a0: float
    a: np.ndarray
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "a", _vec(self.a))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not (math.isfinite(self.a0) and np.all(np.isfinite(self.a))):
            raise ValueError("four-vector components must be finite")

    @property
    def components(self) -> np.ndarray:
        return np.concatenate([[self.a0], self.a])

    def norm(self) -> float:
        """Minkowski square (A0)^2 - A.A."""
        return self.a0**2 - float(self.a @ self.a)


def lorentz(V, c: float = 1.0) -> np.ndarray:
    """4x4 matrix of the four-vector transformation to a frame moving with V."""
    V = _vec(V)
    b = V / c
    b2 = float(b @ b)
    if not b2 < 1:
        raise RegimeError(f"frame velocity must satisfy |V| < c, got |V|/c = {math.sqrt(b2)}")
    L = np.eye(4)
    if b2 == 0:
        return L
    gamma = 1.0 / math.sqrt(1.0 - b2)
    L[0, 0] = gamma
    L[0, 1:] = -gamma * b
    L[1:, 0] = -gamma * b
    L[1:, 1:] += (gamma - 1.0) * np.outer(b, b) / b2
    return L


def velocity_compose(v, V, c: float = 1.0, tol: float | None = None) -> Union[np.ndarray, InfiniteVelocity]:
    """Velocity ``v`` as seen from a frame moving with subluminal ``V``.

    ``v`` may be superluminal, or infinite (an :class:`InfiniteVelocity` or a
    vector with ``inf`` entries). When ``1 - v.V/c^2`` vanishes the
    result is an :class:`InfiniteVelocity` rather than an error.
    """
    tol = default_tolerance() if tol is None else tol
    V = _vec(V)
    V2 = float(V @ V)
    if not V2 < c * c:
        raise RegimeError("frame velocity must satisfy |V| < c")
    root = math.sqrt(1.0 - V2 / (c * c))
    if isinstance(v, InfiniteVelocity) or _is_infinite(_vec(v)):
        # limit |v| -> inf along n: numerator and denominator both scale with |v|
        n = v.direction if isinstance(v, InfiniteVelocity) else _direction(_vec(v))
        den = -float(n @ V) / (c * c)
        par = (n @ V) / V2 * V if V2 > 0 else np.zeros(3)
        num = root * (n - par) + par
        if abs(den) <= tol / c:
            return InfiniteVelocity(_direction(num))
        return num / den
    v = _vec(v)
    if V2 == 0:
        return v
    par = (v @ V) / V2 * V
    num = root * (v - par) - V + par
    den = 1.0 - float(v @ V) / (c * c)
    if abs(den) <= tol:
        return InfiniteVelocity(_direction(num))
    return num / den


def massive_vector(v, c: float = 1.0) -> CovariantFourVector:
    v = _vec(v)
    beta2 = float(v @ v) / (c * c)
    if not beta2 < 1:
        raise RegimeError("massive family needs |v| < c")
    gamma = 1.0 / math.sqrt(1.0 - beta2)
    return CovariantFourVector(gamma, gamma * v / c, "timelike-massive")


def spacelike_vector(v, s, c: float = 1.0) -> CovariantFourVector:
    v, s = _vec(v), _vec(s)
    v2 = float(v @ v)
    if not v2 < c * c:
        raise RegimeError("spacelike family needs |v| < c")
    gamma = 1.0 / math.sqrt(1.0 - v2 / (c * c))
    sv = float(s @ v)
    a = s + (gamma - 1.0) * sv / v2 * v if v2 > 0 else s
    return CovariantFourVector(gamma * sv / c, a, "spacelike-s")


def tachyon_vector(w, s=None, c: float = 1.0) -> CovariantFourVector:
    state = w if isinstance(w, TachyonState) else TachyonState(1.0, w, s, c=c)
    c = state.c
    sign = state.helicity
    if state.infinite:
        return CovariantFourVector(0.0, sign * state.direction, "tachyon")
    root = math.sqrt(float(state.w @ state.w) / (c * c) - 1.0)
    return CovariantFourVector(sign / root, sign * state.w / c / root, "tachyon")


def tachyon_dual_vector(w, s=None, c: float = 1.0) -> CovariantFourVector:
    state = w if isinstance(w, TachyonState) else TachyonState(1.0, w, s, c=c)
    c = state.c
    if state.infinite:
        return CovariantFourVector(1.0, np.zeros(3), "tachyon-dual")
    # the printed expression, rearranged so no two large terms are subtracted
    w, s = state.w, state.s
    beta2 = float(w @ w) / (c * c)
    root = math.sqrt(beta2 - 1.0)
    a = abs(float(s @ w)) / c
    w_perp = w - float(s @ w) * s
    b2 = float(w_perp @ w_perp) / (c * c)
    a0 = (beta2 * b2 + a * a) * (a + root) / ((beta2 + a * root) * root * (1.0 - b2))
    vec = w_perp * (a + root) / (c * root * (1.0 - b2)) + state.helicity * s / root
    return CovariantFourVector(a0, vec, "tachyon-dual")


def four_vector(family: Family, state) -> CovariantFourVector:
    """Dimensionless four-vector of ``family`` built from ``state``."""
    if family == "timelike-massive":
        if not isinstance(state, MassiveState):
            raise TypeError("timelike-massive family takes a MassiveState")
        return massive_vector(state.v, state.c)
    if family == "spacelike-s":
        if not isinstance(state, SpacelikeState):
            raise TypeError("spacelike-s family takes a SpacelikeState")
        return spacelike_vector(state.v, state.s, state.c)
    if family == "tachyon":
        return tachyon_vector(state)
    if family == "tachyon-dual":
        return tachyon_dual_vector(state)
    raise ValueError(f"unknown family {family!r}")


def boost_four_vector(A: CovariantFourVector, V, c: float = 1.0) -> CovariantFourVector:
    out = lorentz(V, c) @ A.components
    return CovariantFourVector(out[0], out[1:], A.family)


def helicity_transform(state: TachyonState, V, tol: float | None = None) -> int:
    """sgn(s'.w') after moving to a frame with velocity V.

    Flips exactly when w.V > c^2: the tachyon is then seen as an anti-tachyon.
    """
    tol = state.tol if tol is None else tol
    V = _vec(V)
    c2 = state.c**2
    if state.infinite:
        nV = float(state.direction @ V)
        if nV == 0:
            return state.helicity
        return -state.helicity if nV > 0 else state.helicity
    d = c2 - float(state.w @ V)
    if abs(d) <= tol * c2:
        raise UndefinedHelicity("w.V = c^2: the tachyon is infinitely fast in this frame")
    return state.helicity if d > 0 else -state.helicity


def infinite_velocity_frame(state: TachyonState) -> np.ndarray:
    """Subluminal frame velocity in which the tachyon moves infinitely fast.

    Equal to c^2 (w - sgn(s.w) sqrt(w^2-c^2) s) / (w^2 - |s.w| sqrt(w^2-c^2)),
    evaluated through the half-velocity u = V / (1 + sqrt(1 - V^2/c^2)) to
    avoid cancellation when s is nearly parallel to w.
    """
    c = state.c
    if state.infinite:
        return np.zeros(3)
    w, s = state.w, state.s
    sw = float(s @ w)
    w_perp = w - sw * s
    root = math.sqrt(float(w @ w) - c * c)
    # |s.w| - root, rationalised
    gap = (c * c - float(w_perp @ w_perp)) / (abs(sw) + root)
    u = w_perp + state.helicity * gap * s
    return 2.0 * u / (1.0 + float(u @ u) / (c * c))


def wigner_rotation(v, V, c: float = 1.0) -> np.ndarray:
    """Rotation equal to the boost chain L(Gamma(V) v) L(V) L(-v)."""
    v, V = _vec(v), _vec(V)
    v_new = velocity_compose(v, V, c)
    M = lorentz(v_new, c) @ lorentz(V, c) @ lorentz(-v, c)
    return M[1:, 1:]


def s_transform(state: TachyonState, V) -> np.ndarray:
    """Direction parameter s' of a tachyon seen from a frame moving with V."""
    R = wigner_rotation(infinite_velocity_frame(state), V, state.c)
    s = R @ state.s
    return s / np.linalg.norm(s)


def transform_state(state, V):
    """Parameters of ``state`` in a frame moving with V (same family)."""
    V = _vec(V)
    if isinstance(state, MassiveState):
        return MassiveState(state.m, velocity_compose(state.v, V, state.c), state.c)
    if isinstance(state, SpacelikeState):
        v_new = velocity_compose(state.v, V, state.c)
        return SpacelikeState(v_new, wigner_rotation(state.v, V, state.c) @ state.s, state.c)
    if isinstance(state, TachyonState):
        w_in = InfiniteVelocity(state.direction) if state.infinite else state.w
        w_new = velocity_compose(w_in, V, state.c, state.tol)
        s_new = s_transform(state, V)
        if isinstance(w_new, InfiniteVelocity):
            # an infinitely fast tachyon moves along +-s'
            sign = 1.0 if float(w_new.direction @ s_new) >= 0 else -1.0
            w_new = infinite_along(sign * s_new)
        return state.replace(w=w_new, s=s_new)
    raise TypeError(f"cannot transform {type(state).__name__}")


def energy_momentum(state) -> tuple[float, np.ndarray]:
    """Physical (E, p) of a massive particle or a tachyon."""
    if isinstance(state, MassiveState):
        A = massive_vector(state.v, state.c)
        return state.m * state.c**2 * A.a0, state.m * state.c * A.a
    if isinstance(state, TachyonState):
        A = tachyon_vector(state)
        return state.mu * state.c**2 * A.a0, state.mu * state.c * A.a
    raise TypeError(f"no energy-momentum for {type(state).__name__}")
