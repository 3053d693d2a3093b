"""Coordinate transformations between inertial frames for any metric constant K.

K = 0 gives Galilean boosts, K = 1/c^2 Lorentz boosts, and K < 0 a rotation in
the (x, t) plane. For K > 0 and K W^2 > 1 the frame is superluminal; its
coordinates are one spatial ``chi`` and three temporal ``tau`` components.

Sign conventions
----------------
The overall sign of a superluminal boost is a convention. ``"minus"`` (the
default) is the one for which the W -> infinity limit reduces to
``chi = c t, c tau = r``; ``"plus"`` flips both ``chi`` and ``tau_x``.

Under the ``"minus"`` convention the infinite-velocity map is the identity on
the component tuple ``(c t, x, y, z) -> (chi, c tau_x, c tau_y, c tau_z)``.
Reading a superluminal result back as an event with :func:`as_event` and
applying :func:`infinite_boost` again therefore returns the original
coordinates with every sign positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence, Union

import numpy as np

from .errors import RegimeError, SingularVelocityError
from .units import NATURAL, UnitSystem, default_tolerance

SignChoice = Literal["plus", "minus"]
Regime = Literal["subluminal", "superluminal", "infinite"]
Velocity = Union[float, Sequence[float], np.ndarray]


def sign_value(sign_choice: SignChoice) -> float:
    if sign_choice == "minus":
        return -1.0
    if sign_choice == "plus":
        return 1.0
    raise ValueError(f"sign_choice must be 'plus' or 'minus', got {sign_choice!r}")


@dataclass(frozen=True)
class SpacetimeEvent:
    t: float
    x: float
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"event coordinate {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    @property
    def r(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @classmethod
    def from_tr(cls, t: float, r: Sequence[float]) -> "SpacetimeEvent":
        return cls(t, r[0], r[1], r[2])


@dataclass(frozen=True)
class SuperluminalCoords:
    """Coordinates in a superluminal frame: one spatial, three temporal."""

    chi: float
    tau: tuple[float, float, float]

    def __post_init__(self):
        tau = tuple(float(v) for v in self.tau)
        if len(tau) != 3:
            raise ValueError("tau must have three components")
        if not all(math.isfinite(v) for v in (self.chi, *tau)):
            raise ValueError("superluminal coordinates must be finite")
        object.__setattr__(self, "chi", float(self.chi))
        object.__setattr__(self, "tau", tau)


@dataclass(frozen=True)
class GeneralBoost:
    """Frame transformation with metric constant ``K`` and relative velocity ``V``.

    ``V`` is a signed scalar for motion along x, or a 3-vector. For the
    ``"infinite"`` regime ``V`` is ignored.
    """

    K: float
    V: Velocity
    regime: Regime = "subluminal"
    sign_choice: SignChoice = "minus"
    transverse_sign_y: int = 1
    transverse_sign_z: int = 1

    def __post_init__(self):
        if self.regime not in ("subluminal", "superluminal", "infinite"):
            raise ValueError(f"unknown regime {self.regime!r}")
        sign_value(self.sign_choice)
        if self.transverse_sign_y not in (1, -1) or self.transverse_sign_z not in (1, -1):
            raise ValueError("transverse signs must be +1 or -1")
        if self.regime == "infinite":
            if not self.K > 0:
                raise RegimeError("an infinite-velocity frame needs K > 0")
            return
        kv2 = self.K * self.speed**2
        if self.regime == "subluminal" and not kv2 < 1:
            raise RegimeError(f"subluminal boost requires K V^2 < 1, got {kv2}")
        if self.regime == "superluminal" and not (self.K > 0 and kv2 > 1):
            raise RegimeError(f"superluminal boost requires K > 0 and K W^2 > 1, got K={self.K}, K W^2={kv2}")

    @property
    def collinear(self) -> bool:
        return np.ndim(self.V) == 0

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(np.atleast_1d(np.asarray(self.V, dtype=float))))

    @classmethod
    def for_velocity(cls, V: Velocity, units: UnitSystem = NATURAL, **kwargs) -> "GeneralBoost":
        """Lorentzian boost (K = 1/c^2) whose regime follows from |V|."""
        K = kwargs.pop("K", units.K)
        speed = float(np.linalg.norm(np.atleast_1d(np.asarray(V, dtype=float))))
        if math.isinf(speed):
            regime = "infinite"
        elif K * speed**2 > 1:
            regime = "superluminal"
        else:
            regime = "subluminal"
        return cls(K=K, V=V, regime=regime, **kwargs)


def coefficient_A(K: float, V: float, sign_choice: SignChoice = "minus", tol: float | None = None) -> float:
    """Coefficient A(V) multiplying ``x - V t``.

    Subluminal: 1/sqrt(1 - K V^2). Superluminal: +-(V/|V|)/sqrt(K V^2 - 1),
    sign fixed by ``sign_choice``.
    """
    tol = default_tolerance() if tol is None else tol
    kv2 = K * V * V
    if abs(1.0 - kv2) <= tol:
        raise SingularVelocityError(f"K V^2 = {kv2} is a light-speed frame")
    if kv2 < 1:
        return 1.0 / math.sqrt(1.0 - kv2)
    return sign_value(sign_choice) * math.copysign(1.0, V) / math.sqrt(kv2 - 1.0)


def metric_constant(A, V: float) -> float:
    """Recover K = (A(V)A(-V) - 1) / (V^2 A(V)A(-V)) from a coefficient function."""
    prod = A(V) * A(-V)
    return (prod - 1.0) / (V * V * prod)


def compose_velocities(V1: float, V2: float, K: float) -> float:
    """Velocity of a single boost equivalent to boosting by V1 then V2 (collinear)."""
    return (V1 + V2) / (1.0 + K * V1 * V2)


def boost_matrix(V: Velocity, K: float) -> np.ndarray:
    """4x4 matrix acting on (t, x, y, z) for a subluminal boost with velocity V."""
    v = np.zeros(3)
    v[:] = [V, 0.0, 0.0] if np.ndim(V) == 0 else np.asarray(V, dtype=float)
    v2 = float(v @ v)
    kv2 = K * v2
    if kv2 >= 1:
        raise SingularVelocityError(f"K V^2 = {kv2} is not subluminal")
    gamma = 1.0 / math.sqrt(1.0 - kv2)
    L = np.eye(4)
    L[0, 0] = gamma
    L[0, 1:] = -gamma * K * v
    L[1:, 0] = -gamma * v
    if v2 > 0:
        L[1:, 1:] += (gamma - 1.0) * np.outer(v, v) / v2
    return L


def boost_subluminal(e: SpacetimeEvent, b: GeneralBoost, tol: float | None = None) -> SpacetimeEvent:
    """x' = A(V)(x - V t), t' = A(V)(t - K V x); transverse coordinates unchanged."""
    if b.regime != "subluminal":
        raise RegimeError(f"boost_subluminal needs a subluminal boost, got {b.regime}")
    if b.collinear:
        A = coefficient_A(b.K, float(b.V), tol=tol)
        V = float(b.V)
        return SpacetimeEvent(A * (e.t - b.K * V * e.x), A * (e.x - V * e.t), e.y, e.z)
    tol = default_tolerance() if tol is None else tol
    if abs(1.0 - b.K * b.speed**2) <= tol:
        raise SingularVelocityError("K V^2 = 1 is a light-speed frame")
    out = boost_matrix(b.V, b.K) @ np.array([e.t, e.x, e.y, e.z])
    return SpacetimeEvent(*out)


def boost_superluminal(e: SpacetimeEvent, b: GeneralBoost, tol: float | None = None) -> SuperluminalCoords:
    """Coordinates of ``e`` seen from a frame moving with |W| > c."""
    if b.regime == "infinite":
        return infinite_boost(e, UnitSystem(c=1.0 / math.sqrt(b.K)), b.sign_choice)
    if b.regime != "superluminal":
        raise RegimeError(f"boost_superluminal needs a superluminal boost, got {b.regime}")
    root_k = math.sqrt(b.K)
    if b.collinear:
        W = float(b.V)
        A = coefficient_A(b.K, W, b.sign_choice, tol=tol)
        return SuperluminalCoords(
            A * (e.x - W * e.t),
            (A * (e.t - b.K * W * e.x), b.transverse_sign_y * root_k * e.y, b.transverse_sign_z * root_k * e.z),
        )
    # W-frame = infinite-velocity map after a subluminal boost with c^2 W / |W|^2
    W = np.asarray(b.V, dtype=float)
    sigma = sign_value(b.sign_choice)
    tpp, *rpp = boost_matrix(W / (b.K * float(W @ W)), b.K) @ np.array([e.t, e.x, e.y, e.z])
    rpp = np.array(rpp)
    n = W / np.linalg.norm(W)
    r_par = (rpp @ n) * n
    r_perp = rpp - r_par
    if W[1] == 0.0 and W[2] == 0.0:
        r_perp = r_perp * np.array([1.0, b.transverse_sign_y, b.transverse_sign_z])
    elif b.transverse_sign_y == b.transverse_sign_z:
        r_perp = b.transverse_sign_y * r_perp
    else:
        raise ValueError("unequal transverse signs are only defined for W along the x axis")
    c = 1.0 / root_k
    tau = (-sigma * r_par + r_perp) / c
    return SuperluminalCoords(-sigma * c * tpp, tuple(tau))


def superluminal_matrix(
    W: float,
    units: UnitSystem = NATURAL,
    sign_choice: SignChoice = "minus",
    transverse_sign_y: int = 1,
    transverse_sign_z: int = 1,
) -> np.ndarray:
    """Matrix mapping (c t, x, y, z) to (chi, c tau_x, c tau_y, c tau_z) for W along x."""
    c = units.c
    beta = W / c
    if not abs(beta) > 1:
        raise RegimeError(f"|W| = {abs(W)} is not superluminal")
    a = sign_value(sign_choice) * math.copysign(1.0, W) / math.sqrt(beta * beta - 1.0)
    M = np.zeros((4, 4))
    M[0, 0], M[0, 1] = -a * beta, a
    M[1, 0], M[1, 1] = a, -a * beta
    M[2, 2] = transverse_sign_y
    M[3, 3] = transverse_sign_z
    return M


def infinite_boost(e: SpacetimeEvent, units: UnitSystem = NATURAL, sign_choice: SignChoice = "minus") -> SuperluminalCoords:
    """Frame moving with infinite velocity along x: chi = c t, c tau = r."""
    c = units.c
    flip = -sign_value(sign_choice)
    return SuperluminalCoords(flip * c * e.t, (flip * e.x / c, e.y / c, e.z / c))


def as_event(coords: SuperluminalCoords, units: UnitSystem = NATURAL) -> SpacetimeEvent:
    """Read (chi, c tau) as an event (c t, r) component by component."""
    c = units.c
    return SpacetimeEvent(coords.chi / c, *(c * tau for tau in coords.tau))


def infinite_boost_inverse(coords: SuperluminalCoords, units: UnitSystem = NATURAL, sign_choice: SignChoice = "minus") -> SpacetimeEvent:
    c = units.c
    flip = -sign_value(sign_choice)
    tx, ty, tz = coords.tau
    return SpacetimeEvent(flip * coords.chi / c, flip * c * tx, c * ty, c * tz)


def interval(a: SpacetimeEvent, b: SpacetimeEvent, units: UnitSystem = NATURAL) -> float:
    """c^2 dt^2 - dr^2."""
    dr = b.r - a.r
    return units.c**2 * (b.t - a.t) ** 2 - float(dr @ dr)


def interval_superluminal(a: SuperluminalCoords, b: SuperluminalCoords, units: UnitSystem = NATURAL) -> float:
    """dchi^2 - c^2 dtau^2, the interval as defined in a superluminal frame."""
    dtau = np.subtract(b.tau, a.tau)
    return (b.chi - a.chi) ** 2 - units.c**2 * float(dtau @ dtau)


def quadratic_form(a: SpacetimeEvent, b: SpacetimeEvent, K: float) -> float:
    """dt^2 - K dr^2, preserved by subluminal boosts for any K."""
    dr = b.r - a.r
    return (b.t - a.t) ** 2 - K * float(dr @ dr)


def _superluminal_root(w: float, units: UnitSystem) -> float:
    beta2 = (w / units.c) ** 2
    if not beta2 > 1:
        raise RegimeError(f"|w| = {abs(w)} is not superluminal (c = {units.c})")
    return math.sqrt(beta2 - 1.0)


def superluminal_length(
    delta_chi: float, w: float, units: UnitSystem = NATURAL, sign_choice: SignChoice = "minus"
) -> float:
    """Length in the stationary frame of an object of rest length ``delta_chi``
    moving with superluminal velocity ``w`` along x."""
    return sign_value(sign_choice) * math.copysign(1.0, w) * delta_chi * _superluminal_root(w, units)


def superluminal_time_flow(
    delta_tau_x: float, w: float, units: UnitSystem = NATURAL, sign_choice: SignChoice = "minus"
) -> float:
    """Stationary-frame duration of a proper interval ``delta_tau_x`` of a
    superluminal clock. The clock's transverse times do not advance."""
    return -sign_value(sign_choice) * math.copysign(1.0, w) * delta_tau_x / _superluminal_root(w, units)
