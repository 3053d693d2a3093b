"""Path phases, the symmetric probability-like invariant, and path amplitudes.

The invariant for n paths with phases phi_i is

    P(phi) = n**-A_exp * (sum_i exp(alpha phi_i)) * (sum_i exp(-alpha phi_i))

and with alpha = i, A_exp = 2 it equals |<B|A>|^2 where
<B|A> = (1/n) sum_i exp(i phi_i).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .fourmomentum import massive_vector
from .kinematics import SpacetimeEvent
from .units import NATURAL, UnitSystem


@dataclass(frozen=True, eq=False)
class PathSegment:
    start: SpacetimeEvent
    end: SpacetimeEvent
    energy: float
    momentum: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.momentum, dtype=float).reshape(3).copy()
        if not (math.isfinite(self.energy) and np.all(np.isfinite(p))):
            raise ValueError("segment energy and momentum must be finite")
        object.__setattr__(self, "energy", float(self.energy))
        object.__setattr__(self, "momentum", p)

    def action(self) -> float:
        """E dt - p.dr along the segment (no 1/hbar)."""
        dt = self.end.t - self.start.t
        p = self.momentum
        return self.energy * dt - (
            p[0] * (self.end.x - self.start.x) + p[1] * (self.end.y - self.start.y) + p[2] * (self.end.z - self.start.z)
        )

    def reversed(self) -> "PathSegment":
        return PathSegment(self.end, self.start, self.energy, self.momentum)


@dataclass(frozen=True)
class Path:
    segments: tuple[PathSegment, ...] = ()

    def __post_init__(self):
        segs = tuple(self.segments)
        for a, b in zip(segs, segs[1:]):
            if a.end != b.start:
                raise ValueError(f"segments do not chain: {a.end} != {b.start}")
        object.__setattr__(self, "segments", segs)

    @property
    def start(self) -> SpacetimeEvent | None:
        return self.segments[0].start if self.segments else None

    @property
    def end(self) -> SpacetimeEvent | None:
        return self.segments[-1].end if self.segments else None

    def reversed(self) -> "Path":
        return Path(tuple(seg.reversed() for seg in reversed(self.segments)))


@dataclass(frozen=True)
class PathEnsemble:
    source: SpacetimeEvent
    sink: SpacetimeEvent
    paths: tuple[Path, ...]

    def __post_init__(self):
        paths = tuple(self.paths)
        if not paths:
            raise ValueError("an ensemble needs at least one path")
        for k, path in enumerate(paths):
            start = path.start if path.segments else self.source
            end = path.end if path.segments else self.source
            if start != self.source or end != self.sink:
                raise ValueError(f"path {k} does not run from source to sink")
        object.__setattr__(self, "paths", paths)

    def reversed(self) -> "PathEnsemble":
        return PathEnsemble(self.sink, self.source, tuple(p.reversed() for p in self.paths))


@dataclass(frozen=True)
class InvariantParams:
    alpha: complex = 1j
    A_exp: float = 2.0


DEFAULT_PARAMS = InvariantParams()


def phase(path: Path, units: UnitSystem = NATURAL) -> float:
    """hbar^-1 * sum over segments of (E dt - p.dr)."""
    total = 0.0
    for seg in path.segments:
        total += seg.action()
    return total / units.hbar


def phasor(phi: float) -> complex:
    return cmath.exp(1j * phi)


def invariant_P(phases: Sequence[float], params: InvariantParams = DEFAULT_PARAMS) -> float:
    """Real value of the n-path invariant."""
    return invariant_P_complex(phases, params).real


def invariant_P_complex(phases: Sequence[float], params: InvariantParams = DEFAULT_PARAMS) -> complex:
    phi = np.asarray(phases, dtype=float)
    n = phi.size
    if n < 1:
        raise ValueError("need at least one phase")
    alpha = complex(params.alpha)
    forward = np.sum(np.exp(alpha * phi))
    backward = np.sum(np.exp(-alpha * phi))
    return complex(forward * backward) / n ** params.A_exp


def amplitude_from_phases(phases: Iterable[float]) -> complex:
    """(1/n) sum exp(i phi), accumulated in the given order."""
    total = 0j
    n = 0
    for phi in phases:
        total += phasor(phi)
        n += 1
    if n == 0:
        raise ValueError("need at least one phase")
    return total / n


def amplitude(ensemble: PathEnsemble, units: UnitSystem = NATURAL) -> complex:
    """<B|A> for the ensemble's paths."""
    return amplitude_from_phases(phase(p, units) for p in ensemble.paths)


@dataclass
class AxiomReport:
    """Largest residual seen for each axiom, with the inputs that produced it."""

    max_residual: dict[str, float] = field(default_factory=dict)
    witnesses: dict[str, dict] = field(default_factory=dict)

    def record(self, axiom: str, residual: float, witness: dict):
        if residual > self.max_residual.get(axiom, -1.0):
            self.max_residual[axiom] = residual
            self.witnesses[axiom] = witness

    def failures(self, tol: float) -> list[str]:
        return [name for name, r in self.max_residual.items() if not r < tol]


def relative_residual(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def check_axioms(
    params: InvariantParams = DEFAULT_PARAMS,
    n: int = 2,
    m: int = 2,
    trials: int = 100,
    rng: np.random.Generator | None = None,
    phase_range: float = math.pi,
) -> AxiomReport:
    """Randomized residuals of symmetry, inversion, composition and
    identical-phase normalization. Residuals are relative to max(1, |value|)."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be at least 1")
    rng = np.random.default_rng(0) if rng is None else rng
    report = AxiomReport()
    for _ in range(trials):
        phi = rng.uniform(-phase_range, phase_range, n)
        xi = rng.uniform(-phase_range, phase_range, m)
        base = invariant_P_complex(phi, params)

        perm = rng.permutation(n)
        report.record("symmetry", relative_residual(base, invariant_P_complex(phi[perm], params)), {"phi": phi.tolist(), "perm": perm.tolist()})
        report.record("inversion", relative_residual(base, invariant_P_complex(-phi, params)), {"phi": phi.tolist()})

        pair_sums = (phi[:, None] + xi[None, :]).ravel()
        lhs = base * invariant_P_complex(xi, params)
        report.record("composition", relative_residual(lhs, invariant_P_complex(pair_sums, params)), {"phi": phi.tolist(), "xi": xi.tolist()})

        same = np.full(n, phi[0])
        report.record(
            "normalization",
            relative_residual(invariant_P_complex(same, params), invariant_P_complex(phi[:1], params)),
            {"phi": float(phi[0]), "n": n},
        )
    return report


def frame_shift_check(phi1: float, phi2: float, delta: float, params: InvariantParams = DEFAULT_PARAMS) -> float:
    """Largest deviation of P(phi1, phi2) under a common shift and under a swap."""
    base = invariant_P_complex([phi1, phi2], params)
    shifted = invariant_P_complex([phi1 - delta, phi2 - delta], params)
    swapped = invariant_P_complex([phi2, phi1], params)
    return max(abs(base - shifted), abs(base - swapped))


def non_separability_residual(params: InvariantParams = DEFAULT_PARAMS) -> float:
    """Least-squares misfit of P(phi1, phi2) = f(phi1) + f(phi2) on phases {0, pi}.

    The three equations P(0,0), P(0,pi), P(pi,pi) in the two unknowns f(0),
    f(pi) are inconsistent for the two-path invariant, so the misfit is > 0.
    """
    rows = np.array([[2.0, 0.0], [1.0, 1.0], [0.0, 2.0]])
    rhs = np.array([invariant_P([a, b], params) for a, b in ((0.0, 0.0), (0.0, math.pi), (math.pi, math.pi))])
    solution, *_ = np.linalg.lstsq(rows, rhs, rcond=None)
    return float(np.linalg.norm(rows @ solution - rhs))


def two_arm_ensemble(
    arm1: float,
    arm2: float,
    duration: float,
    mass: float = 1.0,
    units: UnitSystem = NATURAL,
) -> PathEnsemble:
    """Particle leaves A = (0, 0), is reflected at x = +arm1 or x = -arm2 at
    t = duration/2, and is detected at B = (duration, 0).

    Each leg carries the free-particle (E, p) of its slope.
    """
    A = SpacetimeEvent(0.0, 0.0)
    B = SpacetimeEvent(duration, 0.0)
    half = duration / 2.0
    paths = []
    for turn in (SpacetimeEvent(half, arm1), SpacetimeEvent(half, -arm2)):
        legs = []
        for start, end in ((A, turn), (turn, B)):
            legs.append(free_segment(start, end, mass, units))
        paths.append(Path(tuple(legs)))
    return PathEnsemble(A, B, tuple(paths))


def free_segment(start: SpacetimeEvent, end: SpacetimeEvent, mass: float, units: UnitSystem = NATURAL) -> PathSegment:
    """Segment carrying mass * c * (timelike family vector of its velocity)."""
    dt = end.t - start.t
    v = (end.r - start.r) / dt
    A = massive_vector(v, units.c)
    return PathSegment(start, end, mass * units.c**2 * A.a0, mass * units.c * A.a)


def two_arm_phase_difference(arm1: float, arm2: float, duration: float, mass: float = 1.0, units: UnitSystem = NATURAL) -> float:
    """phi_1 - phi_2 from proper times: each path's phase is m c^2 tau / hbar."""
    c = units.c
    scale = mass * c * c * duration / units.hbar

    def proper(arm):
        beta = 2.0 * arm / (c * duration)
        return math.sqrt(1.0 - beta * beta)

    return scale * (proper(arm1) - proper(arm2))


def arm_for_phase_difference(dphi: float, duration: float, mass: float = 1.0, units: UnitSystem = NATURAL) -> float:
    """Arm length L such that arms (0, L) give phi_1 - phi_2 = dphi."""
    c = units.c
    scale = mass * c * c * duration / units.hbar
    g = 1.0 - dphi / scale
    if not 0.0 < g <= 1.0:
        raise ValueError(f"phase difference {dphi} unreachable for this mass and duration")
    return 0.5 * c * duration * math.sqrt(1.0 - g * g)


def interference_scan(
    geometry: Callable[[float], PathEnsemble],
    params: Iterable[float],
    units: UnitSystem = NATURAL,
) -> list[tuple[float, float]]:
    """(parameter, P) rows for ensembles generated from each parameter value."""
    rows = []
    for value in params:
        ensemble = geometry(value)
        phases = [phase(p, units) for p in ensemble.paths]
        rows.append((float(value), invariant_P(phases)))
    return rows


def fringe(dphi: float) -> float:
    """Closed-form two-path fringe (1 + cos dphi) / 2."""
    return 0.5 * (1.0 + math.cos(dphi))

