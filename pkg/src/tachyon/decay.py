"""Unique tachyon-emission decay and the P, T, C actions on processes.

A process is a flat list of legs, each a massive or tachyonic state tagged as
incoming or outgoing. Only conservation bookkeeping is modelled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np
from scipy.optimize import bisect

from .fourmomentum import MassiveState, TachyonState, energy_momentum, infinite_along
from .units import NATURAL, UnitSystem

Operation = Literal["P", "T", "C", "CPT"]


@dataclass(frozen=True)
class SymmetryRuleSet:
    """Sign picked up by the helicity parameter under T, P and C."""

    t_action: int
    p_action: int
    c_action: int = -1

    def __post_init__(self):
        if {self.t_action, self.p_action, self.c_action} - {1, -1}:
            raise ValueError("symmetry actions must be +1 or -1")

    @property
    def cpt(self) -> int:
        return self.t_action * self.p_action * self.c_action


# s behaves like helicity: T keeps it, P flips it
HELICITY_LIKE = SymmetryRuleSet(t_action=1, p_action=-1)
# the alternative assignment that keeps CPT but breaks T instead of P
ALTERNATIVE = SymmetryRuleSet(t_action=-1, p_action=1)


@dataclass(frozen=True)
class Leg:
    state: MassiveState | TachyonState
    outgoing: bool


Process = list[Leg]


@dataclass(frozen=True)
class UniqueDecay:
    v: float
    tachyon_momentum: float
    process: Process


def _decay_speed_residual(v: float, m: float, mu: float, c: float) -> float:
    return 2.0 * m * v / math.sqrt(1.0 - (v / c) ** 2) - mu * c


def solve_unique_decay(m: float, mu: float, units: UnitSystem = NATURAL, xtol: float | None = None) -> UniqueDecay:
    """Speed of a particle of mass ``m`` that reverses its velocity while
    emitting an infinitely fast tachyon of mass parameter ``mu``.

    Energy conservation allows only v -> -v; momentum balance then reads
    2 m v gamma(v) = mu c. The tachyon carries zero energy and momentum mu c
    along the initial velocity.
    """
    if not (m > 0 and mu > 0):
        raise ValueError("m and mu must be positive")
    c = units.c
    xtol = np.finfo(float).tiny * c if xtol is None else xtol
    # residual is -mu c at 0 and diverges as v -> c, so (0, c) always brackets
    upper = math.nextafter(c, 0.0)
    v = bisect(_decay_speed_residual, 0.0, upper, args=(m, mu, c), xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=2000)
    x = np.array([1.0, 0.0, 0.0])
    process = [
        Leg(MassiveState(m, v * x, c), outgoing=False),
        Leg(MassiveState(m, -v * x, c), outgoing=True),
        Leg(TachyonState(mu, infinite_along(x), x, c=c), outgoing=True),
    ]
    return UniqueDecay(v, mu * c, process)


def unique_decay_speed_closed_form(m: float, mu: float, units: UnitSystem = NATURAL) -> float:
    return mu * units.c / math.sqrt(4 * m * m + mu * mu)


def conservation_residual(process: Sequence[Leg]) -> np.ndarray:
    """(dE, dp) = incoming minus outgoing totals."""
    total = np.zeros(4)
    for leg in process:
        E, p = energy_momentum(leg.state)
        sign = -1.0 if leg.outgoing else 1.0
        total += sign * np.concatenate([[E], p])
    return total


def _reflect(state, velocity_sign: float, helicity_action: int):
    """Apply ``v -> velocity_sign * v`` and make the helicity pick up ``helicity_action``."""
    if isinstance(state, MassiveState):
        return MassiveState(state.m, velocity_sign * state.v, state.c)
    # sgn(s'.w') = helicity_action * sgn(s.w) with w' = velocity_sign * w
    s_new = helicity_action * velocity_sign * state.s
    return state.replace(w=velocity_sign * state.w, s=s_new)


def apply_discrete_symmetry(process: Sequence[Leg], op: Operation, rules: SymmetryRuleSet = HELICITY_LIKE) -> Process:
    """Image of a process under P, T, C or their product CPT.

    P reverses spatial vectors, T reverses velocities and swaps incoming with
    outgoing legs, C reverses s. The helicity parameter of every tachyon picks
    up the sign given by ``rules``.
    """
    if op == "CPT":
        out = list(process)
        for step in ("T", "P", "C"):
            out = apply_discrete_symmetry(out, step, rules)
        return out
    if op == "P":
        return [Leg(_reflect(leg.state, -1.0, rules.p_action), leg.outgoing) for leg in process]
    if op == "T":
        return [Leg(_reflect(leg.state, -1.0, rules.t_action), not leg.outgoing) for leg in process]
    if op == "C":
        return [Leg(_reflect(leg.state, 1.0, rules.c_action), leg.outgoing) for leg in process]
    raise ValueError(f"unknown operation {op!r}")
