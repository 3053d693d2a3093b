"""Sum over monotone-in-time paths on a (1+1)D lattice.

Node (i, j) sits at t = t0 + i dt, x = x0 + j dx. Every step advances one
time row and moves ``move`` columns, ``move`` taken from ``moves``. A step
carries the free-particle energy-momentum of its slope for the lattice mass,
so the fringe pattern depends on that assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .amplitudes import Path, PathSegment, amplitude_from_phases, free_segment, phasor
from .errors import EnumerationCapError
from .kinematics import SpacetimeEvent
from .units import NATURAL, UnitSystem

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Lattice:
    steps: int
    shift: int
    dt: float = 1.0
    dx: float = 0.5
    mass: float = 1.0
    t0: float = 0.0
    x0: float = 0.0
    moves: tuple[int, ...] = (-1, 0, 1)

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("steps must be non-negative")
        if not self.moves or len(set(self.moves)) != len(self.moves):
            raise ValueError("moves must be a non-empty set of column offsets")
        if not (self.dt > 0 and self.dx > 0):
            raise ValueError("dt and dx must be positive")
        object.__setattr__(self, "moves", tuple(sorted(self.moves)))

    def node(self, i: int, j: int) -> SpacetimeEvent:
        return SpacetimeEvent(self.t0 + i * self.dt, self.x0 + j * self.dx)

    @property
    def source(self) -> SpacetimeEvent:
        return self.node(0, 0)

    @property
    def sink(self) -> SpacetimeEvent:
        return self.node(self.steps, self.shift)


@lru_cache(maxsize=None)
def _ways(moves: tuple[int, ...], remaining: int, displacement: int) -> int:
    if remaining == 0:
        return 1 if displacement == 0 else 0
    return sum(_ways(moves, remaining - 1, displacement - mv) for mv in moves)


def count_paths(lattice: Lattice) -> int:
    return _ways(lattice.moves, lattice.steps, lattice.shift)


def iter_move_sequences(lattice: Lattice) -> Iterator[tuple[int, ...]]:
    """Move sequences reaching the sink, in lexicographic order of moves."""
    moves = lattice.moves
    prefix: list[int] = []

    def walk(i: int, j: int):
        remaining = lattice.steps - i
        if remaining == 0:
            yield tuple(prefix)
            return
        for mv in moves:
            if _ways(moves, remaining - 1, lattice.shift - j - mv):
                prefix.append(mv)
                yield from walk(i + 1, j + mv)
                prefix.pop()

    if count_paths(lattice):
        yield from walk(0, 0)


def lattice_segment(lattice: Lattice, i: int, j: int, move: int, units: UnitSystem = NATURAL) -> PathSegment:
    return free_segment(lattice.node(i, j), lattice.node(i + 1, j + move), lattice.mass, units)


def build_path(lattice: Lattice, move_sequence, units: UnitSystem = NATURAL) -> Path:
    segments = []
    j = 0
    for i, mv in enumerate(move_sequence):
        segments.append(lattice_segment(lattice, i, j, mv, units))
        j += mv
    return Path(tuple(segments))


def lattice_path_sum(
    lattice: Lattice,
    units: UnitSystem = NATURAL,
    cap: int = DEFAULT_CAP,
    method: str = "enumerate",
) -> complex:
    """<B|A> summed over every lattice path from source to sink.

    ``"enumerate"`` visits each path in lexicographic move order and gives
    bit-for-bit the same result as building every :class:`Path` and summing
    its phasor in that order. ``"transfer"`` propagates amplitudes row by row
    without enumeration; it agrees to rounding and is not subject to ``cap``.
    """
    n = count_paths(lattice)
    if n == 0:
        raise ValueError("sink is not reachable from the source with the given moves")
    if method == "transfer":
        return _transfer_sum(lattice, units) / n
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if n > cap:
        raise EnumerationCapError(n, cap)

    actions: dict[tuple[int, int, int], float] = {}

    def action(i, j, mv):
        key = (i, j, mv)
        if key not in actions:
            actions[key] = lattice_segment(lattice, i, j, mv, units).action()
        return actions[key]

    def phases():
        for seq in iter_move_sequences(lattice):
            total = 0.0
            j = 0
            for i, mv in enumerate(seq):
                total += action(i, j, mv)
                j += mv
            yield total / units.hbar

    return amplitude_from_phases(phases())


def _transfer_sum(lattice: Lattice, units: UnitSystem) -> complex:
    row = {0: 1 + 0j}
    for i in range(lattice.steps):
        remaining = lattice.steps - i - 1
        nxt: dict[int, complex] = {}
        for j, amp in row.items():
            for mv in lattice.moves:
                k = j + mv
                if not _ways(lattice.moves, remaining, lattice.shift - k):
                    continue
                step = phasor(lattice_segment(lattice, i, j, mv, units).action() / units.hbar)
                nxt[k] = nxt.get(k, 0j) + amp * step
        row = nxt
    return row.get(lattice.shift, 0j)
