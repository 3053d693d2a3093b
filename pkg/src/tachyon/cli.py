"""``tachyon`` command-line front end.

Exit codes: 0 ok, 1 malformed input, 2 regime violation, 3 enumeration cap
exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import io
from .amplitudes import (
    amplitude,
    arm_for_phase_difference,
    interference_scan,
    invariant_P,
    phase,
    two_arm_ensemble,
)
from .errors import EnumerationCapError, RegimeError, UndefinedHelicity
from .fourmomentum import (
    TachyonState,
    energy_momentum,
    helicity_transform,
    infinite_velocity_frame,
    transform_state,
)
from .kinematics import (
    GeneralBoost,
    SpacetimeEvent,
    boost_subluminal,
    boost_superluminal,
    infinite_boost,
    interval,
    interval_superluminal,
    quadratic_form,
)
from .lattice import DEFAULT_CAP, Lattice, count_paths, lattice_path_sum
from .units import TOL_ENV_VAR, UnitSystem, default_tolerance
from .verify import SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_REGIME, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4

DESCRIPTION = """\
Superluminal kinematics, tachyon four-momenta and path-amplitude invariants.

Formulas (K is the metric constant, 1/c^2 unless --K is given):
  subluminal boost     x' = A (x - V t),  t' = A (t - K V x),  A = 1/sqrt(1 - K V^2)
  superluminal boost   chi = A (x - W t),  tau_x = A (t - K W x),  c tau_y = y,  c tau_z = z
                       A = -+ sgn(W)/sqrt(K W^2 - 1)   (--sign minus | plus)
  infinite boost       chi = c t,  c tau = r           (minus convention)
  intervals            c^2 dt^2 - dr^2  and  dchi^2 - c^2 dtau^2
  tachyon four-vector  sgn(s.w)/sqrt(w^2/c^2 - 1) (1, w/c);  E = mu c^2 A0,  p = mu c A
  helicity rule        sgn(s'.w') = sgn(s.w) sgn(c^2 - w.V)
  infinite frame       V = c^2 (w - sgn(s.w) sqrt(w^2-c^2) s) / (w^2 - |s.w| sqrt(w^2-c^2))
  amplitude            <B|A> = (1/n) sum_i exp(i phi_i),  phi = sum (E dt - p.dr)/hbar
  invariant            P = n^-A_exp (sum exp(alpha phi_i)) (sum exp(-alpha phi_i)),  alpha = i

Exit codes: 0 ok, 1 malformed input, 2 regime violation, 3 enumeration cap,
4 verification failure. TACHYON_TOL overrides the default tolerance.
"""


class UsageError(Exception):
    """Malformed command-line input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    c: float
    hbar: float
    tol: float
    sign_choice: str
    seed: int

    def __post_init__(self):
        for name in ("c", "hbar", "tol"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise UsageError(f"--{name} must be positive and finite, got {value}")

    @property
    def units(self) -> UnitSystem:
        return UnitSystem(self.c, self.hbar)


def parse_velocity(text: str, c: float = 1.0) -> float | np.ndarray:
    """``"0.6"``, ``"0.6c"`` or a comma-separated 3-vector with optional ``c`` suffixes."""
    parts = [p.strip() for p in text.split(",")]
    values = []
    for part in parts:
        scale = 1.0
        if part.endswith("c"):
            part, scale = part[:-1], c
        try:
            values.append(float(part) * scale)
        except ValueError:
            raise UsageError(f"cannot parse velocity {text!r}") from None
    if len(values) == 1:
        return values[0]
    if len(values) != 3:
        raise UsageError(f"a velocity vector needs 3 components, got {len(values)}")
    return np.array(values)


def _read_json(source: str | None):
    try:
        if source is None or source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}") from None


def _emit(obj, out: str | None = None):
    text = io.dumps(obj) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# commands ----------------------------------------------------------------


def cmd_transform(args, cfg: RunConfig) -> int:
    chosen = [flag for flag in ("V", "W", "infinite") if getattr(args, flag) not in (None, False)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --V, --W, --infinite")
    if args.event is not None:
        parts = [float(p) for p in args.event.split(",")]
        if not 2 <= len(parts) <= 4:
            raise UsageError("--event takes t,x[,y[,z]]")
        event = SpacetimeEvent(*parts)
    else:
        event = io.event_from_json(_read_json(args.input))
    units = cfg.units
    K = units.K if args.K is None else args.K
    origin = SpacetimeEvent(0.0, 0.0)
    result = {"input": io.event_to_json(event)}

    if args.infinite:
        coords = infinite_boost(event, units, cfg.sign_choice)
        result.update(regime="infinite", output=io.superluminal_to_json(coords))
        before, after = interval(origin, event, units), interval_superluminal(infinite_boost(origin, units), coords, units)
    elif args.V is not None:
        V = parse_velocity(args.V, cfg.c)
        boost = GeneralBoost(K, V, "subluminal")
        moved = boost_subluminal(event, boost, cfg.tol)
        result.update(regime="subluminal", output=io.event_to_json(moved))
        before, after = (cfg.c**2 * quadratic_form(origin, e, K) for e in (event, moved))
    else:
        W = parse_velocity(args.W, cfg.c)
        boost = GeneralBoost(K, W, "superluminal", cfg.sign_choice)
        coords = boost_superluminal(event, boost, cfg.tol)
        c_frame = 1.0 / math.sqrt(K)
        frame_units = UnitSystem(c_frame, cfg.hbar)
        origin_coords = boost_superluminal(origin, boost, cfg.tol)
        result.update(regime="superluminal", output=io.superluminal_to_json(coords))
        before = interval(origin, event, frame_units)
        after = interval_superluminal(origin_coords, coords, frame_units)
    result.update(interval_before=before, interval_after=after)
    _emit(result)
    return EXIT_OK


def cmd_momentum(args, cfg: RunConfig) -> int:
    state = io.state_from_json(_read_json(args.input), cfg.c)
    E, p = energy_momentum(state)
    result = {"state": io.state_to_json(state), "E": E, "p": p.tolist(), "p_magnitude": float(np.linalg.norm(p))}
    if isinstance(state, TachyonState):
        result.update(helicity=state.helicity, infinite_velocity_frame=infinite_velocity_frame(state).tolist())
    if args.boost is not None:
        V = parse_velocity(args.boost, cfg.c)
        V = np.array([V, 0.0, 0.0]) if np.ndim(V) == 0 else V
        moved = transform_state(state, V)
        E2, p2 = energy_momentum(moved)
        boosted = {"V": V.tolist(), "state": io.state_to_json(moved), "E": E2, "p": p2.tolist()}
        if isinstance(state, TachyonState):
            try:
                flipped = helicity_transform(state, V, cfg.tol) != state.helicity
            except UndefinedHelicity:
                flipped = None  # w.V = c^2: infinitely fast in the new frame
            boosted.update(helicity=moved.helicity, infinite=moved.infinite, anti_tachyon=flipped)
        result["boosted"] = boosted
    _emit(result)
    return EXIT_OK


def _lattice_from_args(args) -> Lattice:
    try:
        steps, shift = (int(v) for v in args.lattice.split(","))
    except ValueError:
        raise UsageError("--lattice takes STEPS,SHIFT") from None
    try:
        moves = tuple(int(v) for v in args.moves.split(","))
    except ValueError:
        raise UsageError("--moves takes comma-separated integers") from None
    return Lattice(steps, shift, dt=args.dt, dx=args.dx, mass=args.mass, moves=moves)


def cmd_amplitude(args, cfg: RunConfig) -> int:
    units = cfg.units
    if args.lattice is not None:
        lattice = _lattice_from_args(args)
        amp = lattice_path_sum(lattice, units, cap=args.cap, method=args.method)
        n = count_paths(lattice)
        P = abs(amp) ** 2
    else:
        ensemble = io.ensemble_from_json(_read_json(args.input))
        amp = amplitude(ensemble, units)
        n = len(ensemble.paths)
        P = invariant_P([phase(path, units) for path in ensemble.paths])
    _emit({"amplitude": {"re": amp.real, "im": amp.imag}, "P": P, "n": n})
    return EXIT_OK


def cmd_scan(args, cfg: RunConfig) -> int:
    units = cfg.units
    values = np.linspace(args.start, args.stop, args.points)
    if args.by == "dphi":

        def geometry(dphi):
            return two_arm_ensemble(0.0, arm_for_phase_difference(dphi, args.duration, args.mass, units), args.duration, args.mass, units)

    else:

        def geometry(arm):
            return two_arm_ensemble(0.0, arm, args.duration, args.mass, units)

    rows = interference_scan(geometry, values, units)
    lines = ["param,P"] + [f"{io.format_float(x)},{io.format_float(P)}" for x, P in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.A_exp != 2.0 and not args.expect_fail:
        raise UsageError("--A-exp other than 2 breaks the invariant; pass --expect-fail to run it anyway")
    tol = cfg.tol if args.tol is not None else None
    report = run_suite(args.suite, args.trials, cfg.seed, cfg.units, A_exp=args.A_exp, tol=tol)
    failed = [entry["check"] for entry in report if not entry["passed"]]
    _emit({"suite": args.suite, "trials": args.trials, "seed": cfg.seed, "passed": not failed, "failures": failed, "checks": report}, args.out)
    return EXIT_VERIFY if failed else EXIT_OK


# parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--c", type=float, default=1.0, help="speed of light (default 1)")
    common.add_argument("--hbar", type=float, default=1.0, help="action quantum (default 1)")
    common.add_argument("--tol", type=float, default=None, help=f"comparison tolerance (default ${TOL_ENV_VAR} or 1e-12)")
    common.add_argument("--sign", choices=("minus", "plus"), default="minus", help="superluminal sign convention")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    parser = _Parser(prog="tachyon", description=DESCRIPTION, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("transform", parents=[common], help="transform an event to another frame",
                       description="Transform an event. Velocities accept a 'c' suffix (0.6c) or x,y,z components.")
    p.add_argument("input", nargs="?", help="event JSON file ({\"t\",\"x\",\"y\",\"z\"}); stdin if omitted")
    p.add_argument("--event", help="event as t,x[,y[,z]] instead of JSON")
    p.add_argument("--V", help="subluminal frame velocity, |V| < c")
    p.add_argument("--W", help="superluminal frame velocity, |W| > c")
    p.add_argument("--infinite", action="store_true", help="frame moving infinitely fast along x")
    p.add_argument("--K", type=float, default=None, help="metric constant (default 1/c^2)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("momentum", parents=[common], help="energy-momentum of a state",
                       description="E = mu c^2 A0, p = mu c A for a tachyon {\"mu\",\"w\",\"s\"} or m for {\"m\",\"v\"}.")
    p.add_argument("input", nargs="?", help="state JSON file; stdin if omitted")
    p.add_argument("--boost", help="frame velocity to transform the state into")
    p.set_defaults(func=cmd_momentum)

    p = sub.add_parser("amplitude", parents=[common], help="<B|A> and P for an ensemble or lattice",
                       description="Amplitude (1/n) sum exp(i phi) with phi = sum (E dt - p.dr)/hbar.")
    p.add_argument("input", nargs="?", help="ensemble JSON file; stdin if omitted")
    p.add_argument("--lattice", help="STEPS,SHIFT lattice instead of an ensemble")
    p.add_argument("--dt", type=float, default=1.0)
    p.add_argument("--dx", type=float, default=0.5)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--moves", default="-1,0,1", help="column offsets allowed per time step")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest number of paths to enumerate")
    p.add_argument("--method", choices=("enumerate", "transfer"), default="enumerate")
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("scan", parents=[common], help="two-arm interference sweep as CSV",
                       description="Two-arm fringe sweep; writes param,P rows. Expected P = (1 + cos dphi)/2.")
    p.add_argument("--by", choices=("dphi", "arm"), default="dphi", help="sweep the phase difference or the arm length")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=2 * math.pi)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--duration", type=float, default=20.0)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--out", help="CSV file (stdout if omitted)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run the property suites",
                       description="Run randomized and exhaustive property checks; exit 4 on any failure.")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--A-exp", dest="A_exp", type=float, default=2.0, help="normalization exponent of the invariant")
    p.add_argument("--expect-fail", action="store_true", help="allow a deliberately broken --A-exp")
    p.add_argument("--out", help="report file (stdout if omitted)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = default_tolerance() if args.tol is None else args.tol
        cfg = RunConfig(args.c, args.hbar, tol, args.sign, args.seed)
        if getattr(args, "trials", 0) < 0 or getattr(args, "points", 1) < 1:
            raise UsageError("--trials must be >= 0 and --points >= 1")
        return args.func(args, cfg)
    except (RegimeError, UndefinedHelicity) as exc:
        print(f"tachyon: regime error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except EnumerationCapError as exc:
        print(f"tachyon: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, TypeError, KeyError) as exc:
        print(f"tachyon: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
