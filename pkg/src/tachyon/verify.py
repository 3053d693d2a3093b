"""Randomized and exhaustive property suites behind ``tachyon verify``.

Each check returns one report entry::

    {"check", "parameters", "max_residual", "tol", "passed", "witness"}

``witness`` holds the inputs that produced the largest residual when the
check fails and is ``None`` otherwise. Every check has its own threshold;
passing ``tol`` overrides all of them at once. All randomness comes from one
``numpy.random.Generator`` so a seed fixes the report byte for byte.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .amplitudes import (
    InvariantParams,
    check_axioms,
    fringe,
    interference_scan,
    invariant_P,
    relative_residual,
    two_arm_ensemble,
    two_arm_phase_difference,
)
from .decay import HELICITY_LIKE, apply_discrete_symmetry, conservation_residual, solve_unique_decay
from .derivation import (
    CoefficientFamily,
    cauchy_solution_check,
    multi_index_cauchy_residual,
    newton_identity_check,
    truncated_reconstruction,
)
from .fourmomentum import (
    MassiveState,
    SpacelikeState,
    TachyonState,
    boost_four_vector,
    four_vector,
    helicity_transform,
    infinite_velocity_frame,
    transform_state,
    wigner_rotation,
)
from .kinematics import (
    GeneralBoost,
    SpacetimeEvent,
    boost_subluminal,
    boost_superluminal,
    infinite_boost,
    infinite_boost_inverse,
    interval,
    interval_superluminal,
    quadratic_form,
    superluminal_length,
    superluminal_time_flow,
)
from .units import NATURAL, UnitSystem

SUITES = ("kinematics", "fourvectors", "axioms", "appendixB")


class _Check:
    """Running maximum of a residual together with its witness."""

    def __init__(self, name: str, tol: float, parameters: dict):
        self.name = name
        self.tol = tol
        self.parameters = parameters
        self.max_residual = 0.0
        self.witness: dict | None = None

    def record(self, residual: float, witness: Callable[[], dict] | dict):
        residual = float(residual)
        if math.isnan(residual):
            residual = math.inf
        if self.witness is None or residual > self.max_residual:
            self.max_residual = residual
            self.witness = witness() if callable(witness) else witness

    def entry(self, tol_override: float | None) -> dict:
        tol = self.tol if tol_override is None else tol_override
        passed = self.max_residual < tol
        return {
            "check": self.name,
            "parameters": self.parameters,
            "max_residual": self.max_residual,
            "tol": tol,
            "passed": passed,
            "witness": None if passed else self.witness,
        }


# random inputs -----------------------------------------------------------


def random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_subluminal(rng: np.random.Generator, c: float = 1.0, max_beta: float = 0.95) -> np.ndarray:
    return rng.uniform(0.0, max_beta) * c * random_unit(rng)


def random_event(rng: np.random.Generator, scale: float = 10.0) -> SpacetimeEvent:
    return SpacetimeEvent(*rng.uniform(-scale, scale, 4))


def random_tachyon(rng: np.random.Generator, c: float = 1.0, mu: float = 1.0) -> TachyonState:
    """Valid tachyon: w = w_par s + w_perp with |w_perp| < c and |w| > c."""
    s = random_unit(rng)
    perp = random_unit(rng)
    perp -= (perp @ s) * s
    perp /= np.linalg.norm(perp)
    w_perp = rng.uniform(0.0, 0.95) * c
    w_par = math.sqrt(c * c - w_perp * w_perp) * rng.uniform(1.05, 5.0) * rng.choice([-1.0, 1.0])
    return TachyonState(mu, w_par * s + w_perp * perp, s, c=c)


def _frame_for(state: TachyonState, rng: np.random.Generator, c: float) -> np.ndarray:
    """Random subluminal V kept away from the singular plane w.V = c^2."""
    while True:
        V = random_subluminal(rng, c)
        if abs(float(state.w @ V) - c * c) > 1e-3 * c * c:
            return V


def _vector_residual(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b)))))


# suites ------------------------------------------------------------------


def suite_kinematics(trials: int, rng: np.random.Generator, units: UnitSystem = NATURAL) -> list[_Check]:
    c = units.c
    sub = _Check("interval_subluminal", 1e-10, {"trials": trials, "max_beta": 0.99})
    sup = _Check("interval_superluminal", 1e-10, {"trials": trials, "beta": [1.05, 20.0], "signs": ["minus", "plus"]})
    inf = _Check("interval_infinite", 1e-10, {"trials": trials})
    gen = _Check("quadratic_form_any_K", 1e-10, {"trials": trials, "K": [-1.0, 1.0]})
    back = _Check("infinite_boost_round_trip", 1e-12, {"trials": trials})
    fixed = _Check("sqrt2_fixed_point", 1e-12, {"w": "sqrt(2) c"})

    for k in range(trials):
        a, b = random_event(rng), random_event(rng)
        before = interval(a, b, units)

        V = random_subluminal(rng, c, 0.99)
        boost = GeneralBoost(units.K, V)
        after = interval(boost_subluminal(a, boost), boost_subluminal(b, boost), units)
        sub.record(abs(after - before), lambda: {"a": vars(a), "b": vars(b), "V": V.tolist()})

        sign = ("minus", "plus")[k % 2]
        speed = rng.uniform(1.05, 20.0) * c
        W = speed * random_unit(rng) if k % 4 >= 2 else speed * rng.choice([-1.0, 1.0])
        sboost = GeneralBoost(units.K, W, "superluminal", sign)
        after = interval_superluminal(boost_superluminal(a, sboost), boost_superluminal(b, sboost), units)
        sup.record(abs(after - before), lambda: {"a": vars(a), "b": vars(b), "W": np.atleast_1d(W).tolist(), "sign": sign})

        ia, ib = infinite_boost(a, units, sign), infinite_boost(b, units, sign)
        inf.record(abs(interval_superluminal(ia, ib, units) - before), lambda: {"a": vars(a), "b": vars(b), "sign": sign})
        restored = infinite_boost_inverse(ia, units, sign)
        back.record(
            _vector_residual(np.array([restored.t, *restored.r]), np.array([a.t, *a.r])), lambda: {"a": vars(a), "sign": sign}
        )

        K = rng.uniform(-1.0, 1.0)
        limit = 0.99 / math.sqrt(K) if K > 0 else 10.0
        Vg = rng.uniform(-limit, limit)
        gboost = GeneralBoost(K, Vg)
        q0 = quadratic_form(a, b, K)
        q1 = quadratic_form(boost_subluminal(a, gboost), boost_subluminal(b, gboost), K)
        gen.record(relative_residual(q0, q1), lambda: {"a": vars(a), "b": vars(b), "K": K, "V": Vg})

    if trials:
        w = math.sqrt(2.0) * c
        for sign in ("minus", "plus"):
            length = superluminal_length(1.0, w, units, sign)
            flow = superluminal_time_flow(1.0, w, units, sign)
            fixed.record(max(abs(abs(length) - 1.0), abs(abs(flow) - 1.0)), {"sign": sign, "length": length, "time_flow": flow})
    return [sub, sup, inf, gen, back, fixed]


def suite_fourvectors(trials: int, rng: np.random.Generator, units: UnitSystem = NATURAL) -> list[_Check]:
    c = units.c
    params = {"trials": trials, "max_beta": 0.95}
    cov = {family: _Check(f"covariance_{family}", 1e-9, params) for family in ("timelike-massive", "spacelike-s", "tachyon", "tachyon-dual")}
    rule = _Check("helicity_sign_rule", 0.5, params)
    rot = _Check("wigner_rotation_orthogonal", 1e-10, params)
    frame_identity = _Check("infinite_frame_w_dot_V", 1e-10, {"trials": trials})
    frame_speed = _Check("infinite_frame_subluminal", 0.5, {"trials": trials})
    worked = _Check("infinite_frame_worked_case", 1e-12, {"w": [2.0, 0.0, 0.0], "s": [1.0, 0.0, 0.0]})
    decay = _Check("unique_decay_conservation", 1e-10, {"trials": trials, "m": [0.1, 10.0], "mu": [0.1, 10.0]})
    cpt = _Check("unique_decay_cpt_conservation", 1e-10, {"trials": trials, "rules": "helicity-like"})

    def covariance(family, state, V):
        boosted = boost_four_vector(four_vector(family, state), V, c)
        direct = four_vector(family, transform_state(state, V))
        cov[family].record(
            _vector_residual(boosted.components, direct.components),
            lambda: {"state": _state_dict(state), "V": V.tolist()},
        )

    for _ in range(trials):
        covariance("timelike-massive", MassiveState(1.0, random_subluminal(rng, c), c), random_subluminal(rng, c))
        covariance("spacelike-s", SpacelikeState(random_subluminal(rng, c), random_unit(rng), c), random_subluminal(rng, c))

        state = random_tachyon(rng, c)
        V = _frame_for(state, rng, c)
        covariance("tachyon", state, V)
        covariance("tachyon-dual", state, V)

        moved = transform_state(state, V)
        predicted = helicity_transform(state, V)
        flips = float(state.w @ V) > c * c
        ok = predicted == moved.helicity and (predicted != state.helicity) == flips
        rule.record(0.0 if ok else 1.0, lambda: {"state": _state_dict(state), "V": V.tolist()})

        v = random_subluminal(rng, c)
        R = wigner_rotation(v, V, c)
        rot.record(float(np.max(np.abs(R.T @ R - np.eye(3)))), lambda: {"v": v.tolist(), "V": V.tolist()})

        Vinf = infinite_velocity_frame(state)
        frame_identity.record(abs(float(state.w @ Vinf) - c * c) / (c * c), lambda: {"state": _state_dict(state)})
        frame_speed.record(0.0 if np.linalg.norm(Vinf) < c else 1.0, lambda: {"state": _state_dict(state)})

        m, mu = rng.uniform(0.1, 10.0, 2)
        solved = solve_unique_decay(m, mu, units)
        residual = float(np.max(np.abs(conservation_residual(solved.process)))) / (mu * c * c)
        decay.record(residual, {"m": m, "mu": mu})
        image = apply_discrete_symmetry(solved.process, "CPT", HELICITY_LIKE)
        cpt.record(float(np.max(np.abs(conservation_residual(image)))) / (mu * c * c), {"m": m, "mu": mu})

    if trials:
        V = infinite_velocity_frame(TachyonState(1.0, [2.0 * c, 0.0, 0.0], [1.0, 0.0, 0.0], c=c))
        worked.record(float(np.max(np.abs(V - np.array([0.5 * c, 0.0, 0.0])))) / c, {"V": V.tolist()})
    return [*cov.values(), rule, rot, frame_identity, frame_speed, worked, decay, cpt]


def axiom_pairs(max_product: int = 64) -> list[tuple[int, int]]:
    return [(n, m) for n in range(1, max_product + 1) for m in range(1, max_product // n + 1)]


def suite_axioms(
    trials: int,
    rng: np.random.Generator,
    units: UnitSystem = NATURAL,
    A_exp: float = 2.0,
    max_product: int = 64,
) -> list[_Check]:
    params = InvariantParams(alpha=1j, A_exp=A_exp)
    base = {"trials_per_pair": trials, "max_nm": max_product, "alpha": "i", "A_exp": A_exp}
    checks = {name: _Check(f"axiom_{name}", 1e-10, base) for name in ("symmetry", "inversion", "composition", "normalization")}
    for n, m in axiom_pairs(max_product) if trials else []:
        report = check_axioms(params, n, m, trials, rng)
        for name, residual in report.max_residual.items():
            checks[name].record(residual, lambda: {"n": n, "m": m, **report.witnesses[name]})

    scan = _Check("two_path_fringe", 1e-10, {"points": trials, "duration": 10.0, "mass": 1.0})
    if trials:
        duration = 10.0
        arms = np.linspace(0.0, 0.45 * units.c * duration, trials)
        rows = interference_scan(lambda L: two_arm_ensemble(0.0, L, duration, 1.0, units), arms, units)
        for L, P in rows:
            expected = fringe(two_arm_phase_difference(0.0, L, duration, 1.0, units))
            scan.record(abs(P - expected), {"arm": L, "P": P, "expected": expected})
    return [*checks.values(), scan]


def suite_identities(trials: int, rng: np.random.Generator) -> list[_Check]:
    newton = _Check("newton_identity_exact", 0.5, {"trials": trials, "t_max": 8, "n_max": 5, "m_max": 5})
    cauchy = _Check("cauchy_solution", 1e-12, {"k_max": 10, "s_max": 10, "trials": trials})
    recon = _Check("truncated_reconstruction", 1e-10, {"trials": trials, "K": 30, "n_max": 8})
    multi = _Check("multi_index_cauchy_exact", 0.5, {"trials": trials, "N": 2, "k_max": 3})

    family = CoefficientFamily(A_exp=2, alpha=1)
    for _ in range(trials):
        t = int(rng.integers(0, 9))
        phi = [int(v) for v in rng.integers(-20, 21, int(rng.integers(1, 6)))]
        xi = [int(v) for v in rng.integers(-20, 21, int(rng.integers(1, 6)))]
        newton.record(abs(newton_identity_check(t, phi, xi)), {"t": t, "phi": phi, "xi": xi})

        n, m = (int(v) for v in rng.integers(1, 6, 2))
        for k in range(11):
            for s in range(11):
                cauchy.record(cauchy_solution_check(family, k, s, n, m), {"k": k, "s": s, "n": n, "m": m})

        phases = rng.uniform(-math.pi, math.pi, int(rng.integers(1, 9)))
        recon_family = CoefficientFamily(A_exp=2, alpha=1j)
        diff = abs(truncated_reconstruction(phases, recon_family, 30) - invariant_P(phases))
        recon.record(diff, {"phases": phases.tolist()})

        ks = [int(v) for v in rng.integers(0, 4, 2)]
        ss = [int(v) for v in rng.integers(0, 4, 2)]
        alphas = [int(a) for a in rng.integers(1, 4, 2)]
        residual = multi_index_cauchy_residual(ks, ss, alphas, n, m)
        multi.record(float(abs(residual)), {"ks": ks, "ss": ss, "alphas": alphas, "n": n, "m": m})
    return [newton, cauchy, recon, multi]


def _state_dict(state) -> dict:
    if isinstance(state, TachyonState):
        return {"mu": state.mu, "w": state.w.tolist(), "s": state.s.tolist()}
    if isinstance(state, SpacelikeState):
        return {"v": state.v.tolist(), "s": state.s.tolist()}
    return {"m": state.m, "v": state.v.tolist()}


def run_suite(
    suite: str,
    trials: int,
    seed: int,
    units: UnitSystem = NATURAL,
    A_exp: float = 2.0,
    tol: float | None = None,
) -> list[dict]:
    """Report entries for ``suite`` (one of :data:`SUITES` or ``"all"``)."""
    if trials < 0:
        raise ValueError("trials must be non-negative")
    names = SUITES if suite == "all" else (suite,)
    if any(name not in SUITES for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    if trials == 0:
        return []
    rng = np.random.default_rng(seed)
    report = []
    for name in names:
        if name == "kinematics":
            checks = suite_kinematics(trials, rng, units)
        elif name == "fourvectors":
            checks = suite_fourvectors(trials, rng, units)
        elif name == "axioms":
            checks = suite_axioms(trials, rng, units, A_exp)
        else:
            checks = suite_identities(trials, rng)
        report += [{"suite": name, **check.entry(tol)} for check in checks]
    return report
