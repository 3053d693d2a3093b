"""Power-sum expansion of symmetric invariants and the coefficient equations
whose solution reproduces the exponential form of the path invariant.

Integer and rational inputs stay exact (``int`` / ``fractions.Fraction``), so
identities come out as exact zeros; float or complex inputs fall back to
floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .amplitudes import AxiomReport, InvariantParams, invariant_P, relative_residual

Number = int | Fraction | float | complex


def power_sum(k: int, phases: Sequence[Number]) -> Number:
    """E^(k) = sum_i phi_i^k, with E^(0) = n."""
    if k < 0:
        raise ValueError("order must be non-negative")
    if k == 0:
        return len(phases)
    return sum(p**k for p in phases)


def pair_sums(phi: Sequence[Number], xi: Sequence[Number]) -> list[Number]:
    """All phi_i + xi_j, phi-major."""
    return [a + b for a in phi for b in xi]


def newton_identity_check(t: int, phi: Sequence[Number], xi: Sequence[Number]) -> Number:
    """E^(t)(phi + xi) - sum_r C(t, r) E^(r)(phi) E^(t-r)(xi)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    lhs = power_sum(t, pair_sums(phi, xi))
    rhs = sum(math.comb(t, r) * power_sum(r, phi) * power_sum(t - r, xi) for r in range(t + 1))
    return lhs - rhs


def _exact(x) -> bool:
    return isinstance(x, Rational)


@dataclass(frozen=True)
class CoefficientFamily:
    """alpha^(n)_k = n^-A_exp (alpha^k / k! + perturbation), for k <= max_order."""

    A_exp: Number = 2
    alpha: Number = 1
    max_order: int = 30
    perturbation: Number = 0

    @property
    def exact(self) -> bool:
        return _exact(self.alpha) and isinstance(self.A_exp, int) and (
            _exact(self.perturbation) or isinstance(self.perturbation, float)
        )

    def coefficient(self, n: int, k: int) -> Number:
        if k > self.max_order:
            return 0
        if self.exact:
            eps = Fraction(self.perturbation)
            return Fraction(1, n**self.A_exp) * (Fraction(self.alpha) ** k / math.factorial(k) + eps)
        return n ** (-self.A_exp) * (self.alpha**k / math.factorial(k) + self.perturbation)


def cauchy_solution_check(family: CoefficientFamily, k: int, s: int, n: int, m: int) -> float:
    """Relative residual of k! s! a^(n)_k a^(m)_s = (k+s)! a^(nm)_{k+s}."""
    lhs = math.factorial(k) * math.factorial(s) * family.coefficient(n, k) * family.coefficient(m, s)
    rhs = math.factorial(k + s) * family.coefficient(n * m, k + s)
    scale = max(abs(lhs), abs(rhs))
    if scale == 0:
        return 0.0
    return float(abs(lhs - rhs) / scale)


def truncated_reconstruction(phases: Sequence[float], family: CoefficientFamily, K: int | None = None) -> float:
    """n^-A_exp * (sum_{k<=K} alpha^k/k! E^(k)) * (sum_{k<=K} (-alpha)^k/k! E^(k))."""
    K = family.max_order if K is None else K
    phi = np.asarray(phases, dtype=float)
    n = phi.size
    alpha = complex(family.alpha)
    power = np.ones_like(phi)
    forward = backward = 0j
    term = 1 + 0j
    for k in range(K + 1):
        if k:
            power = power * phi
            term = term * alpha / k
        e_k = float(np.sum(power))
        forward += term * e_k
        backward += term * (-1) ** k * e_k
    return (forward * backward / n**family.A_exp).real


def real_alpha_growth(ns: Sequence[int], spacing: float = 1.0, alpha: float = 1.0) -> list[float]:
    """Invariant with real alpha on phases 0, spacing, 2 spacing, ...; unbounded in n."""
    return [invariant_P(np.arange(n) * spacing, InvariantParams(alpha=alpha)) for n in ns]


def product_invariant(phases: Sequence[float], alphas: Sequence[complex], A_exp: float | None = None) -> complex:
    """n^-A_exp prod_j sum_i exp(alpha_j phi_i). Default A_exp is the number of factors."""
    phi = np.asarray(phases, dtype=float)
    A_exp = len(alphas) if A_exp is None else A_exp
    value = 1 + 0j
    for a in alphas:
        value *= complex(np.sum(np.exp(complex(a) * phi)))
    return value / phi.size**A_exp


def product_closure_check(
    alphas: Sequence[complex],
    n: int = 2,
    m: int = 2,
    trials: int = 100,
    rng: np.random.Generator | None = None,
    A_exp: float | None = None,
) -> AxiomReport:
    """Symmetry, inversion and composition residuals of a product of basic solutions.

    Inversion holds only when the alphas come in +- pairs.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    report = AxiomReport()
    for _ in range(trials):
        phi = rng.uniform(-math.pi, math.pi, n)
        xi = rng.uniform(-math.pi, math.pi, m)
        base = product_invariant(phi, alphas, A_exp)
        perm = rng.permutation(n)
        report.record("symmetry", relative_residual(base, product_invariant(phi[perm], alphas, A_exp)), {"phi": phi.tolist(), "perm": perm.tolist()})
        report.record("inversion", relative_residual(base, product_invariant(-phi, alphas, A_exp)), {"phi": phi.tolist()})
        lhs = base * product_invariant(xi, alphas, A_exp)
        rhs = product_invariant((phi[:, None] + xi[None, :]).ravel(), alphas, A_exp)
        report.record("composition", relative_residual(lhs, rhs), {"phi": phi.tolist(), "xi": xi.tolist()})
    return report


def multi_index_coefficient(ks: Sequence[int], alphas: Sequence[Number], n: int, A_exp: int) -> Number:
    """Symmetrised N-index solution n^-A sum_pi prod_j alpha_j^k_pi(j) / (N! prod k_i!)."""
    N = len(ks)
    if len(alphas) != N:
        raise ValueError("need one alpha per index")
    total = sum(math.prod(a**k for a, k in zip(alphas, perm)) for perm in itertools.permutations(ks))
    denom = math.factorial(N) * math.prod(math.factorial(k) for k in ks)
    if all(_exact(a) for a in alphas) and isinstance(A_exp, int):
        return Fraction(total, 1) / (n**A_exp * denom)
    return total / (n**A_exp * denom)


def multi_index_cauchy_residual(
    ks: Sequence[int], ss: Sequence[int], alphas: Sequence[Number], n: int, m: int, A_exp: int = 2
) -> Number:
    """N! prod k! prod s! a^(n)_k a^(m)_s - sum_pi prod (k_i + s_pi(i))! a^(nm)_{k + s_pi}."""
    N = len(ks)
    lhs = (
        math.factorial(N)
        * math.prod(math.factorial(k) for k in ks)
        * math.prod(math.factorial(s) for s in ss)
        * multi_index_coefficient(ks, alphas, n, A_exp)
        * multi_index_coefficient(ss, alphas, m, A_exp)
    )
    rhs = 0
    for perm in itertools.permutations(ss):
        summed = [k + s for k, s in zip(ks, perm)]
        rhs += math.prod(math.factorial(x) for x in summed) * multi_index_coefficient(summed, alphas, n * m, A_exp)
    return lhs - rhs


def multi_index_series_residual(phases: Sequence[Number], alphas: Sequence[Number], K: int, A_exp: int | None = None) -> Number:
    """Truncated N-index series minus the product of truncated exponential sums.

    Both are summed over the same box 0 <= k_i <= K, so the difference is an
    exact zero for rational inputs.
    """
    N = len(alphas)
    A_exp = N if A_exp is None else A_exp
    n = len(phases)
    E = [power_sum(k, phases) for k in range(K + 1)]
    series = 0
    for ks in itertools.product(range(K + 1), repeat=N):
        series += multi_index_coefficient(ks, alphas, n, A_exp) * math.prod(E[k] for k in ks)
    exact = all(_exact(a) for a in alphas)
    product = Fraction(1, n**A_exp) if exact else n ** (-A_exp)
    for a in alphas:
        a = Fraction(a) if exact else a
        product *= sum(a**k / math.factorial(k) * E[k] for k in range(K + 1))
    return series - product
