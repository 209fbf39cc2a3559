"""Closed forms and functional representations of the divided difference."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import NodeSequence, SmoothFunction, as_nodes, newton_weight


@dataclass(frozen=True)
class DDFunctional:
    """f -> sum of weight * D^order f(site) over ``terms``."""

    terms: tuple[tuple[float, int, float], ...]

    @property
    def max_order(self) -> int:
        return max(mu for _, mu, _ in self.terms)

    def weight(self, site: float, order: int) -> float:
        for x, mu, a in self.terms:
            if x == site and mu == order:
                return a
        raise KeyError((site, order))


def refine_coeffs(t, sigma) -> list[tuple[int, float]]:
    """Write Delta(t[sigma]) as a combination of consecutive-node differences.

    Returns ``[(j, alpha_j), ...]`` with
    ``Delta(t[sigma]) = sum_j alpha_j * Delta(t[j : j + k])``, k = len(sigma).
    Interior gaps are filled one at a time (lowest missing index first) using
    the three-term identity; the weights are positive for increasing t.
    """
    t = as_nodes(t).nodes
    sigma = tuple(int(s) for s in sigma)
    if not sigma:
        raise ValueError("sigma must be nonempty")
    if any(b <= a for a, b in zip(sigma, sigma[1:])):
        raise ValueError("sigma must be strictly increasing")
    if sigma[0] < 0 or sigma[-1] >= len(t):
        raise ValueError(f"sigma out of range 0..{len(t) - 1}")

    weights: dict[int, float] = {}
    pending = {sigma: 1.0}
    while pending:
        s, w = pending.popitem()
        first, last = s[0], s[-1]
        if last - first + 1 == len(s):
            weights[first] = weights.get(first, 0.0) + w
            continue
        m = next(i for i in range(first + 1, last) if i not in s)
        span = t[last] - t[first]
        if span == 0:
            raise ValueError("refinement needs t[sigma[0]] != t[sigma[-1]]")
        u = tuple(sorted(s + (m,)))
        # (t_l - t_f) Delta(u \ m) = (t_l - t_m) Delta(u \ f) + (t_m - t_f) Delta(u \ l)
        for key, c in ((u[1:], (t[last] - t[m]) / span), (u[:-1], (t[m] - t[first]) / span)):
            pending[key] = pending.get(key, 0.0) + w * c
    return sorted(weights.items())


def cauchy_kernel_dd(t, z: float) -> float:
    """Delta(t)(z - .)^{-1} = 1 / w_n(z)."""
    t = as_nodes(t)
    if z in t.nodes:
        raise ZeroDivisionError(f"pole: z = {z} is a node")
    return 1.0 / newton_weight(t, len(t), z)


def reciprocal_dd(t) -> float:
    """Delta(t) of x -> 1/x, equal to (-1)^(n-1) / (t_1 ... t_n)."""
    t = as_nodes(t).nodes
    if 0.0 in t:
        raise ZeroDivisionError("reciprocal divided difference needs nonzero nodes")
    return (-1) ** (len(t) - 1) / math.prod(t)


def _shifted_weight_derivative(t: tuple[float, ...], j: int, x: float, mu: int) -> float:
    # D^mu w_j(x) from the Taylor coefficients of prod (u + (x - t_l)), u = . - x
    coeffs = np.zeros(j + 1)
    coeffs[0] = 1.0
    for l in range(j):
        a = x - t[l]
        coeffs[1:] = coeffs[1:] * a + coeffs[:-1]
        coeffs[0] *= a
    # coeffs[r] multiplies u**r
    if mu > j:
        return 0.0
    return math.factorial(mu) * coeffs[mu]


def chakalov_weights(t) -> DDFunctional:
    """Weights A such that Delta(t) f = sum A[site, order] D^order f(site).

    Found from exactness on the Newton basis w_0..w_{n-1}: D^{mu_i} w_j(t_i)
    vanishes for i < j, so the system is triangular.
    """
    t = as_nodes(t)
    nodes, mu = t.nodes, t.mult_index
    n = len(t)
    m = np.zeros((n, n))
    for j in range(n):
        for i in range(j, n):
            m[j, i] = _shifted_weight_derivative(nodes, j, nodes[i], mu[i])
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    a = np.zeros(n)
    for j in range(n - 1, -1, -1):
        a[j] = (rhs[j] - m[j, j + 1 :] @ a[j + 1 :]) / m[j, j]
    return DDFunctional(tuple((nodes[i], mu[i], float(a[i])) for i in range(n)))


def apply_functional(F: DDFunctional, f: SmoothFunction) -> float:
    if F.max_order > f.max_order:
        raise ValueError(
            f"{f.name}: functional needs derivatives up to order {F.max_order}"
        )
    return float(sum(a * f.eval(mu, x) for x, mu, a in F.terms))


def lagrange_weights(t) -> list[float]:
    """1 / Dw_n(t_j) for pairwise distinct nodes."""
    t = as_nodes(t)
    if max(t.mult_index) > 0:
        raise ValueError("lagrange weights need pairwise distinct nodes")
    x = t.nodes
    return [1.0 / math.prod(x[j] - x[i] for i in range(len(x)) if i != j) for j in range(len(x))]


def functional_norm(t) -> float:
    """Norm of Delta(t) on C[-1, 1]: sum_j 1/|Dw_n(t_j)|."""
    t = as_nodes(t)
    x = t.nodes
    if any(b <= a for a, b in zip(x, x[1:])):
        raise ValueError("nodes must be strictly increasing")
    if x[0] < -1 or x[-1] > 1:
        raise ValueError("nodes must lie in [-1, 1]")
    return float(sum(abs(w) for w in lagrange_weights(t)))


def chebyshev_extrema(n: int) -> NodeSequence:
    """The n extreme sites of T_{n-1} in [-1, 1], ascending."""
    if n < 2:
        raise ValueError("need n >= 2")
    return NodeSequence(tuple(sorted(math.cos(math.pi * j / (n - 1)) for j in range(n))))
