"""Integral and analytic representations of the divided difference."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core import (
    HermiteDataset,
    NewtonPoly,
    NodeSequence,
    SmoothFunction,
    as_nodes,
    newton_weight,
    sample_function,
)
from .ddtable import dd, divided_difference, hermite_interpolant
from .functions import polynomial, truncated_power
from .newton import derivative_at


@dataclass(frozen=True)
class QuadratureConfig:
    gauss_order: int = 16
    contour_points: int = 256
    contour_center: complex | None = None
    contour_radius: float | None = None

    def __post_init__(self):
        if self.gauss_order < 1 or self.contour_points < 1:
            raise ValueError("quadrature orders must be positive")
        if self.contour_radius is not None and self.contour_radius <= 0:
            raise ValueError("contour radius must be positive")

    def circle(self, nodes) -> tuple[complex, float]:
        lo, hi = min(nodes), max(nodes)
        c = (lo + hi) / 2 if self.contour_center is None else complex(self.contour_center)
        r = (hi - lo) / 2 * 1.5 + 1 if self.contour_radius is None else self.contour_radius
        return c, r


def _gauss01(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return (x + 1) / 2, w / 2


def genocchi_dd(f: SmoothFunction, t, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Integral of D^n f over the simplex, nested 1 >= s_1 >= ... >= s_n >= 0.

    The integrand's argument is tau_0 + sum_k s_k (tau_k - tau_{k-1}). Each
    inner variable is Gauss-Legendre on [0, s_{k-1}].
    """
    tau = list(as_nodes(t).nodes) if isinstance(t, NodeSequence) else [float(x) for x in t]
    n = len(tau) - 1
    if n > f.max_order:
        raise ValueError(f"{f.name}: need derivatives up to order {n}")
    x, gw = _gauss01(cfg.gauss_order)
    s = np.ones(1)
    weight = np.ones(1)
    arg = np.full(1, tau[0])
    for k in range(1, n + 1):
        s_new = np.outer(s, x)
        weight = np.outer(weight * s, gw).ravel()
        arg = (arg[:, None] + s_new * (tau[k] - tau[k - 1])).ravel()
        s = s_new.ravel()
    return float(np.sum(weight * f.eval(n, arg)))


def contour_dd(
    f: SmoothFunction,
    t,
    cfg: QuadratureConfig = QuadratureConfig(),
    imag_tol: float = 1e-8,
) -> float:
    """(1/2 pi i) times the contour integral of f(z) / w_n(z) around a circle.

    ``f.eval(0, z)`` must accept complex arrays. Trapezoidal rule on the
    circle; raises if the imaginary part exceeds ``imag_tol`` relative.
    """
    t = as_nodes(t).nodes
    c, r = cfg.circle(t)
    if any(abs(x - c) >= r for x in t):
        raise ValueError("all nodes must lie strictly inside the contour")
    if any(abs(z - c) <= r for z in f.poles):
        raise ValueError(f"{f.name} has a pole on or inside the contour")
    theta = 2 * np.pi * np.arange(cfg.contour_points) / cfg.contour_points
    e = r * np.exp(1j * theta)
    zeta = c + e
    w = np.ones_like(zeta)
    for x in t:
        w = w * (zeta - x)
    value = np.mean(f.eval(0, zeta) * e / w)
    if abs(value.imag) > imag_tol * (1 + abs(value.real)):
        raise ValueError(f"contour integral has imaginary part {value.imag:.3e}")
    return float(value.real)


def bspline_eval(x: float, knots) -> float:
    """M(x | knots) = k * Delta(knots)(. - x)_+^{k-1}, k = len(knots) - 1.

    Returns 0 outside [first, last]. Raises when ``x`` is a knot of
    multiplicity k, where M jumps.
    """
    knots = as_nodes(knots)
    t = knots.nodes
    k = len(t) - 1
    if k < 1 or not t[0] < t[-1]:
        raise ValueError("B-spline needs at least two knots with first < last")
    if any(b < a for a, b in zip(t, t[1:])):
        raise ValueError("knots must be nondecreasing")
    x = float(x)
    if x < t[0] or x > t[-1]:
        return 0.0
    g = truncated_power(x, k - 1)
    values = tuple(float(g.eval(mu, u)) for u, mu in zip(t, knots.mult_index))
    return k * divided_difference(HermiteDataset(knots, values))


def _spans(t):
    return [(a, b) for a, b in zip(t, t[1:]) if a < b]


def bspline_integral(knots, gauss_order: int = 16) -> float:
    t = as_nodes(knots).nodes
    x, w = _gauss01(gauss_order)
    total = 0.0
    for a, b in _spans(t):
        total += (b - a) * sum(wi * bspline_eval(a + (b - a) * xi, knots) for xi, wi in zip(x, w))
    return total


def peano_dd(f: SmoothFunction, t, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Integral of M(.|t) D^k f / k!, span by span."""
    knots = as_nodes(t)
    k = len(knots) - 1
    if not knots[0] < knots[-1]:
        raise ValueError("degenerate knot span")
    if k > f.max_order:
        raise ValueError(f"{f.name}: need derivatives up to order {k}")
    x, w = _gauss01(cfg.gauss_order)
    total = 0.0
    for a, b in _spans(knots.nodes):
        y = a + (b - a) * x
        m = np.array([bspline_eval(yi, knots) for yi in y])
        total += (b - a) * np.sum(w * m * f.eval(k, y))
    return float(total) / math.factorial(k)


def mean_value_check(f: SmoothFunction, t, grid: int = 1001) -> tuple[float, float, float]:
    """(min D^k f, k! Delta(t) f, max D^k f) with the extrema taken on a grid."""
    t = as_nodes(t)
    k = len(t) - 1
    if k > f.max_order:
        raise ValueError(f"{f.name}: need derivatives up to order {k}")
    mid = math.factorial(k) * dd(f, t.nodes)
    ys = np.asarray(f.eval(k, np.linspace(min(t), max(t), grid)), dtype=float)
    return float(ys.min()), mid, float(ys.max())


def mean_value_holds(lo: float, mid: float, hi: float) -> bool:
    eps = 1e-9 * (1 + abs(hi))
    return lo - eps <= mid <= hi + eps


def _newton_weight_function(t, i: int) -> SmoothFunction:
    return polynomial(NewtonPoly(tuple(t[:i]), (0.0,) * i + (1.0,)), f"w_{i}")


def floater_expansion(s, t, f: SmoothFunction) -> tuple[float, float, float]:
    """Expand Delta(s) f in divided differences at initial segments of t.

    Returns ``(truncation, E_leibniz, E_floater)``; either error term added
    to the truncation gives Delta(s) f.
    """
    s = [float(x) for x in s]
    t = [float(x) for x in t]
    m, n = len(s), len(t)
    if m > n:
        raise ValueError("need len(s) <= len(t)")
    p = n - m
    truncation = sum(
        dd(_newton_weight_function(t, j - 1), s) * dd(f, t[:j]) for j in range(m, n + 1)
    )
    wn = _newton_weight_function(t, n)
    e_leibniz = sum(dd(wn, s[i:]) * dd(f, s[: i + 1] + t) for i in range(m))
    e_floater = 0.0
    for i in range(1, m + 1):
        c = s[i - 1] - t[i + p - 1]
        if c == 0.0:
            continue
        w = _newton_weight_function(t, i + p - 1)
        e_floater += c * dd(w, s[:i]) * dd(f, t[: i + p] + s[i - 1 :])
    return float(truncation), float(e_leibniz), float(e_floater)


def hopf_anchor(s, t, f: SmoothFunction) -> float:
    """sum_i (s_i - t_i) Delta(s_1..s_i, t_i..t_m) f, equal to Delta(s) f - Delta(t) f."""
    s = [float(x) for x in s]
    t = [float(x) for x in t]
    if len(s) != len(t):
        raise ValueError("s and t must have the same length")
    total = 0.0
    for i in range(len(s)):
        if s[i] != t[i]:
            total += (s[i] - t[i]) * dd(f, s[: i + 1] + t[i:])
    return total


def determinant_dd(t, values) -> float:
    """det Q[1, x, ..., x^(n-2), f] / det Q[1, x, ..., x^(n-1)] for distinct nodes."""
    t = as_nodes(t)
    if max(t.mult_index) > 0:
        raise ValueError("determinant ratio needs pairwise distinct nodes")
    x = np.array(t.nodes)
    vander = np.vander(x, increasing=True)
    num = vander.copy()
    num[:, -1] = values
    return float(np.linalg.det(num) / np.linalg.det(vander))


def frobenius_identity(t, x: float, y: float) -> tuple[float, float]:
    """Both sides of (y - x) sum_j w_{j-1}(x)/w_j(y) = 1 - w_n(x)/w_n(y)."""
    t = as_nodes(t)
    n = len(t)
    lhs = (y - x) * sum(newton_weight(t, j - 1, x) / newton_weight(t, j, y) for j in range(1, n + 1))
    rhs = 1 - newton_weight(t, n, x) / newton_weight(t, n, y)
    return lhs, rhs


def interlacing_sites(f: SmoothFunction, tau, grid: int = 200) -> list[float] | None:
    """A k-sequence sigma interlacing tau at which D(f - P_tau f) vanishes.

    Repeated nodes contribute themselves; each gap between consecutive
    distinct nodes contributes a root found by sign-change bracketing on a
    grid. Returns None if some gap shows no sign change.
    """
    tau = as_nodes(tau)
    if any(b < a for a, b in zip(tau, tau[1:])):
        raise ValueError("tau must be nondecreasing")
    r = hermite_interpolant(sample_function(f, tau))

    def g(x):
        return float(f.eval(1, x)) - derivative_at(r, x, 1)

    sigma: list[float] = []
    sites = tau.sites
    for idx, (x, mult) in enumerate(sites):
        sigma.extend([x] * (mult - 1))
        if idx + 1 < len(sites):
            a, b = x, sites[idx + 1][0]
            xs = np.linspace(a, b, grid + 1)[1:-1]
            gs = [g(xi) for xi in xs]
            root = None
            for (x0, g0), (x1, g1) in zip(zip(xs, gs), zip(xs[1:], gs[1:])):
                if g0 == 0.0:
                    root = x0
                    break
                if g0 * g1 < 0:
                    root = brentq(g, x0, x1, xtol=1e-15)
                    break
            if root is None:
                return None
            sigma.append(float(root))
    return sorted(sigma)

