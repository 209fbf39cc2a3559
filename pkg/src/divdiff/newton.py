"""Horner evaluation and basis changes for Newton forms."""

from __future__ import annotations

import math

from .core import NewtonPoly, NodeSequence
from .ddtable import dd
from .functions import polynomial


def _nodes(t) -> tuple[float, ...]:
    return t.nodes if isinstance(t, NodeSequence) else tuple(float(x) for x in t)


def horner_eval(p: NewtonPoly, z: float) -> tuple[float, list[float]]:
    """Nested multiplication.

    Returns ``(p(z), hatc)`` where ``hatc[j]`` is the divided difference of
    ``p`` at ``(z, t_1, ..., t_j)``; these are the coefficients of ``p`` for
    the centers ``(z, t_1, t_2, ...)``.
    """
    c = p.coeffs
    n = len(c)
    hatc = [0.0] * n
    hatc[-1] = c[-1]
    for j in range(n - 2, -1, -1):
        hatc[j] = c[j] + (z - p.centers[j]) * hatc[j + 1]
    return hatc[0], hatc


def insert_center(p: NewtonPoly, z: float) -> NewtonPoly:
    """Same polynomial, centers ``(z, t_1, ..., t_{n-2})``."""
    if not p.centers:
        return p
    _, hatc = horner_eval(p, z)
    return NewtonPoly((float(z),) + p.centers[:-1], tuple(hatc))


def change_basis(p: NewtonPoly, new_centers) -> NewtonPoly:
    new_centers = tuple(float(z) for z in new_centers)
    if len(new_centers) != len(p.centers):
        raise ValueError(
            f"expected {len(p.centers)} centers, got {len(new_centers)}"
        )
    for z in reversed(new_centers):
        p = insert_center(p, z)
    return p


def to_taylor(p: NewtonPoly, tau: float) -> tuple[float, ...]:
    """Coefficients a_k = D^k p(tau) / k! of p in powers of (x - tau)."""
    return change_basis(p, (tau,) * len(p.centers)).coeffs


def derivative_at(p: NewtonPoly, tau: float, k: int) -> float:
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    a = to_taylor(p, tau)
    if k >= len(a):
        return 0.0
    return math.factorial(k) * a[k]


def remainder_poly(p: NewtonPoly, t) -> NewtonPoly:
    """q_n = Delta(t_1..t_n, .) p, so that p = p_n + w_n q_n.

    ``p`` is first rebased so its centers begin with ``t``; q_n is then the
    tail of that Newton form.
    """
    t = _nodes(t)
    n = len(t)
    if n > len(p.coeffs):
        raise ValueError(
            f"{n} nodes exceed the {len(p.coeffs)} coefficients of the Newton form"
        )
    if n == len(p.coeffs):
        return NewtonPoly((), (0.0,))
    if p.centers[:n] != t:
        p = change_basis(p, t + p.centers[n:])
    return NewtonPoly(p.centers[n:], p.coeffs[n:])


def partial_sum(p: NewtonPoly, n: int) -> NewtonPoly:
    """p_n, the first n terms of the Newton form."""
    return NewtonPoly(p.centers[: n - 1], p.coeffs[:n])


def extended_dd_derivative(p: NewtonPoly, t, k: int, z: float) -> float:
    """D^k of z -> Delta(t, z) p, via k! Delta(t, z repeated k+1 times) p."""
    t = _nodes(t)
    f = polynomial(p)
    return math.factorial(k) * dd(f, t + (float(z),) * (k + 1))

