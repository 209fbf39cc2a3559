"""Built-in smooth functions with closed-form derivatives of every order."""

from __future__ import annotations

import math

import numpy as np

from .core import NewtonPoly, PowerPoly, SmoothFunction

UNBOUNDED = 1 << 30


def _falling(k: int, m: int) -> float:
    out = 1.0
    for i in range(m):
        out *= k - i
    return out


def exp() -> SmoothFunction:
    return SmoothFunction(UNBOUNDED, lambda m, z: np.exp(z), "exp")


def sin() -> SmoothFunction:
    return SmoothFunction(UNBOUNDED, lambda m, z: np.sin(z + m * np.pi / 2), "sin")


def recip() -> SmoothFunction:
    """x -> 1/x."""

    def d(m, z):
        return (-1) ** m * math.factorial(m) / z ** (m + 1)

    return SmoothFunction(UNBOUNDED, d, "recip", poles=(0.0,))


def cauchy_kernel(z0) -> SmoothFunction:
    """x -> 1/(z0 - x)."""

    def d(m, x):
        return math.factorial(m) / (z0 - x) ** (m + 1)

    return SmoothFunction(UNBOUNDED, d, f"1/({z0}-x)", poles=(z0,))


def polynomial(p: PowerPoly | NewtonPoly, name: str = "p") -> SmoothFunction:
    if isinstance(p, NewtonPoly):
        p = newton_to_power(p)
    derivs = [p]
    for _ in range(len(p.coeffs)):
        derivs.append(derivs[-1].derivative())

    def d(m, z):
        if m >= len(derivs):
            return 0.0 * z
        return derivs[m](z)

    return SmoothFunction(UNBOUNDED, d, name)


def power(k: int) -> SmoothFunction:
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    return polynomial(PowerPoly((0.0,) * k + (1.0,)), f"power:{k}")


def truncated_power(x: float, degree: int) -> SmoothFunction:
    """u -> (u - x)_+^degree.

    At the kink u == x derivatives of order below ``degree`` are 0 and the
    order-``degree`` derivative (a jump) is undefined.
    """

    def d(m, u):
        u = np.asarray(u, dtype=float)
        if m >= degree and np.any(u == x):
            raise ValueError(f"derivative of order {m} undefined at kink {x}")
        if m > degree:
            return np.zeros_like(u)
        return np.where(u > x, _falling(degree, m) * np.maximum(u - x, 0.0) ** (degree - m), 0.0)

    return SmoothFunction(UNBOUNDED, d, f"(.-{x})_+^{degree}")


def newton_to_power(p: NewtonPoly) -> PowerPoly:
    result = PowerPoly((p.coeffs[-1],))
    for c, t in zip(p.coeffs[-2::-1], p.centers[::-1]):
        result = result * PowerPoly((-t, 1.0)) + PowerPoly((c,))
    return result


def by_name(spec: str) -> SmoothFunction:
    """Resolve ``exp``, ``sin``, ``recip`` or ``power:k``."""
    if spec == "exp":
        return exp()
    if spec == "sin":
        return sin()
    if spec == "recip":
        return recip()
    if spec.startswith("power:"):
        return power(int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown function {spec!r} (choose exp, sin, recip, power:k)")
