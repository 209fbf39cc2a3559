"""Random but well-conditioned test cases: separated nodes, modest polynomials."""

from __future__ import annotations

import numpy as np

from .core import NodeSequence, PowerPoly


def random_sites(rng: np.random.Generator, count: int, lo: float = -2.0, hi: float = 2.0) -> list[float]:
    """``count`` distinct sites at least 3/4 of a grid step apart, ascending.

    The grid step is (hi - lo) / 8, so up to 9 sites fit.
    """
    spacing = (hi - lo) / 8
    grid = np.linspace(lo, hi, 9)
    if count > len(grid):
        raise ValueError("too many sites for the interval")
    picks = np.sort(rng.choice(grid, size=count, replace=False))
    return list(picks + rng.uniform(-spacing / 8, spacing / 8, size=count))


def random_nodes(rng: np.random.Generator, n: int, confluent: bool = False,
                 max_mult: int = 3, lo: float = -2.0, hi: float = 2.0) -> NodeSequence:
    """n nodes; with ``confluent`` some sites repeat (up to ``max_mult`` times)."""
    if not confluent:
        return NodeSequence(tuple(random_sites(rng, n, lo, hi)))
    mults = []
    left = n
    while left:
        m = int(rng.integers(1, min(max_mult, left) + 1))
        mults.append(m)
        left -= m
    sites = random_sites(rng, len(mults), lo, hi)
    nodes = [x for x, m in zip(sites, mults) for _ in range(m)]
    return NodeSequence(tuple(nodes))


def random_poly(rng: np.random.Generator, degree: int) -> PowerPoly:
    c = rng.uniform(-1, 1, size=degree + 1)
    if degree >= 0:
        c[-1] = rng.choice([-1, 1]) * rng.uniform(0.5, 1.5)
    return PowerPoly(tuple(c))


def random_increasing(rng: np.random.Generator, n: int, lo: float = -1.0, hi: float = 1.0) -> NodeSequence:
    """Strictly increasing nodes in [lo, hi] (no separation guarantee)."""
    while True:
        x = np.sort(rng.uniform(lo, hi, size=n))
        if np.all(np.diff(x) > 0):
            return NodeSequence(tuple(x))
