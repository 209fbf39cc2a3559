"""Domain types, node clustering and sampling of functions into Hermite data."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np


def _multiplicity_index(nodes: Sequence[float]) -> tuple[int, ...]:
    # mu_j = #{i < j : t_i = t_j}; valid only for clustered sequences
    mu = []
    for j, x in enumerate(nodes):
        mu.append(mu[-1] + 1 if j > 0 and nodes[j - 1] == x else 0)
    return tuple(mu)


def _is_clustered(nodes: Sequence[float]) -> bool:
    seen = set()
    for j, x in enumerate(nodes):
        if j > 0 and nodes[j - 1] == x:
            continue
        if x in seen:
            return False
        seen.add(x)
    return True


@dataclass(frozen=True)
class NodeSequence:
    """Finite node sequence t_1..t_n with repeated nodes kept adjacent.

    ``mult_index[j]`` counts the earlier nodes equal to ``nodes[j]``, so the
    j-th datum attached to this node is the ``mult_index[j]``-th derivative.
    """

    nodes: tuple[float, ...]
    mult_index: tuple[int, ...] = field(default=())

    def __post_init__(self):
        nodes = tuple(float(x) for x in self.nodes)
        if not nodes:
            raise ValueError("empty node sequence")
        if not all(math.isfinite(x) for x in nodes):
            raise ValueError("nodes must be finite")
        if not _is_clustered(nodes):
            raise ValueError("nodes not clustered")
        mu = _multiplicity_index(nodes)
        if self.mult_index and tuple(self.mult_index) != mu:
            raise ValueError("mult_index inconsistent with nodes")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "mult_index", mu)

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    @property
    def sites(self) -> list[tuple[float, int]]:
        """Distinct nodes with their multiplicities, in sequence order."""
        out: list[tuple[float, int]] = []
        for x, mu in zip(self.nodes, self.mult_index):
            if mu == 0:
                out.append((x, 1))
            else:
                out[-1] = (x, mu + 1)
        return out

    def cluster_start(self, j: int) -> int:
        return j - self.mult_index[j]


def as_nodes(t) -> NodeSequence:
    if isinstance(t, NodeSequence):
        return t
    return NodeSequence(tuple(t))


@dataclass(frozen=True)
class HermiteDataset:
    """Nodes with data y(j) = D^{mu_j} f(t_j), stored as raw derivatives."""

    nodes: NodeSequence
    values: tuple[float, ...]

    def __post_init__(self):
        nodes = as_nodes(self.nodes)
        values = tuple(float(v) for v in self.values)
        if len(values) != len(nodes):
            raise ValueError(
                f"got {len(values)} values for {len(nodes)} nodes"
            )
        if not all(math.isfinite(v) for v in values):
            raise ValueError("data values must be finite")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def from_unsorted(cls, raw_nodes, values, tol: float = 0.0) -> "HermiteDataset":
        """Sort and cluster the nodes, carrying the data along.

        The sort is stable, so data attached to repeated nodes keeps its
        derivative order.
        """
        raw_nodes = [float(x) for x in raw_nodes]
        values = [float(v) for v in values]
        if len(raw_nodes) != len(values):
            raise ValueError("node and value counts differ")
        perm = sorted(range(len(raw_nodes)), key=raw_nodes.__getitem__)
        t = cluster_nodes(raw_nodes, tol)
        return cls(t, tuple(values[i] for i in perm))


@dataclass(frozen=True)
class NewtonPoly:
    """p = sum_j w_{j-1}(x) c(j) with w_i(x) = (x - t_1)...(x - t_i)."""

    centers: tuple[float, ...]
    coeffs: tuple[float, ...]

    def __post_init__(self):
        centers = tuple(float(x) for x in self.centers)
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != len(centers) + 1:
            raise ValueError(
                f"need {len(centers) + 1} coefficients for {len(centers)} centers, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, z):
        value = self.coeffs[-1]
        for c, t in zip(self.coeffs[-2::-1], self.centers[::-1]):
            value = c + (z - t) * value
        return value


@dataclass(frozen=True)
class PowerPoly:
    """Power form, ``coeffs[k]`` multiplies x**k. The zero polynomial is (0.0,)."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = [float(c) for c in self.coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0.0]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        if self.coeffs == (0.0,):
            return -1
        return len(self.coeffs) - 1

    def __call__(self, z):
        value = self.coeffs[-1] * np.ones_like(z) if isinstance(z, np.ndarray) else self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            value = value * z + c
        return value

    def derivative(self, m: int = 1) -> "PowerPoly":
        c = list(self.coeffs)
        for _ in range(m):
            c = [k * c[k] for k in range(1, len(c))] or [0.0]
        return PowerPoly(tuple(c))

    def __mul__(self, other: "PowerPoly") -> "PowerPoly":
        return PowerPoly(tuple(np.convolve(self.coeffs, other.coeffs)))

    def __add__(self, other: "PowerPoly") -> "PowerPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n)
        a[: len(self.coeffs)] += self.coeffs
        a[: len(other.coeffs)] += other.coeffs
        return PowerPoly(tuple(a))

    def compose_affine(self, a: float, b: float) -> "PowerPoly":
        """Return x -> p(a*x + b)."""
        result = PowerPoly((self.coeffs[-1],))
        lin = PowerPoly((b, a))
        for c in self.coeffs[-2::-1]:
            result = result * lin + PowerPoly((c,))
        return result


@dataclass(frozen=True)
class SmoothFunction:
    """A function known together with its first ``max_order`` derivatives.

    ``func(m, z)`` must return D^m f(z); it should accept numpy arrays (and
    complex arguments where used with contour integration). ``poles`` lists
    known singularities so contour integration can refuse circles around them.
    """

    max_order: int
    func: Callable
    name: str = "f"
    poles: tuple = ()

    def eval(self, m: int, z):
        if m < 0:
            raise ValueError("derivative order must be nonnegative")
        if m > self.max_order:
            raise ValueError(
                f"{self.name}: derivative of order {m} requested, "
                f"only {self.max_order} available"
            )
        return self.func(m, z)

    def __call__(self, z):
        return self.eval(0, z)


def newton_weight(t, i: int, z):
    """w_i(z) = (z - t_1)...(z - t_i); w_0 = 1."""
    t = t.nodes if isinstance(t, NodeSequence) else tuple(t)
    if i < 0 or i > len(t):
        raise IndexError(f"Newton weight index {i} out of range 0..{len(t)}")
    value = 1.0
    for x in t[:i]:
        value = value * (z - x)
    return value


def cluster_nodes(raw: Sequence[float], tol: float = 0.0) -> NodeSequence:
    """Sort ascending and merge nodes lying within ``tol`` of their neighbour.

    Chains are transitive: every member is replaced by the value of the
    chain's first (smallest) node. With ``tol == 0`` only equal floats merge.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    xs = sorted(float(x) for x in raw)
    if not xs:
        raise ValueError("empty node sequence")
    out = [xs[0]]
    for prev, x in zip(xs, xs[1:]):
        out.append(out[-1] if x - prev <= tol else x)
    return NodeSequence(tuple(out))


def sample_function(f: SmoothFunction, t) -> HermiteDataset:
    t = as_nodes(t)
    need = max(t.mult_index)
    if need > f.max_order:
        raise ValueError(
            f"{f.name}: nodes need derivatives up to order {need}, "
            f"only {f.max_order} available"
        )
    values = tuple(float(f.eval(mu, x)) for x, mu in zip(t.nodes, t.mult_index))
    return HermiteDataset(t, values)
