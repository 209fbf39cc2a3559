"""The divided-difference table and everything read off it.

Indices are 0-based throughout: ``table[i, j]`` is the divided difference at
nodes ``t[i..j]`` (inclusive), for ``i <= j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import HermiteDataset, NewtonPoly, NodeSequence, SmoothFunction, cluster_nodes, sample_function


@dataclass(frozen=True)
class DDTable:
    nodes: NodeSequence
    entries: np.ndarray  # upper triangle used; entries[i, j] for i <= j

    def __getitem__(self, ij):
        i, j = ij
        if not 0 <= i <= j < len(self.nodes):
            raise IndexError(f"table entry ({i}, {j}) out of range")
        return float(self.entries[i, j])

    def __len__(self) -> int:
        return len(self.nodes)

    def rows(self):
        """Yield the columns of the classical table: all entries of order k."""
        n = len(self.nodes)
        for k in range(n):
            yield [float(self.entries[i, i + k]) for i in range(n - k)]


def build_table(data: HermiteDataset) -> DDTable:
    t = data.nodes
    y = data.values
    n = len(t)
    d = np.zeros((n, n))
    for i in range(n):
        d[i, i] = y[t.cluster_start(i)]
    for k in range(1, n):
        for i in range(n - k):
            j = i + k
            # same cluster <=> t_i == t_j for clustered nodes
            if t.mult_index[j] >= k:
                d[i, j] = y[t.cluster_start(i) + k] / math.factorial(k)
            else:
                d[i, j] = (d[i + 1, j] - d[i, j - 1]) / (t[j] - t[i])
    d.setflags(write=False)
    return DDTable(t, d)


def divided_difference(data: HermiteDataset) -> float:
    return build_table(data)[0, len(data) - 1]


def newton_coeffs(data: HermiteDataset) -> list[float]:
    table = build_table(data)
    return [table[0, j] for j in range(len(data))]


def hermite_interpolant(data: HermiteDataset) -> NewtonPoly:
    """Newton form of the polynomial of degree < n matching the Hermite data."""
    return NewtonPoly(data.nodes.nodes[:-1], tuple(newton_coeffs(data)))


def table_diagonal_for_centers(table: DDTable, order) -> list[float]:
    """Newton coefficients for the centers ``t[order[0]], t[order[1]], ...``.

    Every prefix of ``order`` must be a run of consecutive indices; the
    coefficient for prefix ``order[:j]`` is ``table[min, max]`` of that prefix.
    """
    n = len(table)
    order = list(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")
    out = []
    lo = hi = order[0]
    for j, i in enumerate(order):
        lo, hi = min(lo, i), max(hi, i)
        if hi - lo != j:
            raise ValueError(f"prefix {order[: j + 1]} is not consecutive")
        out.append(table[lo, hi])
    return out


def interpolant_for_centers(table: DDTable, order) -> NewtonPoly:
    coeffs = table_diagonal_for_centers(table, order)
    centers = tuple(table.nodes[i] for i in list(order)[:-1])
    return NewtonPoly(centers, tuple(coeffs))


def dd(f: SmoothFunction, nodes) -> float:
    """Divided difference of ``f`` at an arbitrary multiset of nodes.

    Nodes are sorted and exact repeats merged, so ``f`` must supply a
    derivative for every repeat.
    """
    return divided_difference(sample_function(f, cluster_nodes(nodes)))
