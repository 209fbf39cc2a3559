"""Bidiagonal difference-quotient matrices and the Leibniz product rule."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import HermiteDataset, PowerPoly, as_nodes
from .ddtable import build_table


@dataclass(frozen=True)
class OpitzMatrix:
    """Lower bidiagonal: nodes on the diagonal, ones just below it."""

    diag: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(np.ones(self.n - 1), -1)


def opitz_matrix(t) -> OpitzMatrix:
    return OpitzMatrix(as_nodes(t).nodes)


def matrix_polynomial(p: PowerPoly, A: OpitzMatrix) -> np.ndarray:
    """p(A) by Horner's scheme; entry (i, j) is Delta(t_j..t_i) p for j <= i."""
    a = A.dense()
    eye = np.eye(A.n)
    result = p.coeffs[-1] * eye
    for c in p.coeffs[-2::-1]:
        result = result @ a + c * eye
    return result


def leibniz_dd(t, p_data: HermiteDataset, q_data: HermiteDataset) -> float:
    """Delta(t)(pq) = sum_j Delta(t_j..t_n) p * Delta(t_1..t_j) q."""
    t = as_nodes(t)
    if p_data.nodes != t or q_data.nodes != t:
        raise ValueError("datasets must share the node sequence")
    tp, tq = build_table(p_data), build_table(q_data)
    n = len(t)
    return sum(tp[j, n - 1] * tq[0, j] for j in range(n))


def monomial_dd(t, k: int) -> float:
    """Delta(t_1..t_n) x**k = h_{k-n+1}(t_1, ..., t_n), 0 when k < n-1.

    h_m is the complete homogeneous symmetric polynomial of degree m.
    """
    t = as_nodes(t).nodes
    m = k - len(t) + 1
    if m < 0:
        return 0.0
    # h[r] over the variables added so far; adding x: h[r] += x * h[r-1]
    h = np.zeros(m + 1)
    h[0] = 1.0
    for x in t:
        for r in range(1, m + 1):
            h[r] += x * h[r - 1]
    return float(h[m])
