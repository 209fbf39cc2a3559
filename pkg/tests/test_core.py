import math
import random

import pytest
from hypothesis import given, strategies as st

from divdiff.core import (
    HermiteDataset,
    NewtonPoly,
    NodeSequence,
    PowerPoly,
    SmoothFunction,
    cluster_nodes,
    newton_weight,
    sample_function,
)
from divdiff.functions import exp, power

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def test_newton_weight_examples():
    t = NodeSequence((1.0, 2.0, 3.0))
    assert newton_weight(t, 0, 5.0) == 1.0
    assert newton_weight(t, 3, 0.0) == (0 - 1) * (0 - 2) * (0 - 3) == -6
    assert newton_weight((1.0, 2.0), 2, 2.0) == 0.0


def test_newton_weight_index_out_of_range():
    with pytest.raises(IndexError):
        newton_weight((1.0, 2.0), 3, 0.0)
    with pytest.raises(IndexError):
        newton_weight((1.0, 2.0), -1, 0.0)


@given(st.lists(finite, min_size=1, max_size=7), finite, st.randoms())
def test_newton_weight_permutation_invariant(t, z, rnd):
    perm = t[:]
    rnd.shuffle(perm)
    a = newton_weight(t, len(t), z)
    b = newton_weight(perm, len(t), z)
    assert a == pytest.approx(b, rel=1e-12, abs=1e-300)


def test_cluster_nodes_examples():
    t = cluster_nodes((2, 1, 1), 0)
    assert t.nodes == (1.0, 1.0, 2.0) and t.mult_index == (0, 1, 0)
    t = cluster_nodes((0, 1e-16, 1), 1e-12)
    assert t.nodes == (0.0, 0.0, 1.0) and t.mult_index == (0, 1, 0)
    t = cluster_nodes((3,), 0)
    assert t.nodes == (3.0,) and t.mult_index == (0,)


def test_cluster_nodes_chains_transitively_to_first_member():
    t = cluster_nodes((0.0, 0.6e-12, 1.2e-12, 5.0), 1e-12)
    assert t.nodes == (0.0, 0.0, 0.0, 5.0)


def test_cluster_nodes_tol_zero_keeps_close_nodes_apart():
    assert cluster_nodes((0.0, 1e-300)).mult_index == (0, 0)


def test_cluster_nodes_errors():
    with pytest.raises(ValueError, match="empty node sequence"):
        cluster_nodes(())
    with pytest.raises(ValueError):
        cluster_nodes((1.0,), -1.0)


@given(st.lists(st.sampled_from([0.0, 0.5, 1.0, 1.0 + 1e-13, 2.0, -3.0]), min_size=1, max_size=10),
       st.sampled_from([0.0, 1e-12, 0.6]))
def test_cluster_nodes_idempotent_and_mu_exact(raw, tol):
    t = cluster_nodes(raw, tol)
    assert cluster_nodes(t.nodes, tol) == t
    assert list(t.nodes) == sorted(t.nodes)
    for j, x in enumerate(t.nodes):
        assert t.mult_index[j] == sum(1 for i in range(j) if t.nodes[i] == x)


def test_node_sequence_validation():
    with pytest.raises(ValueError, match="nodes not clustered"):
        NodeSequence((1.0, 2.0, 1.0))
    with pytest.raises(ValueError, match="empty"):
        NodeSequence(())
    with pytest.raises(ValueError):
        NodeSequence((1.0, math.nan))
    with pytest.raises(ValueError, match="inconsistent"):
        NodeSequence((1.0, 1.0), (0, 0))
    assert NodeSequence((2.0, 2.0, 1.0)).mult_index == (0, 1, 0)


def test_sites():
    assert NodeSequence((0.0, 0.0, 1.0, 2.0, 2.0, 2.0)).sites == [(0.0, 2), (1.0, 1), (2.0, 3)]


def test_sample_function_examples():
    assert sample_function(power(2), NodeSequence((1.0, 3.0))).values == (1.0, 9.0)
    # x^3 at a triple node: (f, Df, D^2 f) at 2 with D = 3x^2, D^2 = 6x
    assert sample_function(power(3), NodeSequence((2.0, 2.0, 2.0))).values == (8.0, 12.0, 12.0)
    assert sample_function(exp(), NodeSequence((0.0, 0.0))).values == (1.0, 1.0)


def test_sample_function_insufficient_order():
    f = SmoothFunction(1, lambda m, z: z, "lin")
    with pytest.raises(ValueError, match="order 2"):
        sample_function(f, NodeSequence((0.0, 0.0, 0.0)))


def test_dataset_from_unsorted_carries_values_stably():
    data = HermiteDataset.from_unsorted((3.0, 1.0, 3.0, 1.0), (30.0, 10.0, 31.0, 11.0))
    assert data.nodes.nodes == (1.0, 1.0, 3.0, 3.0)
    assert data.values == (10.0, 11.0, 30.0, 31.0)


def test_dataset_length_mismatch():
    with pytest.raises(ValueError):
        HermiteDataset(NodeSequence((1.0, 2.0)), (1.0,))


def test_newton_poly_shape_and_call():
    with pytest.raises(ValueError):
        NewtonPoly((1.0,), (1.0,))
    p = NewtonPoly((-1.0, 0.0), (1.0, -1.0, 1.0))  # x^2
    assert [p(z) for z in (-2.0, 0.5, 3.0)] == [4.0, 0.25, 9.0]


def test_power_poly_normalizes_and_multiplies():
    assert PowerPoly((1.0, 2.0, 0.0, 0.0)).coeffs == (1.0, 2.0)
    assert PowerPoly((0.0, 0.0)).coeffs == (0.0,)
    assert PowerPoly(()).degree == -1
    p = PowerPoly((1.0, 1.0)) * PowerPoly((-1.0, 1.0))
    assert p.coeffs == (-1.0, 0.0, 1.0)
    assert PowerPoly((0.0, 0.0, 1.0)).compose_affine(2.0, 1.0).coeffs == (1.0, 4.0, 4.0)
    assert PowerPoly((0.0, 0.0, 0.0, 1.0)).derivative(2).coeffs == (0.0, 6.0)


def test_smooth_function_order_guard():
    f = exp()
    assert f(0.0) == 1.0
    with pytest.raises(ValueError):
        SmoothFunction(0, lambda m, z: z).eval(1, 0.0)
    with pytest.raises(ValueError):
        f.eval(-1, 0.0)


def test_random_permutation_of_weight_list():
    rnd = random.Random(4)
    t = [rnd.uniform(-2, 2) for _ in range(6)]
    for i in range(7):
        perm = t[:i]
        rnd.shuffle(perm)
        assert newton_weight(perm + t[i:], i, 0.3) == pytest.approx(newton_weight(t, i, 0.3), rel=1e-13)
