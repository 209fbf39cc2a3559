"""Acceptance criteria, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion with the worst deviation measured.
"""

import itertools
import math

import numpy as np
import pytest

from divdiff.analysis import (
    bspline_eval,
    bspline_integral,
    floater_expansion,
    hopf_anchor,
    mean_value_check,
    mean_value_holds,
    peano_dd,
)
from divdiff.core import HermiteDataset, NewtonPoly, NodeSequence, PowerPoly, sample_function
from divdiff.ddtable import build_table, dd, divided_difference, hermite_interpolant
from divdiff.functions import exp, polynomial, power, recip, sin
from divdiff.identities import (
    apply_functional,
    chakalov_weights,
    chebyshev_extrema,
    functional_norm,
    reciprocal_dd,
)
from divdiff.newton import change_basis, derivative_at, horner_eval
from divdiff.opitz import leibniz_dd, matrix_polynomial, monomial_dd, opitz_matrix
from divdiff.randgen import random_increasing, random_nodes, random_poly, random_sites
from divdiff.verify import five_way, product_data, random_sigma, refinement_errors, rel

from oracles import complete_homogeneous


def note(measured, name, value):
    measured.append(f"{name}={value:.2e}")


@pytest.mark.criterion(1, "reciprocal closed form, three paths, rel 1e-14")
def test_ac01_reciprocal(measured):
    t = NodeSequence((1.0, 2.0, 4.0))
    values = {
        "table": dd(recip(), t.nodes),
        "chakalov": apply_functional(chakalov_weights(t), recip()),
        "closed": reciprocal_dd(t),
    }
    worst = max(abs(v - 0.125) / 0.125 for v in values.values())
    note(measured, "worst_rel", worst)
    assert worst <= 1e-14, values


@pytest.mark.criterion(2, "norm equality at Chebyshev extrema, lower bound on 100 sets")
def test_ac02_erdos_turan(measured):
    worst = max(abs(functional_norm(chebyshev_extrema(n)) / 2 ** (n - 2) - 1) for n in range(2, 9))
    note(measured, "worst_rel", worst)
    assert worst <= 1e-10
    rng = np.random.default_rng(202)
    margin = math.inf
    for _ in range(100):
        n = int(rng.integers(2, 9))
        margin = min(margin, functional_norm(random_increasing(rng, n)) / 2 ** (n - 2) - 1)
    note(measured, "min_margin", margin)
    assert margin >= 0


@pytest.mark.criterion(3, "Opitz matrix polynomial equals the table, 50 cases, rel 1e-10")
def test_ac03_opitz(measured):
    rng = np.random.default_rng(303)
    worst = 0.0
    for case in range(50):
        t = random_nodes(rng, int(rng.integers(1, 9)), confluent=case % 2 == 1, lo=-1, hi=1)
        p = random_poly(rng, int(rng.integers(0, 11)))
        n = len(t)
        table = build_table(sample_function(polynomial(p), t))
        expected = np.zeros((n, n))
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            expected[j, i] = table[i, j]
        worst = max(worst, rel(matrix_polynomial(p, opitz_matrix(t)), expected))
    note(measured, "worst_rel", worst)
    assert worst <= 1e-10


@pytest.mark.criterion(4, "Leibniz rule equals the product's difference, 50 cases, rel 1e-10")
def test_ac04_leibniz(measured):
    rng = np.random.default_rng(404)
    worst = 0.0
    for case in range(50):
        t = random_nodes(rng, int(rng.integers(1, 8)), confluent=case % 2 == 1, lo=-1, hi=1)
        p, q = random_poly(rng, int(rng.integers(0, 6))), random_poly(rng, int(rng.integers(0, 6)))
        got = leibniz_dd(t, sample_function(polynomial(p), t), sample_function(polynomial(q), t))
        worst = max(worst, rel(got, divided_difference(product_data(p, q, t))))
    note(measured, "worst_rel", worst)
    assert worst <= 1e-10


@pytest.mark.criterion(5, "five representations agree pairwise for exp, abs 1e-8")
def test_ac05_five_way(measured):
    worst = 0.0
    for nodes, expected_methods in (((0.0, 0.5, 1.0), 5), ((0.0, 0.0, 1.0), 4)):
        values = five_way(exp(), NodeSequence(nodes))
        assert len(values) == expected_methods
        worst = max(worst, max(abs(a - b) for a, b in itertools.combinations(values.values(), 2)))
    note(measured, "worst_abs", worst)
    assert worst <= 1e-8


@pytest.mark.criterion(6, "Peano kernel identity for x^4 on (0,1,3), unit integral, nonnegativity")
def test_ac06_peano_bspline(measured):
    knots = (0.0, 1.0, 3.0)
    f = power(4)
    err = abs(peano_dd(f, knots) - dd(f, knots))
    note(measured, "peano_abs", err)
    assert err <= 1e-9
    ierr = abs(bspline_integral(knots) - 1)
    note(measured, "integral_abs", ierr)
    assert ierr <= 1e-10
    low = min(bspline_eval(x, knots) for x in np.linspace(0.0, 3.0, 1001))
    note(measured, "min_M", low)
    assert low >= 0


@pytest.mark.criterion(7, "Hermite conditions on 50 clustered datasets, rel 1e-10")
def test_ac07_hermite(measured):
    rng = np.random.default_rng(707)
    worst = 0.0
    for _ in range(50):
        t = random_nodes(rng, int(rng.integers(1, 8)), confluent=True, max_mult=3)
        y = rng.uniform(-1, 1, size=len(t))
        r = hermite_interpolant(HermiteDataset(t, tuple(y)))
        got = [derivative_at(r, x, mu) for x, mu in zip(t.nodes, t.mult_index)]
        worst = max(worst, rel(got, y))
    note(measured, "worst_rel", worst)
    assert worst <= 1e-10


@pytest.mark.criterion(8, "Floater expansion (both error forms) rel 1e-9, Hopf anchor 1e-11")
def test_ac08_floater_hopf(measured):
    rng = np.random.default_rng(808)
    f = exp()
    worst = worst_hopf = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(m, 6))
        s, t = rng.uniform(0, 1, size=m), rng.uniform(0, 1, size=n)
        trunc, el, ef = floater_expansion(s, t, f)
        target = dd(f, s)
        worst = max(worst, rel(trunc + el, target), rel(trunc + ef, target))
        s2, t2 = rng.uniform(0, 1, size=m), rng.uniform(0, 1, size=m)
        worst_hopf = max(worst_hopf, rel(hopf_anchor(s2, t2, f), dd(f, s2) - dd(f, t2)))
    note(measured, "floater_rel", worst)
    note(measured, "hopf_rel", worst_hopf)
    assert worst <= 1e-9
    assert worst_hopf <= 1e-11


@pytest.mark.criterion(9, "refinement weights positive, sum to 1, reconstruct, 30 cases")
def test_ac09_refinement(measured):
    rng = np.random.default_rng(909)
    min_w, sum_err, recon = math.inf, 0.0, 0.0
    for _ in range(30):
        n = int(rng.integers(2, 9))
        t = random_increasing(rng, n)
        lo, s, r = refinement_errors(t, random_sigma(rng, n), rng)
        min_w, sum_err, recon = min(min_w, lo), max(sum_err, s), max(recon, r)
    note(measured, "min_alpha", min_w)
    note(measured, "sum_err", sum_err)
    note(measured, "recon_rel", recon)
    assert min_w > 0
    assert sum_err <= 1e-12
    assert recon <= 1e-10


@pytest.mark.criterion(10, "monomial formula equals the table, k <= 10, n <= 6, rel 1e-10")
def test_ac10_monomial(measured):
    rng = np.random.default_rng(1010)
    worst = worst_exact = 0.0
    for case in range(20):
        t = random_nodes(rng, int(rng.integers(1, 7)), confluent=case % 2 == 1, lo=-1, hi=1)
        for k in range(11):
            got = monomial_dd(t, k)
            worst = max(worst, rel(got, dd(polynomial(PowerPoly((0.0,) * k + (1.0,))), t.nodes)))
            worst_exact = max(worst_exact, rel(got, float(complete_homogeneous(k - len(t) + 1, t.nodes))))
    note(measured, "vs_table", worst)
    note(measured, "vs_exact", worst_exact)
    assert worst <= 1e-10
    assert worst_exact <= 1e-10


@pytest.mark.criterion(11, "mean value bracket on 20 sets, affine covariance rel 1e-10")
def test_ac11_mean_value_affine(measured):
    rng = np.random.default_rng(1111)
    bad = 0
    for case in range(20):
        t = random_nodes(rng, int(rng.integers(1, 6)), confluent=case % 2 == 1, lo=0, hi=3)
        for f in (exp(), sin()):
            bad += not mean_value_holds(*mean_value_check(f, t))
    measured.append(f"bracket_failures={bad}")
    assert bad == 0
    worst = 0.0
    for case in range(20):
        t = random_nodes(rng, int(rng.integers(1, 6)), confluent=case % 2 == 1, lo=-1, hi=1)
        p = random_poly(rng, int(rng.integers(0, 8)))
        a = rng.uniform(0.5, 2) * rng.choice([-1, 1])
        b = rng.uniform(-1, 1)
        lhs = a ** (len(t) - 1) * dd(polynomial(p), [a * x + b for x in t])
        rhs = dd(polynomial(p.compose_affine(a, b)), t.nodes)
        worst = max(worst, rel(lhs, rhs))
    note(measured, "affine_rel", worst)
    assert worst <= 1e-10


@pytest.mark.criterion(12, "nested multiplication and basis change, 50 cases, 1e-11")
def test_ac12_horner_rebase(measured):
    rng = np.random.default_rng(1212)
    worst_hat = worst_rebase = 0.0
    for _ in range(50):
        n = int(rng.integers(1, 8))
        sites = list(rng.permutation(random_sites(rng, n)))
        z, centers = float(sites[0]), tuple(sites[1:])
        p = NewtonPoly(centers, tuple(rng.uniform(-1, 1, size=n)))
        _, hatc = horner_eval(p, z)
        f = polynomial(p)
        fresh = [dd(f, (z,) + centers[:j]) for j in range(n)]
        worst_hat = max(worst_hat, rel(hatc, fresh))
        q = change_basis(p, rng.uniform(-2, 2, size=n - 1))
        zs = rng.uniform(-2, 2, size=10)
        worst_rebase = max(worst_rebase, rel([q(x) for x in zs], [p(x) for x in zs]))
    note(measured, "hatc_rel", worst_hat)
    note(measured, "rebase_rel", worst_rebase)
    assert worst_hat <= 1e-11
    assert worst_rebase <= 1e-11
