"""Randomized identity suite run by ``divdiff verify``.

Every check is an independent second route to a quantity the library
computes, returning ``(worst_error, tolerance)``. Errors are relative to
the magnitude of the compared object (its max-norm, floored at 1), so
exact zeros do not produce infinite relative errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import analysis, identities, newton, opitz
from .core import HermiteDataset, NewtonPoly, NodeSequence, PowerPoly, newton_weight, sample_function
from .ddtable import build_table, dd, divided_difference, hermite_interpolant, newton_coeffs
from .functions import cauchy_kernel, exp, polynomial, recip, sin
from .functions import power as power_function
from .randgen import random_increasing, random_nodes, random_poly, random_sites


def rel(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = max(1.0, float(np.max(np.abs(b))) if b.size else 1.0)
    return float(np.max(np.abs(a - b))) / scale


def _poly_data(p: PowerPoly, t: NodeSequence) -> HermiteDataset:
    return sample_function(polynomial(p), t)


def _random_newton(rng, n) -> tuple[NewtonPoly, float]:
    """A Newton form plus an extra point, all n sites separated, centers unordered."""
    sites = rng.permutation(random_sites(rng, n))
    return NewtonPoly(tuple(sites[1:]), tuple(rng.uniform(-1, 1, size=n))), float(sites[0])


def check_permutation_symmetry(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 8))
        t = random_nodes(rng, n)
        f = exp()
        base = dd(f, t.nodes)
        perm = rng.permutation(n)
        raw = [t[i] for i in perm]
        vals = [math.exp(x) for x in raw]
        # table on the permuted (unsorted, distinct) sequence directly
        worst = max(worst, rel(divided_difference(HermiteDataset(NodeSequence(tuple(raw)), vals)), base))
    return worst, 1e-12


def check_annihilation(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 9))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)))
        data = _poly_data(random_poly(rng, n - 2), t)
        worst = max(worst, abs(divided_difference(data)) / max(1.0, max(map(abs, data.values))))
    return worst, 1e-12


def check_normalization(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 9))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        data = sample_function(power_function(n - 1), t)
        worst = max(worst, abs(divided_difference(data) - 1) / max(1.0, max(map(abs, data.values))))
    return worst, 1e-12


def check_hermite_conditions(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 8))
        t = random_nodes(rng, n, confluent=True)
        y = rng.uniform(-1, 1, size=n)
        data = HermiteDataset(t, y)
        r = hermite_interpolant(data)
        got = [newton.derivative_at(r, x, mu) for x, mu in zip(t.nodes, t.mult_index)]
        worst = max(worst, rel(got, y))
    return worst, 1e-10


def check_affine_change(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        p = random_poly(rng, int(rng.integers(0, 9)))
        a = rng.choice([-1, 1]) * rng.uniform(0.5, 2)
        b = rng.uniform(-1, 1)
        lhs = a ** (n - 1) * dd(polynomial(p), [a * x + b for x in t])
        rhs = dd(polynomial(p.compose_affine(a, b)), t.nodes)
        worst = max(worst, rel(lhs, rhs))
    return worst, 1e-10


def check_horner_hatc(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 8))
        p, z = _random_newton(rng, n)
        f = polynomial(p)
        _, hatc = newton.horner_eval(p, z)
        fresh = [dd(f, (z,) + p.centers[:j]) for j in range(n)]
        worst = max(worst, rel(hatc, fresh))
    return worst, 1e-11


def check_basis_round_trip(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 8))
        p, _ = _random_newton(rng, n)
        q = newton.change_basis(newton.change_basis(p, rng.uniform(-2, 2, size=n - 1)), p.centers)
        zs = rng.uniform(-2, 2, size=20)
        worst = max(worst, rel([q(z) for z in zs], [p(z) for z in zs]))
    return worst, 1e-11


def check_basic_identity(rng, trials):
    worst = 0.0
    for _ in range(trials):
        deg = int(rng.integers(1, 7))
        p = random_poly(rng, deg)
        t = random_nodes(rng, deg + 1)
        pn = NewtonPoly(t.nodes[:-1], tuple(newton_coeffs(_poly_data(p, t))))
        for n in range(1, deg + 1):
            q = polynomial(newton.remainder_poly(pn, t.nodes[:n]))
            for j in range(n + 1, deg + 2):
                worst = max(worst, rel(dd(q, t.nodes[n:j]), dd(polynomial(p), t.nodes[:j])))
    return worst, 1e-10


def iterated_quotient(f, nodes) -> float:
    """Delta(t_1..t_j) f by nesting first-order quotients in the appended argument."""
    nodes = list(nodes)

    def g(level, z):
        if level == 0:
            return f(z)
        a = nodes[level - 1]
        return (g(level - 1, z) - g(level - 1, a)) / (z - a)

    return g(len(nodes) - 1, nodes[-1])


def check_iterated_quotients(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        t = random_nodes(rng, n)
        p = random_poly(rng, int(rng.integers(0, 9)))
        worst = max(worst, rel(iterated_quotient(p, t.nodes), dd(polynomial(p), t.nodes)))
    return worst, 1e-10


def _table_matrix(data: HermiteDataset) -> np.ndarray:
    return build_table(data).entries.T


def check_opitz_table(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 9))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        p = random_poly(rng, int(rng.integers(0, 11)))
        got = opitz.matrix_polynomial(p, opitz.opitz_matrix(t))
        worst = max(worst, rel(got, np.tril(_table_matrix(_poly_data(p, t)))))
    return worst, 1e-10


def check_ring_homomorphism(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 8))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        p, q = random_poly(rng, int(rng.integers(0, 6))), random_poly(rng, int(rng.integers(0, 6)))
        a = opitz.opitz_matrix(t)
        worst = max(worst, rel(opitz.matrix_polynomial(p * q, a),
                               opitz.matrix_polynomial(p, a) @ opitz.matrix_polynomial(q, a)))
    return worst, 1e-10


def check_leibniz(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 8))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        p, q = random_poly(rng, int(rng.integers(0, 6))), random_poly(rng, int(rng.integers(0, 6)))
        got = opitz.leibniz_dd(t, _poly_data(p, t), _poly_data(q, t))
        worst = max(worst, rel(got, divided_difference(product_data(p, q, t))))
    return worst, 1e-10


def product_data(p: PowerPoly, q: PowerPoly, t: NodeSequence) -> HermiteDataset:
    """Hermite data of p*q, derivatives by the univariate Leibniz rule."""
    fp, fq = polynomial(p), polynomial(q)
    values = []
    for x, mu in zip(t.nodes, t.mult_index):
        values.append(sum(math.comb(mu, r) * fp.eval(r, x) * fq.eval(mu - r, x) for r in range(mu + 1)))
    return HermiteDataset(t, values)


def check_monomial(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=-1, hi=1)
        for k in range(11):
            oracle = dd(polynomial(PowerPoly((0.0,) * k + (1.0,))), t.nodes)
            worst = max(worst, rel(opitz.monomial_dd(t, k), oracle))
    return worst, 1e-10


def refinement_errors(t: NodeSequence, sigma, rng) -> tuple[float, float, float]:
    """(min weight, |sum - 1|, reconstruction error) for one refinement."""
    k = len(sigma)
    alpha = identities.refine_coeffs(t, sigma)
    weights = [a for _, a in alpha]
    recon = 0.0
    for _ in range(5):
        p = polynomial(random_poly(rng, int(rng.integers(0, k + 3))))
        lhs = dd(p, [t[i] for i in sigma])
        rhs = sum(a * dd(p, t.nodes[j : j + k]) for j, a in alpha)
        recon = max(recon, rel(rhs, lhs))
    return min(weights), abs(sum(weights) - 1), recon


def random_sigma(rng, n) -> list[int]:
    k = int(rng.integers(1, n + 1))
    return sorted(rng.choice(n, size=k, replace=False).tolist())


def check_refinement(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 8))
        t = random_nodes(rng, n)
        lo, s, r = refinement_errors(t, random_sigma(rng, n), rng)
        if lo <= 0 or s > 1e-12:
            return math.inf, 1e-10
        worst = max(worst, r)
    return worst, 1e-10


def check_chakalov(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        t = random_nodes(rng, n, confluent=True, lo=-1, hi=1)
        F = identities.chakalov_weights(t)
        for _ in range(3):
            f = polynomial(random_poly(rng, int(rng.integers(0, n + 3))))
            worst = max(worst, rel(identities.apply_functional(F, f), dd(f, t.nodes)))
        worst = max(worst, rel(identities.apply_functional(F, exp()), dd(exp(), t.nodes)))
    return worst, 1e-10


def check_lagrange(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_nodes(rng, int(rng.integers(1, 8)))
        F = identities.chakalov_weights(t)
        worst = max(worst, rel(identities.lagrange_weights(t), [a for _, _, a in F.terms]))
    return worst, 1e-12


def check_reciprocal(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_nodes(rng, int(rng.integers(1, 6)), confluent=bool(rng.integers(2)), lo=0.5, hi=3)
        worst = max(worst, rel(identities.reciprocal_dd(t), dd(recip(), t.nodes)))
    return worst, 1e-12


def check_cauchy_kernel(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_nodes(rng, int(rng.integers(1, 6)), confluent=bool(rng.integers(2)), lo=-1, hi=1)
        z = rng.uniform(1.5, 3) * rng.choice([-1, 1])
        got = identities.cauchy_kernel_dd(t, z)
        worst = max(worst, abs(got * newton_weight(t, len(t), z) - 1), rel(got, dd(cauchy_kernel(z), t.nodes)))
    return worst, 1e-12


def check_erdos_turan(rng, trials):
    worst = 0.0
    for n in range(2, 9):
        worst = max(worst, abs(identities.functional_norm(identities.chebyshev_extrema(n)) / 2 ** (n - 2) - 1))
    for _ in range(trials):
        n = int(rng.integers(2, 9))
        if identities.functional_norm(random_increasing(rng, n)) < 2 ** (n - 2) * (1 - 1e-12):
            worst = 1.0
    return worst, 1e-10


def five_way(f, t: NodeSequence, cfg=analysis.QuadratureConfig()) -> dict[str, float]:
    out = {
        "table": dd(f, t.nodes),
        "chakalov": identities.apply_functional(identities.chakalov_weights(t), f),
        "genocchi": analysis.genocchi_dd(f, t, cfg),
        "contour": analysis.contour_dd(f, t, cfg),
    }
    if max(t.mult_index) == 0:
        out["determinant"] = analysis.determinant_dd(t, [f(x) for x in t])
    return out


def check_five_way(rng, trials):
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 6))
        t = random_nodes(rng, n, confluent=bool(rng.integers(2)), lo=0, hi=2)
        vals = list(five_way(exp(), t).values())
        worst = max(worst, max(vals) - min(vals))
    return worst, 1e-8


def check_bspline(rng, trials):
    worst = 0.0
    for _ in range(trials):
        k = int(rng.integers(1, 5))
        knots = random_nodes(rng, k + 1, confluent=bool(rng.integers(2)), max_mult=k, lo=0, hi=3)
        if knots[0] == knots[-1]:
            continue
        worst = max(worst, abs(analysis.bspline_integral(knots) - 1))
        for x in np.linspace(knots[0] - 0.5, knots[-1] + 0.5, 101):
            try:
                m = analysis.bspline_eval(x, knots)
            except ValueError:
                continue
            if m < -1e-12 or (not knots[0] <= x <= knots[-1] and m != 0):
                worst = 1.0
    return worst, 1e-10


def check_peano(rng, trials):
    worst = 0.0
    for _ in range(trials):
        k = int(rng.integers(1, 5))
        knots = random_nodes(rng, k + 1, lo=0, hi=3)
        for f in (exp(), polynomial(random_poly(rng, k + 2))):
            worst = max(worst, rel(analysis.peano_dd(f, knots), dd(f, knots.nodes)))
    return worst, 1e-9


def check_frobenius(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_nodes(rng, int(rng.integers(1, 7)), confluent=bool(rng.integers(2)), lo=-1, hi=1)
        x, y = rng.uniform(-3, 3, size=2)
        lhs, rhs = analysis.frobenius_identity(t, x, y)
        worst = max(worst, rel(lhs, rhs))
    return worst, 1e-12


def check_mean_value(rng, trials):
    bad = 0
    for _ in range(trials):
        t = random_nodes(rng, int(rng.integers(1, 6)), confluent=bool(rng.integers(2)), lo=0, hi=3)
        for f in (exp(), sin()):
            if not analysis.mean_value_holds(*analysis.mean_value_check(f, t)):
                bad += 1
    return float(bad), 0.0


def check_floater(rng, trials):
    worst = 0.0
    f = exp()
    for _ in range(trials):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(m, 6))
        s, t = rng.uniform(0, 1, size=m), rng.uniform(0, 1, size=n)
        trunc, el, ef = analysis.floater_expansion(s, t, f)
        target = dd(f, s)
        worst = max(worst, rel(trunc + el, target), rel(trunc + ef, target))
    return worst, 1e-9


def check_hopf(rng, trials):
    worst = 0.0
    f = exp()
    for _ in range(trials):
        m = int(rng.integers(1, 5))
        s, t = rng.uniform(0, 1, size=m), rng.uniform(0, 1, size=m)
        worst = max(worst, rel(analysis.hopf_anchor(s, t, f), dd(f, s) - dd(f, t)))
    return worst, 1e-11


def continuity_trend_holds(p, t: NodeSequence, u) -> bool:
    """Perturbation effect shrinks over eps = 1e-2, 1e-4, 1e-6 and is <= 1e-8 at 1e-10."""
    base = dd(p, t.nodes)
    diffs = [abs(dd(p, np.array(t.nodes) + eps * np.asarray(u)) - base) for eps in (1e-2, 1e-4, 1e-6, 1e-10)]
    floor = 1e-13  # below this the differences are roundoff
    return diffs[0] + floor >= diffs[1] and diffs[1] + floor >= diffs[2] and diffs[3] <= 1e-8


def check_continuity(rng, trials):
    bad = 0
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        t = random_nodes(rng, n, lo=-1, hi=1)
        p = polynomial(random_poly(rng, int(rng.integers(n - 1, 9))))
        u = rng.uniform(-1, 1, size=n)
        if not continuity_trend_holds(p, t, u):
            bad += 1
    return float(bad), 0.0


def check_dd_derivative(rng, trials):
    worst = 0.0
    h = 1e-5
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        p, _ = _random_newton(rng, n)
        sites = rng.permutation(random_sites(rng, int(rng.integers(2, n + 1)), lo=-1, hi=1))
        t, z = tuple(sites[1:]), float(sites[0])
        f = polynomial(p)
        fd = (dd(f, t + (z + h,)) - dd(f, t + (z - h,))) / (2 * h)
        worst = max(worst, abs(newton.extended_dd_derivative(p, t, 1, z) - fd))
        worst = max(worst, rel(newton.extended_dd_derivative(p, t, 0, z),
                               newton.remainder_poly(p, t)(z)))
    return worst, 1e-6


def check_interlacing(rng, trials):
    worst = 0.0
    for _ in range(trials):
        k = int(rng.integers(1, 5))
        tau = random_nodes(rng, k + 1, confluent=bool(rng.integers(2)), lo=0, hi=2)
        p = random_poly(rng, k + 1)
        f = polynomial(p)
        sigma = analysis.interlacing_sites(f, tau)
        if sigma is None:
            continue
        df = polynomial(p.derivative())
        worst = max(worst, rel(k * dd(f, tau.nodes), dd(df, sigma)))
    return worst, 1e-8


CHECKS: dict[str, Callable] = {
    "permutation_symmetry": check_permutation_symmetry,
    "annihilation": check_annihilation,
    "normalization": check_normalization,
    "hermite_conditions": check_hermite_conditions,
    "affine_change_of_variables": check_affine_change,
    "horner_hatc_identity": check_horner_hatc,
    "basis_change_round_trip": check_basis_round_trip,
    "basic_dd_identity": check_basic_identity,
    "iterated_quotients": check_iterated_quotients,
    "continuity": check_continuity,
    "dd_derivative": check_dd_derivative,
    "opitz_equals_table": check_opitz_table,
    "ring_homomorphism": check_ring_homomorphism,
    "leibniz": check_leibniz,
    "monomial_formula": check_monomial,
    "refinement": check_refinement,
    "chakalov_functional": check_chakalov,
    "lagrange_weights": check_lagrange,
    "reciprocal_closed_form": check_reciprocal,
    "cauchy_kernel": check_cauchy_kernel,
    "erdos_turan_bound": check_erdos_turan,
    "five_way_agreement": check_five_way,
    "bspline_positivity_unit_integral": check_bspline,
    "peano_kernel": check_peano,
    "frobenius_identity": check_frobenius,
    "mean_value": check_mean_value,
    "floater_expansion": check_floater,
    "hopf_anchor": check_hopf,
    "interlacing": check_interlacing,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    worst: float
    tol: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.worst <= self.tol


def run_suite(seed: int = 1, trials: int = 20, checks: dict[str, Callable] | None = None) -> list[CheckResult]:
    checks = CHECKS if checks is None else checks
    results = []
    for idx, (name, fn) in enumerate(checks.items()):
        rng = np.random.default_rng([seed, idx])
        try:
            worst, tol = fn(rng, trials)
            results.append(CheckResult(name, float(worst), float(tol)))
        except Exception as exc:  # a crashing check is a failing check
            results.append(CheckResult(name, math.inf, 0.0, f"{type(exc).__name__}: {exc}"))
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = r.error if r.error else f"worst={r.worst:.3e} tol={r.tol:.0e}"
        lines.append(f"{status}  {r.name:<34} {detail}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines)
