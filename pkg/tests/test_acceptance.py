"""End-to-end acceptance suite.

Each test covers one numbered acceptance criterion and prints a single
PASS/FAIL line (run with -s to see them) before asserting, so the whole
checklist is visible in one pytest invocation.
"""

import math

import numpy as np
import pytest

from rigs.bounds import chernoff_upper, chung_lu_lower, chung_lu_upper
from rigs.branching import (
    compare_extinction,
    extinction_probability,
    gw_map,
    simulate_gw_batch,
)
from rigs.components import component_sizes, exact_largest_distribution
from rigs.discovery import discover
from rigs.harness import SweepConfig, run_sweep, trial_seed, write_csv
from rigs.model import WeightSpec, build_weights
from rigs.sampler import sample_bipartite

ZETA_C2 = 0.2031878699799799
ZETA_STAR_C2 = 0.4778894920475063


def _report(number, ok, detail):
    print("criterion %s: %s (%s)" % (number, "PASS" if ok else "FAIL", detail))
    assert ok, "criterion %s failed: %s" % (number, detail)


def _uniform(n, c, m):
    return build_weights(WeightSpec(n=n, kind="uniform", c=c, m=m))


def test_criterion_01_exhaustive_oracle_vs_monte_carlo():
    w = _uniform(3, 3 * 2 * 0.25, 2)  # uniform p = 0.5
    assert np.allclose(w.p, 0.5)
    exact = exact_largest_distribution(w).support
    trials = 10**5
    counts = {}
    for seed in range(trials):
        L1 = component_sizes(sample_bipartite(w, seed)).largest
        counts[L1] = counts.get(L1, 0) + 1
    tv = 0.5 * sum(
        abs(exact.get(k, 0.0) - counts.get(k, 0) / trials)
        for k in set(exact) | set(counts)
    )
    _report("01", tv < 0.01, "TV distance %.4g" % tv)


def test_criterion_02a_solver_vs_zeta_large_m():
    sol = extinction_probability(_uniform(10**3, 2.0, 10**6))
    err = abs(sol.rho - ZETA_C2)
    _report("02a", sol.converged and err < 5e-3,
            "rho %.6f vs zeta %.6f, |diff| %.4g" % (sol.rho, ZETA_C2, err))


def test_criterion_02b_solver_vs_zeta_star_linear():
    sol = extinction_probability(_uniform(10**6, 2.0, 10**6))
    err = abs(sol.rho - ZETA_STAR_C2)
    _report("02b", sol.converged and err < 1e-4,
            "rho %.7f vs zeta* %.7f, |diff| %.4g" % (sol.rho, ZETA_STAR_C2, err))


def test_criterion_03_solver_simulator_cross_check():
    n = 10**4
    runs = 10**5
    worst = []
    for c in (1.5, 2.0, 3.0):
        w = _uniform(n, c, n)
        rho = extinction_probability(w).rho
        freq = simulate_gw_batch(w, seed=int(10 * c), runs=runs,
                                 population_cap=10**6,
                                 generation_cap=10**4) / runs
        se = math.sqrt(rho * (1.0 - rho) / runs)
        worst.append(abs(freq - rho) / se)
    _report("03", max(worst) <= 3.0,
            "max |freq - rho| = %.2f standard errors" % max(worst))


def test_criterion_04_giant_component_prediction():
    n = 10**5
    w = _uniform(n, 2.0, n)
    rho = extinction_probability(w).rho
    gaps, l2s = [], []
    for t in range(20):
        s = component_sizes(sample_bipartite(w, trial_seed(404, 0, t)))
        gaps.append(abs(s.largest / n - (1.0 - rho)))
        l2s.append(s.second_largest)
    mean_gap = sum(gaps) / len(gaps)
    bound = 50.0 * math.log(n)
    ok = mean_gap <= 0.02 and max(l2s) <= bound
    _report("04", ok, "mean gap %.4g, max L2 %d (bound %.0f)"
            % (mean_gap, max(l2s), bound))


def test_criterion_05_subcritical_bound():
    n = 10**5
    l1_linear = [
        component_sizes(sample_bipartite(_uniform(n, 0.5, n),
                                         trial_seed(505, 0, t))).largest
        for t in range(20)
    ]
    m_sqrt = round(math.sqrt(n))
    w = _uniform(n, 0.5, m_sqrt)
    l1_sqrt = [
        component_sizes(sample_bipartite(w, trial_seed(505, 1, t))).largest
        for t in range(20)
    ]
    bound_lin = 50.0 * math.log(n)
    bound_sqrt = 50.0 * n * w.p_max * math.log(n)
    ok = max(l1_linear) <= bound_lin and max(l1_sqrt) <= bound_sqrt
    _report("05", ok, "max L1 %d<=%.0f (m=n), %d<=%.0f (m=sqrt n)"
            % (max(l1_linear), bound_lin, max(l1_sqrt), bound_sqrt))


def _median_l1_slope(ns, m_of_n, trials=5):
    logs = []
    for i, n in enumerate(ns):
        w = _uniform(n, 2.0, m_of_n(n))
        meds = [
            component_sizes(sample_bipartite(w, trial_seed(606, i, t))).largest
            for t in range(trials)
        ]
        logs.append(math.log(float(np.median(meds))))
    x = np.log(np.array(ns, dtype=float))
    return float(np.polyfit(x, np.array(logs), 1)[0])


def test_criterion_06_jump_size_scaling():
    ns = (10**4, 10**5, 10**6)
    slope_sqrt = _median_l1_slope(ns, lambda n: round(math.sqrt(n)))
    slope_lin = _median_l1_slope(ns, lambda n: n)
    ok = abs(slope_sqrt - 0.75) <= 0.1 and abs(slope_lin - 1.0) <= 0.05
    _report("06", ok, "slope %.3f (m=sqrt n, want 0.75+-0.1), "
            "%.3f (m=n, want 1.0+-0.05)" % (slope_sqrt, slope_lin))


def _random_dominating_pair(rng, n=100):
    base = list(rng.uniform(0.01, 0.05, size=int(rng.integers(0, 30))))
    k = int(rng.integers(2, 12))
    j = int(rng.integers(1, k))
    b = float(rng.uniform(0.05, 0.12))
    q = base + [b] * k
    p = base + [b * math.sqrt(k / j)] * j
    return (
        build_weights(WeightSpec(n=n, kind="explicit", values=tuple(p))),
        build_weights(WeightSpec(n=n, kind="explicit", values=tuple(q))),
    )


def test_criterion_07_extinction_ordering():
    rng = np.random.default_rng(707)
    violations = 0
    for _ in range(100):
        w_p, w_q = _random_dominating_pair(rng)
        rep = compare_extinction(w_p, w_q)
        assert rep.hypotheses_hold
        if rep.rho_p < rep.rho_q - 1e-9:
            violations += 1
    _report("07", violations == 0, "%d/100 ordering violations" % violations)


def test_criterion_08_discovery_invariants():
    rng = np.random.default_rng(808)
    bad = 0
    for trial in range(1000):
        n = int(rng.integers(2, 1001))
        m = int(rng.integers(1, 8))
        vals = tuple(float(v) for v in rng.uniform(0.0, min(1.0, 3.0 / n),
                                                   size=m))
        w = build_weights(WeightSpec(n=n, kind="explicit", values=vals))
        b = sample_bipartite(w, int(rng.integers(0, 2**62)))
        start = int(rng.integers(0, n))
        t = discover(b, w, start)
        total = 0
        for k, s in enumerate(t.steps, start=1):
            total += s.new_vertex_count
            if total != s.unsaturated_count + k - 1:
                bad += 1
                break
        else:
            sizes = component_sizes(b).sizes
            if t.component_size not in sizes:
                bad += 1
    _report("08", bad == 0, "%d/1000 traces violated invariants" % bad)


def test_criterion_09_bound_validity():
    rng = np.random.default_rng(909)
    failures = 0
    # exact binomial tails
    for _ in range(300):
        n = int(rng.integers(1, 31))
        p = float(rng.uniform(0.02, 0.9))
        t = float(rng.uniform(0.5, n))
        tail = sum(
            math.comb(n, k) * p**k * (1 - p) ** (n - k)
            for k in range(n + 1)
            if k >= n * p + t
        )
        if chernoff_upper(n, p, t).bound < tail - 1e-12:
            failures += 1
    # empirical weighted-sum tails
    trials = 10**5
    se = 1.0 / math.sqrt(trials)
    for _ in range(5):
        k = int(rng.integers(3, 12))
        a = rng.uniform(0.1, 1.0, size=k)
        probs = rng.uniform(0.1, 0.9, size=k)
        draws = (rng.random((trials, k)) < probs) @ a
        mean = float(a @ probs)
        norm_sq = float((a * a) @ probs)
        big = float(a.max())
        for lam in (0.5, 1.0, 2.0):
            up = float(np.mean(draws >= mean + lam))
            if chung_lu_upper(norm_sq, big, lam).bound < up - 3 * se:
                failures += 1
            if norm_sq - big * lam / 3.0 > 0:
                lo = float(np.mean(draws <= mean - lam))
                if chung_lu_lower(norm_sq, big, lam).bound < lo - 3 * se:
                    failures += 1
    _report("09", failures == 0, "%d domination failures" % failures)


def test_criterion_10_sweep_determinism(tmp_path):
    cfg = SweepConfig(n=2000, m=2000, c_min=0.5, c_max=2.0, points=4,
                      trials=8, master_seed=10)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(run_sweep(cfg, workers=1), a)
    write_csv(run_sweep(cfg, workers=4), b)
    same = a.read_bytes() == b.read_bytes()
    _report("10", same, "1-worker vs 4-worker CSV byte-identical: %s" % same)


def test_criterion_11_gw_map_numerics():
    rng = np.random.default_rng(1111)
    h = 1e-7
    worst = 0.0
    specs = []
    for _ in range(49):
        n = int(rng.integers(10, 10**5))
        m = int(rng.integers(1, 50))
        specs.append(build_weights(WeightSpec(
            n=n, kind="explicit",
            values=tuple(float(v) for v in rng.uniform(0.0, 1.0 / math.sqrt(n),
                                                       size=m)),
        )))
    # extreme case: a million tiny attributes must not underflow
    extreme = build_weights(WeightSpec(n=10**6, kind="explicit",
                                       values=(1e-6,) * 10**6))
    specs.append(extreme)
    underflow = gw_map(extreme, 0.0) <= 0.0
    for w in specs:
        fd = (gw_map(w, 1.0) - gw_map(w, 1.0 - h)) / h
        worst = max(worst, abs(fd - w.c))
    ok = worst <= 1e-3 and not underflow
    _report("11", ok, "max |d/dx gw_map(1) - c| = %.2g, underflow=%s"
            % (worst, underflow))
