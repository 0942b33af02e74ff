"""Extinction of the (m+1)-type branching process tied to (n, p).

A type-0 (vertex-like) individual spawns one type-i (attribute-like)
child with probability p_i for each i; a type-i individual spawns
Binomial(n, p_i) type-0 children.  Extinction probability is the least
fixed point in [0, 1] of

    g(x) = prod_i [1 - p_i * (1 - (1 - p_i * (1 - x))^n)]

which we find by monotone fixed-point iteration from 0.  The uniform
case has closed-form limits in three regimes (small m, large m, linear),
each reduced to a one-dimensional bisection.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._kernels import derive_stream
from .model import DEFAULT_EPS_C

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10**6


@dataclass(frozen=True)
class ExtinctionSolution:
    rho: float
    iterations: int
    residual: float  # |g(rho) - rho|
    converged: bool
    critical_band: bool  # c in (1, 1 + eps_c]: rho pinned to 1

    def to_json(self):
        return {
            "rho": self.rho,
            "iterations": self.iterations,
            "residual": self.residual,
            "converged": self.converged,
            "critical_band": self.critical_band,
        }


@dataclass(frozen=True)
class GwOutcome:
    status: str  # "extinct" | "survived_to_cap"
    total_type0_progeny: int
    generations: int


class UniformRegime(enum.Enum):
    SMALL_M = "small_m"  # m = o(n)
    LARGE_M = "large_m"  # n = o(m)
    LINEAR = "linear"  # m = Theta(n)


@dataclass(frozen=True)
class ComparisonReport:
    hypotheses_hold: bool
    rho_p: float
    rho_q: float
    ordering_respected: bool


def _log_gw_map(p, n, x):
    """log g(x), all factors through log1p to survive m = 10^7."""
    with np.errstate(divide="ignore"):
        inner = np.exp(n * np.log1p(-p * (1.0 - x)))
        return float(np.sum(np.log1p(-p * (1.0 - inner))))


def _log_gw_map_uniform(pi, n, m, x):
    inner = math.exp(n * math.log1p(-pi * (1.0 - x)))
    if pi * (1.0 - inner) >= 1.0:
        return -math.inf
    return m * math.log1p(-pi * (1.0 - inner))


def gw_map(w, x):
    """One application of the offspring generating map g at x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1], got %r" % (x,))
    return math.exp(_log_gw_map(w.p, w.n, x))


def extinction_probability(
    w, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, eps_c=DEFAULT_EPS_C
):
    """Least fixed point of g, i.e. the extinction probability.

    At or below criticality 1 + eps_c the fixed point in [0, 1) does not
    exist (or sits within O(eps_c) of 1) and rho = 1 is returned without
    iterating; critical_band flags the (1, 1 + eps_c] case.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be > 0 and max_iter >= 1")
    c = w.c
    if c <= 1.0 + eps_c:
        return ExtinctionSolution(
            rho=1.0, iterations=0, residual=0.0, converged=True,
            critical_band=c > 1.0,
        )
    p = w.p
    uniform_pi = float(p[0]) if p.min() == p.max() else None
    n, m = w.n, len(p)

    if uniform_pi is not None:
        g = lambda x: math.exp(_log_gw_map_uniform(uniform_pi, n, m, x))
    else:
        g = lambda x: math.exp(_log_gw_map(p, n, x))

    x = 0.0
    for it in range(1, max_iter + 1):
        x_next = g(x)
        # iteration from 0 is monotone nondecreasing and bounded by 1
        assert x_next >= x - 1e-15 and x_next <= 1.0
        if abs(x_next - x) <= tol:
            return ExtinctionSolution(
                rho=x_next, iterations=it, residual=abs(x_next - x),
                converged=True, critical_band=False,
            )
        x = x_next
    return ExtinctionSolution(
        rho=x, iterations=max_iter, residual=abs(g(x) - x),
        converged=False, critical_band=False,
    )


def _bisect(f, lo=1e-15, hi=1.0 - 1e-15, iterations=200):
    f_lo = f(lo)
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (f_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def zeta(c):
    """Root in (0, 1) of exp(c * (x - 1)) = x."""
    if c <= 1:
        raise ValueError("zeta requires c > 1, got %r" % (c,))
    return _bisect(lambda x: math.exp(c * (x - 1.0)) - x)


def zeta_star(np_, mp):
    """Root in (0, 1) of exp(mp * (exp(np * (x - 1)) - 1)) = x."""
    if np_ * mp <= 1:
        raise ValueError("zeta_star requires np * mp > 1")
    return _bisect(lambda x: math.exp(mp * (math.exp(np_ * (x - 1.0)) - 1.0)) - x)


def uniform_extinction(regime, n, m, c):
    """Closed-form limiting extinction probability, uniform p = sqrt(c/(m n))."""
    if c <= 1:
        raise ValueError("uniform_extinction requires c > 1, got %r" % (c,))
    p = math.sqrt(c / (m * n))
    if regime == UniformRegime.SMALL_M:
        if m * p >= 1.0:
            raise ValueError(
                "small-m closed form needs m * p < 1, got m * p = %r" % (m * p,)
            )
        return 1.0 - (1.0 - zeta(c)) * m * p
    if regime == UniformRegime.LARGE_M:
        return zeta(c)
    if regime == UniformRegime.LINEAR:
        return zeta_star(n * p, m * p)
    raise ValueError("unknown regime %r" % (regime,))


def _value_groups(p):
    vals, counts = np.unique(np.asarray(p, dtype=np.float64), return_counts=True)
    keep = vals > 0.0
    return vals[keep], counts[keep]


def _run_gw(vals, counts, n, rng, population_cap, generation_cap):
    z = 1
    total0 = 1
    generations = 1
    while True:
        if z >= population_cap or generations >= generation_cap:
            return GwOutcome(
                status="survived_to_cap", total_type0_progeny=total0,
                generations=generations,
            )
        z_next = 0
        for v, cnt in zip(vals, counts):
            # attribute children of this generation's type-0 individuals,
            # aggregated as counts per distinct probability value
            k = int(rng.binomial(z * int(cnt), v))
            if k:
                z_next += int(rng.binomial(k * n, v))
        if z_next == 0:
            return GwOutcome(
                status="extinct", total_type0_progeny=total0,
                generations=generations,
            )
        total0 += z_next
        z = z_next
        generations += 1


def simulate_gw(w, seed, population_cap=10**6, generation_cap=10**4):
    """Simulate one run of the (m+1)-type process from a single type-0 root."""
    if population_cap < 1 or generation_cap < 1:
        raise ValueError("caps must be >= 1")
    vals, counts = _value_groups(w.p)
    rng = np.random.Generator(np.random.PCG64(int(seed) & (2**64 - 1)))
    return _run_gw(vals, counts, w.n, rng, population_cap, generation_cap)


def simulate_gw_batch(w, seed, runs, population_cap=10**6, generation_cap=10**4):
    """Run `runs` independent simulations; returns the number extinct.

    Run r uses the stream seed derive_stream(seed, r).
    """
    vals, counts = _value_groups(w.p)
    extinct = 0
    for r in range(runs):
        rng = np.random.Generator(np.random.PCG64(derive_stream(int(seed), r)))
        out = _run_gw(vals, counts, w.n, rng, population_cap, generation_cap)
        if out.status == "extinct":
            extinct += 1
    return extinct


def _match_multisets(p_sorted, q_sorted):
    """Greedy exact matching of equal entries between two sorted vectors.

    Returns (leftover_p, leftover_q): entries with no equal partner.
    """
    i = j = 0
    left_p, left_q = [], []
    while i < len(p_sorted) and j < len(q_sorted):
        if p_sorted[i] == q_sorted[j]:
            i += 1
            j += 1
        elif p_sorted[i] < q_sorted[j]:
            left_p.append(p_sorted[i])
            i += 1
        else:
            left_q.append(q_sorted[j])
            j += 1
    left_p.extend(p_sorted[i:])
    left_q.extend(q_sorted[j:])
    return left_p, left_q


def compare_extinction(w_p, w_q, tol=1e-9, crit_tol=1e-10):
    """Check the domination hypotheses for (p, q) and, when they hold,
    that the extinction probabilities are ordered rho_p >= rho_q.

    Hypotheses: q's entries embed injectively into p by exact value
    (leftovers of q form the set S), every leftover entry of p dominates
    every entry of S, and the criticalities agree.
    """
    if w_p.n != w_q.n:
        raise ValueError("weight vectors must share n: %d != %d" % (w_p.n, w_q.n))
    left_p, left_q = _match_multisets(sorted(w_p.p), sorted(w_q.p))
    domination = not left_q or not left_p or min(left_p) >= max(left_q)
    injective = len(left_q) <= len(w_q.p)  # always true; S = leftover q entries
    same_crit = abs(w_p.c - w_q.c) <= crit_tol * max(1.0, abs(w_p.c))
    hold = domination and injective and same_crit
    rho_p = extinction_probability(w_p).rho
    rho_q = extinction_probability(w_q).rho
    return ComparisonReport(
        hypotheses_hold=hold,
        rho_p=rho_p,
        rho_q=rho_q,
        ordering_respected=rho_p >= rho_q - tol,
    )
