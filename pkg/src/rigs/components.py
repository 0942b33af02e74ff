"""Connected-component statistics of the projection G, computed from B.

Unioning each attribute's member list as a chain (first member with each
later member) gives exactly the connectivity of the clique while doing
O(k) instead of O(k^2) work per attribute; that is what makes n = 10^6
supercritical runs feasible.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from . import _kernels

EXACT_ENUMERATION_LIMIT = 20  # n * m; 2^(n*m) bipartite configurations


@dataclass(frozen=True)
class ComponentSummary:
    sizes: Tuple[int, ...]  # descending, isolated vertices included as 1s
    largest: int
    second_largest: int
    count: int

    def to_json(self):
        return {
            "n": int(sum(self.sizes)),
            "sizes_topk": list(self.sizes[:100]),
            "largest": self.largest,
            "second": self.second_largest,
            "count": self.count,
        }


@dataclass(frozen=True)
class ExactSizeDistribution:
    support: Dict[int, float]  # largest-component size -> probability
    n: int
    m: int


def component_sizes(b):
    """Component sizes of G for one bipartite sample."""
    sizes = _kernels.component_sizes(b.n, b.flat, b.offsets)
    sizes = np.sort(sizes)[::-1]
    sizes_t = tuple(int(s) for s in sizes)
    return ComponentSummary(
        sizes=sizes_t,
        largest=sizes_t[0] if sizes_t else 0,
        second_largest=sizes_t[1] if len(sizes_t) > 1 else 0,
        count=len(sizes_t),
    )


def _largest_component(n, member_lists):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for mem in member_lists:
        for j in mem[1:]:
            a, b = find(mem[0]), find(j)
            if a != b:
                parent[b] = a
    counts = {}
    for v in range(n):
        r = find(v)
        counts[r] = counts.get(r, 0) + 1
    return max(counts.values())


def exact_largest_distribution(w):
    """Exact law of the largest component by enumerating every bipartite
    configuration, weighted by its product of Bernoulli probabilities.

    Refuses instances with n * m > EXACT_ENUMERATION_LIMIT.
    """
    n, m = w.n, w.m
    if n * m > EXACT_ENUMERATION_LIMIT:
        raise ValueError(
            "exact enumeration needs n*m <= %d, got %d"
            % (EXACT_ENUMERATION_LIMIT, n * m)
        )
    vertices = list(range(n))
    per_attr = []
    for i in range(m):
        pi = float(w.p[i])
        choices = []
        for r in range(n + 1):
            for mem in itertools.combinations(vertices, r):
                choices.append((mem, pi**r * (1.0 - pi) ** (n - r)))
        per_attr.append(choices)
    support = {}
    for combo in itertools.product(*per_attr):
        weight = 1.0
        for _, wgt in combo:
            weight *= wgt
        if weight == 0.0:
            continue
        largest = _largest_component(n, [mem for mem, _ in combo])
        support[largest] = support.get(largest, 0.0) + weight
    return ExactSizeDistribution(support=support, n=n, m=m)
