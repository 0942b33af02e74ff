"""Sampling of the random bipartite graph B and its projection G.

Each attribute i selects a Binomial(n, p_i) count and then a uniform
subset of that size (Floyd's algorithm), which has exactly the same law
as n independent Bernoulli(p_i) memberships.  Per-attribute RNG streams
are derived from (seed, attribute index), so the sample is independent
of any parallel schedule and reproducible bit-for-bit.
"""

import json
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class BipartiteSample:
    """One realization of B, stored as flat member ids plus offsets.

    Members of attribute i are flat[offsets[i]:offsets[i + 1]], sorted.
    """

    n: int
    seed: int
    flat: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        self.flat.setflags(write=False)
        self.offsets.setflags(write=False)

    @property
    def m(self):
        return len(self.offsets) - 1

    def members(self, i):
        return self.flat[self.offsets[i]:self.offsets[i + 1]]

    @property
    def attr_members(self):
        return [self.members(i) for i in range(self.m)]

    @property
    def total_memberships(self):
        return int(self.offsets[-1])

    def to_json(self):
        return {
            "n": self.n,
            "seed": self.seed,
            "attrs": [self.members(i).tolist() for i in range(self.m)],
        }

    @classmethod
    def from_json(cls, obj):
        attrs = obj["attrs"]
        offsets = np.zeros(len(attrs) + 1, dtype=np.int64)
        n = int(obj["n"])
        for i, mem in enumerate(attrs):
            offsets[i + 1] = offsets[i] + len(mem)
            if any(b <= a for a, b in zip(mem, mem[1:])):
                raise ValueError("attribute %d members not strictly increasing" % i)
            if mem and (mem[0] < 0 or mem[-1] >= n):
                raise ValueError("attribute %d has member outside [0, n)" % i)
        flat = (
            np.concatenate([np.asarray(a, dtype=np.int64) for a in attrs])
            if offsets[-1]
            else np.zeros(0, dtype=np.int64)
        )
        return cls(n=n, seed=int(obj["seed"]), flat=flat, offsets=offsets)

    def dumps(self):
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class ProjectedGraph:
    """Explicit edge list of G; for debugging and exhaustive oracles only."""

    n: int
    edges: Tuple[Tuple[int, int], ...]

    def to_edgelist(self):
        return "".join("%d %d\n" % e for e in self.edges)


def sample_bipartite(w, seed):
    """Draw one bipartite sample from weights w with the given 64-bit seed."""
    flat, offsets = _kernels.sample_bipartite(w.n, w.p, int(seed) & (2**64 - 1))
    return BipartiteSample(n=w.n, seed=int(seed), flat=flat, offsets=offsets)


def project(b):
    """Materialize G: one clique per attribute, deduplicated.

    Quadratic in member-list sizes; intended for small instances.
    """
    edges = set()
    for i in range(b.m):
        mem = b.members(i)
        for a in range(len(mem)):
            for c in range(a + 1, len(mem)):
                edges.add((int(mem[a]), int(mem[c])))
    return ProjectedGraph(n=b.n, edges=tuple(sorted(edges)))
