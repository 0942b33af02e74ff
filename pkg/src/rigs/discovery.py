"""Breadth-first discovery of a component in a bipartite sample.

Starting from one vertex, each step takes the oldest unsaturated vertex,
claims its not-yet-seen attributes, then claims those attributes'
not-yet-seen vertices.  Per step we record the number of new vertices,
the total weight of the new attributes, and the unsaturated count; these
are the quantities the component-size arguments are built on.

The selection order among unsaturated vertices is FIFO.  Component size
and the conservation identity are order-independent; traces are not.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class DiscoveryStep:
    index: int  # 1-based step number
    new_attrs: Tuple[int, ...]
    new_vertex_count: int  # X_i
    attr_weight: float  # W_i = sum of p_j over new_attrs
    unsaturated_count: int  # |U_i| after the step


@dataclass(frozen=True)
class DiscoveryTrace:
    start_vertex: int
    steps: Tuple[DiscoveryStep, ...]
    component_size: int  # 1 + sum of X_i
    terminated_at: int  # number of steps executed
    exhausted: bool  # False if max_steps stopped the process early

    def to_json(self):
        return {
            "start": self.start_vertex,
            "component_size": self.component_size,
            "terminated_at": self.terminated_at,
            "exhausted": self.exhausted,
            "steps": [
                {
                    "i": s.index,
                    "new_attrs": list(s.new_attrs),
                    "X": s.new_vertex_count,
                    "W": s.attr_weight,
                    "U": s.unsaturated_count,
                }
                for s in self.steps
            ],
        }


def vertex_index(b):
    """Transpose of the sample: vertex -> list of its attributes.

    Build once and pass to discover() when tracing many starts on the
    same sample.
    """
    index = [[] for _ in range(b.n)]
    for i in range(b.m):
        for v in b.members(i):
            index[int(v)].append(i)
    return index


def discover(b, w, start, max_steps=None, index=None):
    """Run the discovery process from `start`; returns the step trace."""
    if not 0 <= start < b.n:
        raise ValueError("start vertex %r outside [0, %d)" % (start, b.n))
    if index is None:
        index = vertex_index(b)
    seen_vertex = bytearray(b.n)
    seen_attr = bytearray(b.m)
    seen_vertex[start] = 1
    queue = deque([start])
    steps = []
    total_new = 0
    while queue:
        if max_steps is not None and len(steps) >= max_steps:
            break
        v = queue.popleft()
        new_attrs = []
        for a in index[v]:
            if not seen_attr[a]:
                seen_attr[a] = 1
                new_attrs.append(a)
        new_vertices = []
        for a in new_attrs:
            for u in b.members(a):
                u = int(u)
                if not seen_vertex[u]:
                    seen_vertex[u] = 1
                    new_vertices.append(u)
        queue.extend(new_vertices)
        total_new += len(new_vertices)
        steps.append(
            DiscoveryStep(
                index=len(steps) + 1,
                new_attrs=tuple(new_attrs),
                new_vertex_count=len(new_vertices),
                attr_weight=math.fsum(float(w.p[a]) for a in new_attrs),
                unsaturated_count=len(queue),
            )
        )
    return DiscoveryTrace(
        start_vertex=start,
        steps=tuple(steps),
        component_size=1 + total_new,
        terminated_at=len(steps),
        exhausted=not queue,
    )


def requires_large_component_witness(trace, c, k_plus, k_minus=1):
    """True iff the trace ran at least k_plus steps keeping at least
    (c - 1) * k / 2 unsaturated vertices at every step k in
    [k_minus, k_plus].  A finite-n diagnostic for the supercritical
    growth condition, not a theorem checker.
    """
    if c <= 1:
        raise ValueError("witness requires c > 1, got %r" % (c,))
    if trace.terminated_at < k_plus:
        return False
    for k in range(k_minus, k_plus + 1):
        if trace.steps[k - 1].unsaturated_count < (c - 1) * k / 2:
            return False
    return True
