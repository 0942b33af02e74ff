"""Pure-Python sampling and component kernels.

This is the fallback used when the compiled extension
(``rigs._kernels._core``) is unavailable.  The RNG stream derivation and
the draw order are identical in both implementations, so they produce
bit-for-bit equal samples; ``tests/test_kernels.py`` asserts this.

RNG: a splitmix64 stream per attribute, derived from (seed, attribute
index) with a murmur-style 64-bit finalizer.  Counter-free, splittable,
and trivially portable between Python and C.
"""

import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


def _fmix64(z):
    z &= _MASK
    z ^= z >> 33
    z = (z * 0xFF51AFD7ED558CCD) & _MASK
    z ^= z >> 33
    z = (z * 0xC4CEB9FE1A85EC53) & _MASK
    z ^= z >> 33
    return z


def derive_stream(seed, index):
    """64-bit state of the splitmix64 stream for (seed, index)."""
    return _fmix64((seed & _MASK) ^ _fmix64(((index + 1) * _GOLDEN) & _MASK))


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, state):
        self.state = state & _MASK

    def next_u64(self):
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_open(self):
        # uniform on (0, 1]; never 0, so log() is safe
        return ((self.next_u64() >> 11) + 1) * _INV53

    def next_halfopen(self):
        # uniform on [0, 1)
        return (self.next_u64() >> 11) * _INV53


def binomial_count(n, p, gen):
    """Binomial(n, p) by geometric skips; expected O(np + 1) draws."""
    if p <= 0.0:
        return 0
    if p >= 1.0:
        return n
    log1mp = math.log1p(-p)
    count = 0
    pos = 0
    while True:
        gap = int(math.log(gen.next_open()) / log1mp)
        pos += gap + 1
        if pos > n:
            return count
        count += 1


def floyd_sample(n, k, gen):
    """Uniform k-subset of range(n) via Floyd's algorithm, sorted."""
    if k >= n:
        return np.arange(n, dtype=np.int64)
    chosen = set()
    for j in range(n - k, n):
        t = int(gen.next_halfopen() * (j + 1))
        if t in chosen:
            chosen.add(j)
        else:
            chosen.add(t)
    return np.array(sorted(chosen), dtype=np.int64)


def sample_members(n, p, stream_state):
    """Member list of one attribute: Binomial count, then Floyd subset."""
    gen = SplitMix64(stream_state)
    k = binomial_count(n, p, gen)
    return floyd_sample(n, k, gen)


def sample_bipartite(n, p, seed):
    """Sample every attribute's member list.

    Returns (flat, offsets): members of attribute i are
    flat[offsets[i]:offsets[i + 1]], sorted ascending.
    """
    m = len(p)
    parts = []
    offsets = np.zeros(m + 1, dtype=np.int64)
    total = 0
    for i in range(m):
        mem = sample_members(n, float(p[i]), derive_stream(seed, i))
        total += len(mem)
        offsets[i + 1] = total
        parts.append(mem)
    if parts:
        flat = np.concatenate(parts) if total else np.zeros(0, dtype=np.int64)
    else:
        flat = np.zeros(0, dtype=np.int64)
    return flat, offsets


def component_sizes(n, flat, offsets):
    """Vertex-side component sizes of the projected graph (unsorted).

    Components of the projection equal components of the bipartite graph
    restricted to the vertex side, so we run scipy's connected_components
    on the (n + m)-node bipartite graph and count vertex labels.
    """
    m = len(offsets) - 1
    if len(flat) == 0:
        return np.ones(n, dtype=np.int64)
    attr_col = np.repeat(np.arange(m, dtype=np.int64), np.diff(offsets)) + n
    g = coo_matrix(
        (np.ones(len(flat), dtype=np.int8), (flat, attr_col)),
        shape=(n + m, n + m),
    )
    _, labels = connected_components(g, directed=False)
    counts = np.bincount(labels[:n])
    return counts[counts > 0].astype(np.int64)
