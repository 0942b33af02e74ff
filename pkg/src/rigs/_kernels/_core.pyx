# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled sampling and component kernels.

Mirrors rigs._kernels.pure draw for draw; both implementations must
produce bit-identical output for the same (n, p, seed).
"""

from libc.math cimport log, log1p
from libcpp.algorithm cimport sort as cpp_sort
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef unsigned long long u64

cdef u64 _GOLDEN = 0x9E3779B97F4A7C15ULL
cdef double _INV53 = 1.0 / 9007199254740992.0


cdef inline u64 _fmix64(u64 z) nogil:
    z ^= z >> 33
    z *= 0xFF51AFD7ED558CCDULL
    z ^= z >> 33
    z *= 0xC4CEB9FE1A85EC53ULL
    z ^= z >> 33
    return z


cdef inline u64 _next_u64(u64 *state) nogil:
    state[0] += _GOLDEN
    cdef u64 z = state[0]
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline double _next_open(u64 *state) nogil:
    return ((_next_u64(state) >> 11) + 1) * _INV53


cdef inline double _next_halfopen(u64 *state) nogil:
    return (_next_u64(state) >> 11) * _INV53


cdef inline u64 _derive(u64 seed, u64 index) nogil:
    return _fmix64(seed ^ _fmix64((index + 1) * _GOLDEN))


def derive_stream(seed, index):
    return _derive(<u64> seed, <u64> index)


cdef long long _binomial(long long n, double p, u64 *state) nogil:
    cdef long long count = 0, pos = 0
    cdef double log1mp
    if p <= 0.0:
        return 0
    if p >= 1.0:
        return n
    log1mp = log1p(-p)
    while True:
        pos += <long long> (log(_next_open(state)) / log1mp) + 1
        if pos > n:
            return count
        count += 1


cdef void _floyd(long long n, long long k, u64 *state,
                 vector[long long] &out) nogil:
    cdef unordered_set[long long] chosen
    cdef long long j, t
    if k >= n:
        for j in range(n):
            out.push_back(j)
        return
    chosen.reserve(<size_t> (2 * k + 8))
    for j in range(n - k, n):
        t = <long long> (_next_halfopen(state) * (j + 1))
        if chosen.count(t):
            chosen.insert(j)
        else:
            chosen.insert(t)
    for j in chosen:
        out.push_back(j)


def sample_members(long long n, double p, stream_state):
    """Member list of one attribute, sorted ascending."""
    cdef u64 state = <u64> stream_state
    cdef vector[long long] buf
    cdef long long k = _binomial(n, p, &state)
    _floyd(n, k, &state, buf)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(buf.size(), dtype=np.int64)
    cdef size_t i
    for i in range(buf.size()):
        out[i] = buf[i]
    out.sort()
    return out


def sample_bipartite(long long n, const double[:] p, seed):
    """Sample all attributes; returns (flat, offsets) as in the pure kernel."""
    cdef u64 root = <u64> seed
    cdef u64 state
    cdef long long m = p.shape[0]
    cdef long long i, k, start
    cdef vector[long long] flat
    cdef cnp.ndarray[cnp.int64_t, ndim=1] offsets = np.zeros(m + 1, dtype=np.int64)
    with nogil:
        for i in range(m):
            state = _derive(root, <u64> i)
            k = _binomial(n, p[i], &state)
            start = <long long> flat.size()
            _floyd(n, k, &state, flat)
            offsets[i + 1] = <long long> flat.size()
            # the iteration order of the Floyd hash set is arbitrary
            cpp_sort(flat.data() + start, flat.data() + flat.size())
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(flat.size(), dtype=np.int64)
    cdef long long j
    for j in range(<long long> flat.size()):
        out[j] = flat[j]
    return out, offsets


cdef long long _find(long long *parent, long long x) nogil:
    cdef long long root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def component_sizes(long long n, const long long[:] flat,
                    const long long[:] offsets):
    """Vertex-side component sizes via union-find over attribute chains."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] parent_arr = np.arange(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] size_arr = np.ones(n, dtype=np.int64)
    cdef long long *parent = <long long *> parent_arr.data
    cdef long long *size = <long long *> size_arr.data
    cdef long long m = offsets.shape[0] - 1
    cdef long long i, j, a, b, tmp
    with nogil:
        for i in range(m):
            if offsets[i + 1] - offsets[i] < 2:
                continue
            a = _find(parent, flat[offsets[i]])
            for j in range(offsets[i] + 1, offsets[i + 1]):
                b = _find(parent, flat[j])
                if a != b:
                    if size[a] < size[b]:
                        tmp = a
                        a = b
                        b = tmp
                    parent[b] = a
                    size[a] += size[b]
    roots = parent_arr == np.arange(n, dtype=np.int64)
    return size_arr[roots]
