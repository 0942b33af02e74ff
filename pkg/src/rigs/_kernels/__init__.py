"""Kernel selection: compiled extension if built, pure Python otherwise.

``IMPLEMENTATION`` is "compiled" or "pure".  Both backends expose the
same functions and produce bit-identical output for identical inputs:

    derive_stream(seed, index) -> int
    sample_members(n, p, stream_state) -> int64 ndarray (sorted)
    sample_bipartite(n, p_vector, seed) -> (flat, offsets)
    component_sizes(n, flat, offsets) -> int64 ndarray of sizes
"""

from . import pure

try:
    from . import _core as _impl

    IMPLEMENTATION = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    _impl = pure
    IMPLEMENTATION = "pure"

derive_stream = _impl.derive_stream
sample_members = _impl.sample_members
sample_bipartite = _impl.sample_bipartite
component_sizes = _impl.component_sizes
