"""Random intersection graphs: sampling, component structure across the
phase transition at n * sum(p_i^2) = 1, and the branching-process
prediction of the giant component.
"""

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .bounds import chernoff_upper, chung_lu_lower, chung_lu_upper
from .branching import (
    ComparisonReport,
    ExtinctionSolution,
    GwOutcome,
    UniformRegime,
    compare_extinction,
    extinction_probability,
    gw_map,
    simulate_gw,
    simulate_gw_batch,
    uniform_extinction,
    zeta,
    zeta_star,
)
from .components import (
    ComponentSummary,
    ExactSizeDistribution,
    component_sizes,
    exact_largest_distribution,
)
from .discovery import (
    DiscoveryTrace,
    discover,
    requires_large_component_witness,
    vertex_index,
)
from .harness import (
    SweepConfig,
    SweepRecord,
    VerificationReport,
    VerifyConstants,
    giant_gap_scan,
    run_sweep,
    verify_theorems,
)
from .model import (
    AttributeWeights,
    RegimeReport,
    WeightConstructionError,
    WeightSpec,
    build_weights,
    criticality,
    regime,
)
from .sampler import BipartiteSample, ProjectedGraph, project, sample_bipartite

__version__ = "0.1.0"
