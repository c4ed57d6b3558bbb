"""k-independent reconfiguration graphs: independent sets of size at most k,
joined when they differ by adding or removing one vertex."""

from .analysis import (
    Bipartition,
    ComponentDecomposition,
    DegreeProfile,
    ForestStatus,
    HamiltonicityVerdict,
    HamMethod,
    HamStatus,
    components,
    degree_profile,
    forest_status,
    girth,
    hamiltonicity,
    is_hamiltonian_cycle,
    is_star_shape,
    parity_bipartition,
)
from .errors import (
    DuplicateEdgeError,
    EmptyGraphInputError,
    IndReconError,
    InvariantViolation,
    MalformedHeaderError,
    NotAVertexError,
    ParseError,
    ResourceLimitError,
    SelfLoopError,
    SizeConstraintError,
    UnknownClaimError,
    VertexOutOfRangeError,
)
from .graph import (
    Family,
    Graph,
    complement,
    complete,
    complete_multipartite,
    cycle,
    empty_graph,
    format_edge_list,
    format_set,
    is_independent,
    make_family,
    members,
    parse_edge_list,
    path,
    recognize,
    star,
    vertex_set,
    wheel,
)
from .indsets import (
    IndependencePolynomial,
    IndSetFamily,
    enumerate_independent_sets,
    eval_at,
    independence_number,
    independence_polynomial,
    parity_counts,
)
from .recon import ReconGraph, ReconPath, build_recon, recon_distance
from .verify import CLAIM_IDS, ClaimResult, check_all, check_claim, sweep_families

__version__ = "0.1.0"
