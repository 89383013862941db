"""Deza graphs from strongly regular graphs with smallest eigenvalue -2.

Constructions of the Seidel families, delta-automorphism enumeration, certified
vertex connectivity and the disjoint path families behind the connectivity
results, with a batch command line (``dezagraphs``).
"""

from .automorphism import automorphism_group, automorphisms, find_isomorphism, is_isomorphic
from .connectivity import (
    ConnectivityCertificate,
    lattice_disconnecting_set,
    max_disjoint_paths,
    min_vertex_cut,
    verify_cut,
    vertex_connectivity,
)
from .deza import (
    DeltaAutoCensus,
    Involution,
    deza_from,
    deza_lattice,
    deza_triangular,
    enumerate_delta_automorphisms,
    i_automorphism,
    is_delta_automorphism,
    pair_automorphism_t,
)
from .errors import (
    ConstructionError,
    DezaGraphError,
    Graph6Error,
    InfeasibleParameters,
    InvalidArgument,
    SearchBoundExceeded,
)
from .families import (
    chang,
    clebsch_seidel,
    complete_multipartite_nx2,
    folded_5cube,
    lattice,
    petersen,
    schlafli,
    schlafli_complement,
    seidel_switching,
    shrikhande,
    triangular,
)
from .graph import (
    DezaParams,
    Graph,
    Spectrum,
    SrgParams,
    classify_deza,
    classify_srg,
    common_neighbors,
    complement,
    complement_srg_params,
    is_co_edge_regular,
    is_edge_regular,
    second_neighborhood,
    second_neighborhood_components,
    srg_spectrum,
)
from .graph6 import from_graph6, to_graph6
from .path_families import build_family, classify_pair, l_adjacent, sweep, t_adjacent, verify_family

__version__ = "0.1.0"
