"""R-graph corona constructions on graphs and their normalized Laplacian
spectra: numeric eigendecomposition, closed-form factorization, mutual
cross-validation, and cospectral pair certification."""

from .closedform import (
    ClosedFormSpectrum,
    CoronaParams,
    FixedFamily,
    RealPolynomial,
    RootFamily,
    closed_form_spectrum,
    copy_block_forms,
    coronal,
    double_corona_spectrum,
    edge_corona_cubic,
    edge_corona_spectrum,
    excess_quadratic,
    fixed_family_value,
    flatten,
    quartic_factor,
    real_roots,
    vertex_corona_cubic,
    vertex_corona_spectrum,
)
from .corona import CoronaLayout, double_corona, r_edge_corona, r_graph, r_vertex_corona
from .cospectral import (
    CospectralCertificate,
    adjacency_cospectral,
    build_cospectral_pair,
    nl_cospectral,
    regular_cospectrality_agrees,
    verified_seed_pairs,
)
from .errors import (
    ConvergenceError,
    DuplicateEdgeError,
    EndpointRangeError,
    GraphValidationError,
    HypothesisError,
    InternalConsistencyError,
    PoleError,
    SelfLoopError,
)
from .graphs import (
    DegreeProfile,
    Graph,
    adjacency_matrix,
    build_graph,
    degree_profile,
    generate,
    incidence_matrix,
    is_connected,
    load_graph,
    parse_edge_list,
    parse_graph_json,
    save_graph,
    to_edge_list,
    to_graph_json,
)
from .invariants import degree_kirchhoff, spanning_trees_matrix_tree, spanning_trees_spectral
from .spectra import (
    Spectrum,
    SpectrumComparison,
    SpectrumSummary,
    compare_spectra,
    nl_spectrum,
    normalized_laplacian,
    normalized_laplacian_regular,
    numeric_spectrum,
    summarize,
)

__version__ = "0.1.0"
