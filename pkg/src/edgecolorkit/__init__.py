"""Exact counting of proper edge colorings of multigraphs, gadget
verification, palette reductions, and interpolation-based count recovery."""

from .cnf import (
    CnfFormula,
    count_sat,
    parse_dimacs,
    render_dimacs,
    transform_phi_prime,
)
from .counting import (
    PartitionSpectrum,
    count_assignments,
    count_by_matching_decomposition,
    count_extensions,
    decompose_extension,
    enumerate_perfect_matchings,
    extension_matrix,
    is_uniquely_partition_colorable,
    partition_spectrum,
)
from .errors import KeyPropertyError, ParseError, PreconditionError
from .gadgets import (
    GadgetError,
    GadgetSpec,
    KeyPropertyReport,
    WitnessColoring,
    build_f_nonplanar,
    build_h3,
    build_h4,
    build_h5_icosahedron,
    build_h_star,
    build_matchings,
    chain_gadget,
    chain_graph,
    check_witness,
    derive_distinct_diagonal,
    icosahedron_graph,
    parse_gadget_name,
    verify_key_property,
)
from .graphs import (
    EdgeSelector,
    GadgetGraph,
    MultiGraph,
    ReplacedBlock,
    parse_graph,
    render_graph,
    replace_edges,
)
from .holant import (
    Signature,
    SignatureGrid,
    ad_grid,
    ad_signature,
    decompose_domain_invariant,
    eigenvalues_ab,
    equality_signature,
    eval_grid,
    gate_signature,
    make_grid,
    matrix_identity,
    matrix_mul,
    matrix_ones,
    matrix_power,
    place_binary_on_edges,
    signature_from_matrix,
)
from .reduction import (
    ReductionCertificate,
    StratifiedSystem,
    check_certificate,
    cross_validate_omega_n,
    interpolation_pipeline,
    select_gadget,
    simplify_equal_case,
    solve_vandermonde,
)

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "EdgeSelector",
    "GadgetError",
    "GadgetGraph",
    "GadgetSpec",
    "KeyPropertyError",
    "KeyPropertyReport",
    "MultiGraph",
    "ParseError",
    "PartitionSpectrum",
    "PreconditionError",
    "ReductionCertificate",
    "ReplacedBlock",
    "Signature",
    "SignatureGrid",
    "StratifiedSystem",
    "WitnessColoring",
    "ad_grid",
    "ad_signature",
    "build_f_nonplanar",
    "build_h3",
    "build_h4",
    "build_h5_icosahedron",
    "build_h_star",
    "build_matchings",
    "chain_gadget",
    "chain_graph",
    "check_certificate",
    "check_witness",
    "count_assignments",
    "count_by_matching_decomposition",
    "count_extensions",
    "count_sat",
    "cross_validate_omega_n",
    "decompose_domain_invariant",
    "decompose_extension",
    "derive_distinct_diagonal",
    "eigenvalues_ab",
    "enumerate_perfect_matchings",
    "equality_signature",
    "eval_grid",
    "extension_matrix",
    "gate_signature",
    "icosahedron_graph",
    "interpolation_pipeline",
    "is_uniquely_partition_colorable",
    "make_grid",
    "matrix_identity",
    "matrix_mul",
    "matrix_ones",
    "matrix_power",
    "parse_dimacs",
    "parse_gadget_name",
    "parse_graph",
    "partition_spectrum",
    "place_binary_on_edges",
    "render_dimacs",
    "render_graph",
    "replace_edges",
    "select_gadget",
    "signature_from_matrix",
    "simplify_equal_case",
    "solve_vandermonde",
    "transform_phi_prime",
    "verify_key_property",
]
