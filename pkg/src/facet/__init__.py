"""Facial edge-coloring toolkit for plane pseudographs."""

from facet.choosability import (
    BlockDecomposition,
    ListColoringError,
    SearchBudgetError,
    SimpleGraph,
    blocks,
    degree_feasible_colorable,
    is_gallai_tree,
    list_color,
    sdr,
    subset_hall_lower_bounds,
)
from facet.discharging import (
    AuditReport,
    ChargeLedger,
    DischargingError,
    StructureReport,
    Transfer,
    apply_rules,
    audit,
    initial_charges,
    structure_report,
)
from facet.embedding import (
    EmbeddedGraph,
    EmbeddingError,
    FaceProfile,
    FaceWalk,
    PegParseError,
    SurgeryError,
    SurgeryResult,
    contract_edge,
    contract_face,
    delete_edge,
    delete_vertex,
    euler_characteristic,
    face_profiles,
    faces,
    facial_distance,
    facial_neighborhood,
    generate,
    identify_edges,
    in_two_thread,
    medial,
    parse_peg,
    random_plane_graph,
    serialize_peg,
    standard_catalog,
    subdivide_edge,
)
from facet.facial_coloring import (
    ColoringError,
    ConflictGraph,
    SolverBudgetError,
    Verdict,
    Violation,
    available_colors,
    chromatic_index,
    conflict_graph,
    default_palette,
    greedy_color,
    parse_coloring,
    recolor_candidates,
    serialize_coloring,
    verify,
    verify_vertex,
)
from facet.nullstellensatz import (
    CERTIFICATES,
    Certificate,
    ExponentOverflow,
    check_certificate,
    cn_witness,
    coefficient,
    expand_polynomial,
    graph_polynomial_coefficient,
    lemma_polynomial,
)
from facet.reducibility import (
    CheckReport,
    CheckStep,
    Configuration,
    ConfigurationError,
    catalog,
    check,
    check_all,
    configuration_from_json,
    configuration_to_json,
    neighborhood_audit,
)

__all__ = [
    "AuditReport",
    "BlockDecomposition",
    "CERTIFICATES",
    "Certificate",
    "ChargeLedger",
    "CheckReport",
    "CheckStep",
    "ColoringError",
    "Configuration",
    "ConfigurationError",
    "ConflictGraph",
    "DischargingError",
    "EmbeddedGraph",
    "EmbeddingError",
    "ExponentOverflow",
    "FaceProfile",
    "FaceWalk",
    "ListColoringError",
    "PegParseError",
    "SearchBudgetError",
    "SimpleGraph",
    "SolverBudgetError",
    "StructureReport",
    "SurgeryError",
    "SurgeryResult",
    "Transfer",
    "Verdict",
    "Violation",
    "apply_rules",
    "audit",
    "available_colors",
    "blocks",
    "catalog",
    "check",
    "check_all",
    "check_certificate",
    "chromatic_index",
    "cn_witness",
    "coefficient",
    "configuration_from_json",
    "configuration_to_json",
    "conflict_graph",
    "contract_edge",
    "contract_face",
    "default_palette",
    "degree_feasible_colorable",
    "delete_edge",
    "delete_vertex",
    "euler_characteristic",
    "expand_polynomial",
    "face_profiles",
    "faces",
    "facial_distance",
    "facial_neighborhood",
    "generate",
    "graph_polynomial_coefficient",
    "greedy_color",
    "identify_edges",
    "in_two_thread",
    "initial_charges",
    "is_gallai_tree",
    "lemma_polynomial",
    "list_color",
    "medial",
    "neighborhood_audit",
    "parse_coloring",
    "parse_peg",
    "random_plane_graph",
    "recolor_candidates",
    "sdr",
    "serialize_coloring",
    "serialize_peg",
    "standard_catalog",
    "structure_report",
    "subdivide_edge",
    "subset_hall_lower_bounds",
    "verify",
    "verify_vertex",
]

__version__ = "0.1.0"
