"""Zero forcing analysis: closures, minimal forcing sets, B-vertices and well-forced trees."""

from .errors import (
    ForceKitError,
    InstanceTooLarge,
    InvalidChoice,
    InvalidCover,
    InvalidFamily,
    InvalidRealization,
    NoDoublePendant,
    NotAForest,
    NotEligible,
    ParseError,
)
from .families import FamilySpec, all_trees, build, canonical_code, parse_family, random_connected_graph, random_tree
from .forcing import (
    ColorState,
    Realization,
    closure,
    enumerate_minimal_zfs,
    is_minimal_zfs,
    is_zfs,
    path_cover_zfs,
    reversal,
    zero_forcing_number,
)
from .graph import (
    Graph,
    PendentGeneralizedStar,
    VertexSet,
    classify,
    find_pendent_generalized_stars,
    leaf_neighbors,
    parse_edge_list,
    parse_graph6,
    pendent_paths,
    to_dot,
)
from .theorems import CHECKS, verify_theorems
from .trees import (
    BDecomposition,
    ReductionTrace,
    b_decomposition,
    irrelevant_vertices,
    minimum_path_cover,
    star_reduction,
    star_removal,
)
from .wellforced import (
    Obstruction,
    WellForcedReport,
    genstar_well_forced,
    is_well_forced_oracle,
    is_well_forced_tree,
    structural_witness,
)

__version__ = "0.1.0"

__all__ = [
    "all_trees",
    "b_decomposition",
    "BDecomposition",
    "build",
    "canonical_code",
    "CHECKS",
    "classify",
    "closure",
    "ColorState",
    "enumerate_minimal_zfs",
    "FamilySpec",
    "find_pendent_generalized_stars",
    "ForceKitError",
    "genstar_well_forced",
    "Graph",
    "InstanceTooLarge",
    "InvalidChoice",
    "InvalidCover",
    "InvalidFamily",
    "InvalidRealization",
    "irrelevant_vertices",
    "is_minimal_zfs",
    "is_well_forced_oracle",
    "is_well_forced_tree",
    "is_zfs",
    "leaf_neighbors",
    "minimum_path_cover",
    "NoDoublePendant",
    "NotAForest",
    "NotEligible",
    "Obstruction",
    "parse_edge_list",
    "parse_family",
    "parse_graph6",
    "ParseError",
    "path_cover_zfs",
    "pendent_paths",
    "PendentGeneralizedStar",
    "random_connected_graph",
    "random_tree",
    "Realization",
    "ReductionTrace",
    "reversal",
    "star_reduction",
    "star_removal",
    "structural_witness",
    "to_dot",
    "verify_theorems",
    "VertexSet",
    "WellForcedReport",
    "zero_forcing_number",
]
