"""Edge-disjoint spanning trees in augmented cubes."""

__version__ = "0.1.0"

from .aq_graph import (  # noqa: E402
    AugmentedCube,
    EdgeKind,
    Kind,
    SizeLimitError,
    build_aq,
    classify_pair,
    complement_partner,
    diameter,
    hypercube_partner,
    split_copies,
)
from .edst_builder import ConstructionError, Decomposition, Labeling, base_decomposition, build, extend  # noqa: E402
from .verifier import (  # noqa: E402
    VerificationReport,
    check_disjoint,
    check_internal_vertices,
    check_leftover,
    check_partition,
    check_spanning_tree,
    max_edst_upper_bound,
    tree_path,
    verify_all,
)

__all__ = [
    "AugmentedCube", "EdgeKind", "Kind", "SizeLimitError", "build_aq", "classify_pair",
    "complement_partner", "diameter", "hypercube_partner", "split_copies",
    "ConstructionError", "Decomposition", "Labeling", "base_decomposition", "build", "extend",
    "VerificationReport", "check_disjoint", "check_internal_vertices", "check_leftover",
    "check_partition", "check_spanning_tree", "max_edst_upper_bound", "tree_path", "verify_all",
]
