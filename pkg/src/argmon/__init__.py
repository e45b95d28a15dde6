"""argmon: abstract argumentation solving, acceptability degrees, and a
brute-force harness verifying that removing attacks never lowers a degree.
"""

from .core import (
    Attack,
    ArgumentationGraph,
    GraphError,
    MAX_ENUMERATION_SIZE,
    Xorshift64Star,
    build_graph,
    enumerate_graphs,
    sample_graphs,
)
from .degrees import AcceptabilityDegree, DegreeConvention, degree, degree_table
from .io import (
    GraphFormat,
    ParseError,
    format_for_path,
    parse_graph,
    serialize_graph,
)
from .semantics import (
    LabelValue,
    Labelling,
    SemanticsId,
    characteristic,
    complete_extensions,
    complete_labellings,
    ext2lab,
    extensions,
    grounded_extension,
    lab2ext,
    labellings,
    preferred_extensions,
    stable_extensions,
)
from .verify import (
    SweepConfig,
    VerificationReport,
    Violation,
    ViolationKind,
    check_correspondence,
    check_lemma_addition,
    check_lemma_removal,
    check_monotonicity,
    check_side_claims,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Attack",
    "ArgumentationGraph",
    "GraphError",
    "MAX_ENUMERATION_SIZE",
    "Xorshift64Star",
    "build_graph",
    "enumerate_graphs",
    "sample_graphs",
    "AcceptabilityDegree",
    "DegreeConvention",
    "degree",
    "degree_table",
    "GraphFormat",
    "ParseError",
    "format_for_path",
    "parse_graph",
    "serialize_graph",
    "LabelValue",
    "Labelling",
    "SemanticsId",
    "characteristic",
    "complete_extensions",
    "complete_labellings",
    "ext2lab",
    "extensions",
    "grounded_extension",
    "lab2ext",
    "labellings",
    "preferred_extensions",
    "stable_extensions",
    "SweepConfig",
    "VerificationReport",
    "Violation",
    "ViolationKind",
    "check_correspondence",
    "check_lemma_addition",
    "check_lemma_removal",
    "check_monotonicity",
    "check_side_claims",
    "sweep",
]