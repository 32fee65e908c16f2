"""Finite-level tools for minimal subshifts.

Factor languages of primitive substitutions and periodic words, Rauzy graphs
with their central labeling and projections, return words, extension graphs
and the tree condition, spanning-tree bases of Rauzy-graph fundamental
groups, and Stallings foldings for deciding subgroup questions in free
groups.
"""

from .codes import circular_ambiguity, is_code
from .errors import (
    BaseMismatch,
    Disconnected,
    EmptyGraph,
    HorizonExceeded,
    Incomplete,
    NoSeedLetter,
    NonPrimitive,
    NotAdmissible,
    NotAFactor,
    NotALoop,
    OddOrder,
    OrderMismatch,
    RauzyError,
    UnknownEdge,
)
from .extension import ExtensionGraph, TreeConditionReport, extension_graph, is_tree, scan_tree_condition
from .freegroup import (
    FreeWord,
    StallingsGraph,
    as_word,
    fold,
    is_basis_of_full_group,
    member,
    rank,
    reduce,
    subgroup_equals,
)
from .fundamental import (
    ConnectingMap,
    SpanningTreeBasis,
    abelianization_matrix,
    class_of_edge,
    connecting_map,
    expand_loop,
    expand_path,
    rank_profile,
    spanning_tree,
)
from .graph import (
    GraphPath,
    RauzyGraph,
    build_rauzy,
    central_label,
    export_dot,
    is_locally_admissible,
    iter_paths,
    lift_word_to_path,
    project,
    project_path,
    strongly_connected,
)
from .language import (
    FactorLanguage,
    PointWindow,
    Substitution,
    build_language,
    check_primitive,
    check_uniform_recurrence,
    complexity,
)
from .presets import PRESETS, load_preset
from .returns import (
    ReturnWordSet,
    delayed_return_words,
    lift_return_word,
    min_return_length_profile,
    return_set_at,
    return_words,
)

__all__ = [
    "circular_ambiguity",
    "is_code",
    "BaseMismatch",
    "Disconnected",
    "EmptyGraph",
    "HorizonExceeded",
    "Incomplete",
    "NoSeedLetter",
    "NonPrimitive",
    "NotAdmissible",
    "NotAFactor",
    "NotALoop",
    "OddOrder",
    "OrderMismatch",
    "RauzyError",
    "UnknownEdge",
    "ExtensionGraph",
    "TreeConditionReport",
    "extension_graph",
    "is_tree",
    "scan_tree_condition",
    "FreeWord",
    "StallingsGraph",
    "as_word",
    "fold",
    "is_basis_of_full_group",
    "member",
    "rank",
    "reduce",
    "subgroup_equals",
    "ConnectingMap",
    "SpanningTreeBasis",
    "abelianization_matrix",
    "class_of_edge",
    "connecting_map",
    "expand_loop",
    "expand_path",
    "rank_profile",
    "spanning_tree",
    "GraphPath",
    "RauzyGraph",
    "build_rauzy",
    "central_label",
    "export_dot",
    "is_locally_admissible",
    "iter_paths",
    "lift_word_to_path",
    "project",
    "project_path",
    "strongly_connected",
    "FactorLanguage",
    "PointWindow",
    "Substitution",
    "build_language",
    "check_primitive",
    "check_uniform_recurrence",
    "complexity",
    "PRESETS",
    "load_preset",
    "ReturnWordSet",
    "delayed_return_words",
    "lift_return_word",
    "min_return_length_profile",
    "return_set_at",
    "return_words",
]

__version__ = "0.1.0"
