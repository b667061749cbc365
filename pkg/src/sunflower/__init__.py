"""Sunflowers (delta-systems) in finite and countably infinite set families."""

from .cardinality import INFINITE, UNKNOWN, Cardinality, GroundTruth
from .detector import (
    Classification,
    Exhausted,
    candidate_cores,
    certified_cores,
    classify,
    extract_sunflower,
    find_exact_core_sunflower,
)
from .errors import (
    ArityError,
    BoundViolation,
    BudgetError,
    BudgetExhausted,
    NonPositiveParameter,
    NotASunflower,
    NotInfinite,
    NotUniform,
    OracleIncomplete,
    ParseError,
    PoolInfinite,
    PoolTooLarge,
    SpecSyntaxError,
    SunflowerError,
    TooLarge,
    Uncertified,
    UncertifiedBound,
    UncertifiedCore,
)
from .familyspec import (
    Explicit,
    FamilySpec,
    Gadget,
    GradedBlocks,
    InitialSegments,
    Link,
    Matching,
    Pad,
    Slice,
    Star,
    Strip,
    Union,
    contains_member,
    enumerate_family,
    ground_truth_sunflower,
    member_count,
    parse_spec,
    parse_table,
    point_degree,
    size_class_count,
)
from .finitelemma import SearchResult, er_bound, erdos_rado_find, max_sunflower_exact, maximal_disjoint
from .gadget import GadgetReport, e_intersection, gadget_family, verify_claim
from .padding import PaddedFamily, pad_family, unpad_set
from .pairing import pair, unpair
from .samesize import (
    ExtractionPlan,
    SunflowerStream,
    check_uniform,
    extract_uniform_sunflower,
    interfering_sets,
    plan_extraction,
)
from .setcore import (
    EMPTY,
    FiniteFamily,
    FiniteSet,
    SunflowerCheck,
    core_of,
    format_sets,
    fset,
    initial_segment,
    intersect,
    is_sunflower,
    parse_set,
    parse_sets,
)
from .sunflowertree import TreeLevel, TreeStats, children, tree_level, tree_stats
from .tables import ConstAfter, ExplicitRow, FnTable, Identity, Mod, RowSpec, Undefined, eset, row_range

__all__ = [
    "ArityError",
    "BoundViolation",
    "BudgetError",
    "BudgetExhausted",
    "Cardinality",
    "Classification",
    "ConstAfter",
    "EMPTY",
    "Exhausted",
    "Explicit",
    "ExplicitRow",
    "ExtractionPlan",
    "FamilySpec",
    "FiniteFamily",
    "FiniteSet",
    "FnTable",
    "Gadget",
    "GadgetReport",
    "GradedBlocks",
    "GroundTruth",
    "INFINITE",
    "Identity",
    "InitialSegments",
    "Link",
    "Matching",
    "Mod",
    "NonPositiveParameter",
    "NotASunflower",
    "NotInfinite",
    "NotUniform",
    "OracleIncomplete",
    "Pad",
    "PaddedFamily",
    "ParseError",
    "PoolInfinite",
    "PoolTooLarge",
    "RowSpec",
    "SearchResult",
    "Slice",
    "SpecSyntaxError",
    "Star",
    "Strip",
    "SunflowerCheck",
    "SunflowerError",
    "SunflowerStream",
    "TooLarge",
    "TreeLevel",
    "TreeStats",
    "UNKNOWN",
    "Uncertified",
    "UncertifiedBound",
    "UncertifiedCore",
    "Undefined",
    "Union",
    "candidate_cores",
    "certified_cores",
    "check_uniform",
    "children",
    "classify",
    "contains_member",
    "core_of",
    "e_intersection",
    "enumerate_family",
    "er_bound",
    "erdos_rado_find",
    "eset",
    "extract_sunflower",
    "extract_uniform_sunflower",
    "find_exact_core_sunflower",
    "format_sets",
    "fset",
    "gadget_family",
    "ground_truth_sunflower",
    "initial_segment",
    "interfering_sets",
    "intersect",
    "is_sunflower",
    "max_sunflower_exact",
    "maximal_disjoint",
    "member_count",
    "pad_family",
    "pair",
    "parse_set",
    "parse_sets",
    "parse_spec",
    "parse_table",
    "plan_extraction",
    "point_degree",
    "row_range",
    "size_class_count",
    "tree_level",
    "tree_stats",
    "unpad_set",
    "unpair",
    "verify_claim",
]
