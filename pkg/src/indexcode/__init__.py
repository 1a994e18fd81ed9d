"""Shortest broadcast codes for side-information graphs.

A sender holds n messages; receiver i wants message i and already knows the
messages its out-neighbors index. If deleting at most two vertices makes the
graph acyclic, the number of messages minus that deletion count is both
achievable and a hard floor, and `build_code` constructs a linear code of
exactly that length. Everything the construction claims is re-checkable by
the brute-force baselines in `mais` and `verify`.
"""

from .codec import (
    LinearCode,
    UnsupportedRemovalNumber,
    apply_code,
    build_code,
    code_from_json,
    code_to_json,
    decode_receiver,
    encode_cyclic,
    encode_interlinked,
    encode_uncoded,
)
from .generate import random_digraph, structured_digraph
from .graphs import (
    CycleList,
    Digraph,
    GuardError,
    ParseError,
    canonical_rotation,
    enumerate_cycles,
    parse_digraph,
    serialize_digraph,
    strongly_connected_components,
    union_of_cycles,
)
from .interlinked import (
    InterlinkedConfig,
    OuterPath,
    StructuralError,
    ValidationReport,
    build_config,
    classify_case,
    config_from_json_dict,
    config_search_oracle,
    config_to_json_dict,
    validate_config,
)
from .mais import (
    RemovalResult,
    find_disjoint_cycle_pair,
    mais_oracle,
    removal_number,
)
from .selfcheck import run_criterion, run_level
from .verify import (
    DecodabilityReport,
    MinrankResult,
    decodability_check,
    gf2_rank,
    minrank_gf2,
)

__version__ = "0.1.0"

__all__ = [
    "CycleList",
    "DecodabilityReport",
    "Digraph",
    "GuardError",
    "InterlinkedConfig",
    "LinearCode",
    "MinrankResult",
    "OuterPath",
    "ParseError",
    "RemovalResult",
    "StructuralError",
    "UnsupportedRemovalNumber",
    "ValidationReport",
    "apply_code",
    "build_code",
    "build_config",
    "canonical_rotation",
    "classify_case",
    "code_from_json",
    "code_to_json",
    "config_from_json_dict",
    "config_search_oracle",
    "config_to_json_dict",
    "decodability_check",
    "decode_receiver",
    "encode_cyclic",
    "encode_interlinked",
    "encode_uncoded",
    "enumerate_cycles",
    "find_disjoint_cycle_pair",
    "gf2_rank",
    "mais_oracle",
    "minrank_gf2",
    "parse_digraph",
    "random_digraph",
    "removal_number",
    "run_criterion",
    "run_level",
    "serialize_digraph",
    "strongly_connected_components",
    "structured_digraph",
    "union_of_cycles",
    "validate_config",
    "__version__",
]
