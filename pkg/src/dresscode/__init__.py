"""Repetition-based storage codes: construction, verification, bounds, and a
cluster simulator with uncoded exact repair.

The library composes an outer erasure code over GF(256) with an inner
fractional repetition layout.  Any k nodes recover the file; a failed node is
rebuilt by verbatim copies from live replicas, one download per lost symbol.
"""

from .codefile import CodeFile, read_codefile, write_codefile
from .constructions import (
    CirculantSpec,
    Graph,
    PermutationMatrix,
    circulant_from_polynomial,
    circulant_regular_graph,
    code_from_graph,
    half_shift_matrix,
    modular_code,
    partial_regular_graph,
    projective_plane_code,
    regular_graph_code,
    ring_code,
    wfr_from_prg,
)
from .errors import (
    AlreadyDead,
    CodeFileError,
    DeadNodeContacted,
    DressCodeError,
    EmptyGraph,
    InconsistentSymbols,
    InsufficientSymbols,
    InternalCheckError,
    IrregularCode,
    LengthMismatch,
    NoStrictPlan,
    ParamViolation,
    StaleReport,
    UnrepairableSymbol,
)
from .frcode import (
    IRREGULAR,
    STRONG,
    WEAK,
    DssParams,
    FrCode,
    VerificationReport,
    cut_set_bound,
    mbr_capacity,
    mbr_file_size,
    normalize_symbols,
    supported_file_size,
    validate_dss_params,
    verify_code,
)
from .mds import MdsParams, field_add, field_inv, field_mul, mds_decode, mds_encode, mds_params
from .sim import (
    RELAXED,
    STRICT,
    ClusterState,
    DressCode,
    RepairReport,
    assemble_dress,
    execute_repair,
    fail_node,
    failure_tolerance_check,
    plan_repair,
    retrieve_file,
    store_file,
)

__all__ = [
    "AlreadyDead",
    "CirculantSpec",
    "ClusterState",
    "CodeFile",
    "CodeFileError",
    "DeadNodeContacted",
    "DressCode",
    "DressCodeError",
    "DssParams",
    "EmptyGraph",
    "FrCode",
    "Graph",
    "IRREGULAR",
    "InconsistentSymbols",
    "InsufficientSymbols",
    "InternalCheckError",
    "IrregularCode",
    "LengthMismatch",
    "MdsParams",
    "NoStrictPlan",
    "ParamViolation",
    "PermutationMatrix",
    "RELAXED",
    "RepairReport",
    "STRICT",
    "STRONG",
    "StaleReport",
    "UnrepairableSymbol",
    "VerificationReport",
    "WEAK",
    "assemble_dress",
    "circulant_from_polynomial",
    "circulant_regular_graph",
    "code_from_graph",
    "cut_set_bound",
    "execute_repair",
    "fail_node",
    "failure_tolerance_check",
    "field_add",
    "field_inv",
    "field_mul",
    "half_shift_matrix",
    "mbr_capacity",
    "mbr_file_size",
    "mds_decode",
    "mds_encode",
    "mds_params",
    "modular_code",
    "normalize_symbols",
    "partial_regular_graph",
    "plan_repair",
    "projective_plane_code",
    "read_codefile",
    "regular_graph_code",
    "retrieve_file",
    "ring_code",
    "store_file",
    "supported_file_size",
    "validate_dss_params",
    "verify_code",
    "wfr_from_prg",
    "write_codefile",
]

__version__ = "0.1.0"
