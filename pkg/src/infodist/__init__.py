"""infodist: a desk-scale laboratory for information distance.

Exact budget-bounded description complexity on a tiny self-delimiting
machine, the distances and cost functions built from it, constructive
two-way conversion codecs, bounded-ambiguity labelings, reversible
machine protocols with erasure audits, neighborhood-density experiments,
and a practical compression-based similarity tool.
"""

from .codes import (
    decode_lg,
    encode_lg,
    index_to_string,
    pair,
    pair_second,
    string_to_index,
    unpair,
)
from .coloring import (
    BColoring,
    ColoringError,
    SetSystem,
    SwLabeling,
    color_bound,
    randomized_b_coloring,
    sw_decode,
    sw_label,
)
from .complexity import (
    AdmissibilityReport,
    ComplexityTable,
    DistanceReport,
    addition_report,
    build_table,
    check_admissible,
    distance_report,
    e0,
    e0_search,
    e0_table,
    e1,
    e3_sum,
    entropy_sum,
    k_direct,
    kraft_by_condition,
    mutual_info,
    strings_up_to,
    w_cost,
    w_prime,
)
from .conversion import (
    ConversionError,
    ConversionGraph,
    PairRelation,
    build_graph,
    decode_from_node,
    decode_with_d,
    descriptor_length,
    enumerate_pairs,
    verify_roundtrip,
)
from .density import BallReport, ball_b1, ball_b3, deviation_spread, dispersion_check, slope_experiment
from .machine import (
    DEFAULT_BUDGET,
    ExecBudget,
    Outcome,
    enumerate_halting,
    enumerate_programs,
    kraft_sum,
    run,
)
from .ncd import (
    CommandCompressor,
    DistanceMatrix,
    BuiltinCompressor,
    cluster,
    distance_matrix,
    e1_estimate,
    get_compressor,
    matrix_from_paths,
    ncd,
    newick,
    top_split,
)
from .reversible import (
    FIXTURES,
    Configuration,
    ProtocolError,
    ReversibleProgram,
    Rule,
    TMSpec,
    Trace,
    bennett_compile,
    bitnot_machine,
    check_deterministic,
    check_reversible,
    decrement_machine,
    doubling_machine,
    erasure_audit,
    fig1_protocol,
    fig2_concat,
    identity_machine,
    increment_machine,
    invert_spec,
    parse_spec,
    run_from_config,
    run_tm,
    serialize_spec,
)

__version__ = "0.1.0"
