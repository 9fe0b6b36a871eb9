"""Classical and quantum statistical memory of elementary cellular automata.

Evolve any of the 256 elementary rules from seeded random rows, read each
timestep as a stationary stochastic string, and measure how much memory a
model of that string needs: the classical statistical complexity from a
reconstructed edge-emitting hidden Markov model, and the quantum statistical
memory from the Gram spectrum of inferred memory states.
"""

from .classical import (
    CausalPartition,
    ConvergenceError,
    EpsilonMachine,
    SubTree,
    build_machine,
    build_subtree,
    chi2_homogeneity,
    chi2_same,
    format_machine,
    infer_machine,
    merge_states,
    statistical_complexity,
)
from .evolve import (
    Trajectory,
    run_open_boundary,
    step_periodic,
    step_periodic_reference,
    write_pbm,
)
from .experiment import (
    ComplexityTrace,
    ExperimentConfig,
    ExperimentResult,
    FailureRecord,
    RuleStatistics,
    SpectrumReport,
    TracePoint,
    growth_rate,
    rank_spectrum,
    row_complexities,
    run_experiment,
    sampling_schedule,
)
from .outputs import emit_outputs, write_report_json, write_traces_csv
from .processes import (
    alternating_row,
    constant_row,
    golden_mean_distribution,
    golden_mean_machine,
    periodic_row,
)
from .quantum import (
    GramMatrix,
    Spectrum,
    SpectrumError,
    format_gram,
    gram_matrix,
    quantum_statistical_memory,
    symmetric_spectrum,
)
from .rules import (
    RuleTable,
    canonical_rules,
    complement_rule,
    encode_outputs,
    mirror_rule,
    parse_rule,
    rule_symmetries,
)
from .tape import Tape, kink_filter
from .windows import (
    ConditionalFutures,
    EmpiricalDistribution,
    chained_futures,
    conditional_futures,
    count_windows,
    shannon_entropy,
    window_code,
    window_string,
)

__version__ = "0.1.0"

__all__ = [
    "CausalPartition",
    "ComplexityTrace",
    "ConditionalFutures",
    "ConvergenceError",
    "EmpiricalDistribution",
    "EpsilonMachine",
    "ExperimentConfig",
    "ExperimentResult",
    "FailureRecord",
    "GramMatrix",
    "RuleStatistics",
    "RuleTable",
    "Spectrum",
    "SpectrumError",
    "SpectrumReport",
    "SubTree",
    "Tape",
    "TracePoint",
    "Trajectory",
    "alternating_row",
    "build_machine",
    "build_subtree",
    "canonical_rules",
    "chained_futures",
    "chi2_homogeneity",
    "chi2_same",
    "complement_rule",
    "conditional_futures",
    "constant_row",
    "count_windows",
    "emit_outputs",
    "encode_outputs",
    "format_gram",
    "format_machine",
    "golden_mean_distribution",
    "golden_mean_machine",
    "gram_matrix",
    "growth_rate",
    "infer_machine",
    "kink_filter",
    "merge_states",
    "mirror_rule",
    "parse_rule",
    "periodic_row",
    "quantum_statistical_memory",
    "rank_spectrum",
    "row_complexities",
    "rule_symmetries",
    "run_experiment",
    "run_open_boundary",
    "sampling_schedule",
    "shannon_entropy",
    "statistical_complexity",
    "step_periodic",
    "step_periodic_reference",
    "symmetric_spectrum",
    "window_code",
    "window_string",
    "write_pbm",
    "write_report_json",
    "write_traces_csv",
]
