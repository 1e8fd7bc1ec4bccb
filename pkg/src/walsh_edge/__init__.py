"""Walsh-domain edge detection for grayscale images.

Sequency-ordered Walsh-Hadamard filtering realized twice over: as an exact
gate-level statevector simulation with an ancilla-tagged high-pass filter,
and as a classical fast-transform oracle, plus a pair-difference baseline
and an SSIM comparison harness.
"""

from .encoding import (
    QpieState,
    flatten_column_major,
    is_power_of_two,
    qpie_decode,
    qpie_encode,
    validate_image,
)
from .metrics import SsimParams, l2_error, max_abs_error, ssim
from .pipeline import (
    CombinedEdgeMap,
    ComparisonResult,
    EdgeResult,
    amplitude_permutation,
    build_pipeline_circuit,
    compare_methods,
    edge_detect,
    edge_detect_combined,
    edge_detect_pass,
    qhed_combined,
    qhed_pass,
    resolve_cutoff,
)
from .qsim import (
    Circuit,
    DegeneratePostselectionError,
    Gate,
    Relabel,
    apply_gate,
    basis_state,
    build_highpass_circuit,
    build_inverse_sequency_wht_circuit,
    build_sequency_order_circuit,
    build_sequency_wht_circuit,
    circuit_depth,
    dyadic_cover,
    export_qasm,
    extend_circuit,
    gate_count,
    postselect_ancilla,
    run,
    unitary_of,
)
from .wht import (
    gray_index,
    highpass_classical,
    inverse_gray_index,
    inverse_sequency_wht,
    natural_wht,
    natural_wht_matrix,
    sequency_wht,
    sequency_wht_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "QpieState",
    "SsimParams",
    "CombinedEdgeMap",
    "ComparisonResult",
    "EdgeResult",
    "Circuit",
    "DegeneratePostselectionError",
    "Gate",
    "Relabel",
    "amplitude_permutation",
    "apply_gate",
    "basis_state",
    "build_highpass_circuit",
    "build_inverse_sequency_wht_circuit",
    "build_pipeline_circuit",
    "build_sequency_order_circuit",
    "build_sequency_wht_circuit",
    "circuit_depth",
    "compare_methods",
    "dyadic_cover",
    "edge_detect",
    "edge_detect_combined",
    "edge_detect_pass",
    "export_qasm",
    "extend_circuit",
    "flatten_column_major",
    "gate_count",
    "gray_index",
    "highpass_classical",
    "inverse_gray_index",
    "inverse_sequency_wht",
    "is_power_of_two",
    "l2_error",
    "max_abs_error",
    "natural_wht",
    "natural_wht_matrix",
    "postselect_ancilla",
    "qhed_combined",
    "qhed_pass",
    "qpie_decode",
    "qpie_encode",
    "resolve_cutoff",
    "run",
    "sequency_wht",
    "sequency_wht_matrix",
    "ssim",
    "unitary_of",
    "validate_image",
]
