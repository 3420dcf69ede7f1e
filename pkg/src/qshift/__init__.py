"""Gate-level simulation of swap-network shift registers and shift-and-add multiplication."""

from .arithmetic import (
    CostReport,
    MulConstSpec,
    MulQuantumSpec,
    add,
    adder_gates,
    build_adder_circuit,
    build_multiply_by_constant_circuit,
    build_multiply_registers_circuit,
    controlled_add,
    cost_report,
    extended_addend,
    mul_const_layout,
    mul_quantum_layout,
    multiply_by_constant,
    multiply_registers,
    num_additions,
    num_shifts,
    oracle_add,
    select_qubit,
)
from .errors import PreconditionError
from .gates import (
    Circuit,
    Gate,
    apply_circuit_to_label,
    apply_gate_to_label,
    decompose_cswap,
    decompose_swap,
    expand_cswaps,
    expand_swaps,
)
from .shift_register import (
    GateCountReport,
    ShiftSpec,
    build_shift_circuit,
    classical_shift_oracle,
    gate_count,
    rotate,
    shift,
    shift_cascade,
    shift_layout,
)
from .state import (
    DEFAULT_MAX_WIRES,
    NORM_TOL,
    SCHMIDT_TOL,
    ProductCheck,
    RegisterLayout,
    StateVector,
    apply_gate,
    is_product_across,
    new_basis_state,
    run_circuit,
    schmidt_rank,
    segment_value_distribution,
)
from .statefile import read_state, state_from_text, state_to_text, write_state

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CostReport",
    "DEFAULT_MAX_WIRES",
    "Gate",
    "GateCountReport",
    "MulConstSpec",
    "MulQuantumSpec",
    "NORM_TOL",
    "PreconditionError",
    "ProductCheck",
    "RegisterLayout",
    "SCHMIDT_TOL",
    "ShiftSpec",
    "StateVector",
    "add",
    "adder_gates",
    "apply_circuit_to_label",
    "apply_gate",
    "apply_gate_to_label",
    "build_adder_circuit",
    "build_multiply_by_constant_circuit",
    "build_multiply_registers_circuit",
    "build_shift_circuit",
    "classical_shift_oracle",
    "controlled_add",
    "cost_report",
    "decompose_cswap",
    "decompose_swap",
    "expand_cswaps",
    "expand_swaps",
    "extended_addend",
    "gate_count",
    "is_product_across",
    "mul_const_layout",
    "mul_quantum_layout",
    "multiply_by_constant",
    "multiply_registers",
    "new_basis_state",
    "num_additions",
    "num_shifts",
    "oracle_add",
    "read_state",
    "rotate",
    "run_circuit",
    "schmidt_rank",
    "segment_value_distribution",
    "select_qubit",
    "shift",
    "shift_cascade",
    "shift_layout",
    "state_from_text",
    "state_to_text",
    "write_state",
]
