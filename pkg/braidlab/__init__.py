__all__ = [
    "apply_hop",
    "apply_number_phase",
    "apply_partial_swap",
    "compile_circuit",
    "encode_basis",
    "execute_schedule",
    "init_state",
    "inner_product",
    "readout_distribution",
    "sample",
    "simulate",
    "validate_schedule",
    "load_circuit",
    "save_circuit",
    "load_schedule",
    "save_schedule",
    "load_history",
    "save_history",
    "gate",
    "plan_layout",
    "plan_braid_loop",
    "winding_number",
    "BraidingConvention",
    "CircuitIR",
    "CodespaceError",
    "CollisionError",
    "CompileError",
    "Gate",
    "LatticePath",
    "QubitLayout",
    "Schedule",
    "ScheduleStats",
    "SparseFockState",
    "__version__",
]

from loguru import logger

from braidlab.analytics import ScheduleStats
from braidlab.circuit import CircuitIR, Gate, gate
from braidlab.compiler import CompileError, compile_circuit, validate_schedule
from braidlab.encoding import CodespaceError, encode_basis, readout_distribution, sample
from braidlab.fock import BraidingConvention, SparseFockState
from braidlab.geometry import (
    LatticePath,
    QubitLayout,
    plan_braid_loop,
    plan_layout,
    winding_number,
)
from braidlab.io import (
    load_circuit,
    load_history,
    load_schedule,
    save_circuit,
    save_history,
    save_schedule,
)
from braidlab.operations import (
    CollisionError,
    apply_hop,
    apply_number_phase,
    apply_partial_swap,
    execute_schedule,
    init_state,
    inner_product,
)
from braidlab.oracle import simulate
from braidlab.schedule import Schedule

from ._version import __version__

logger.disable("braidlab")
