# -*- coding: utf-8 -*-

import numpy as np
import pytest

from braidlab import compiler, geometry
from braidlab.circuit import CircuitIR, Gate, gate
from braidlab.compiler import CompileError
from braidlab.schedule import Hop, NPhase, PSwap, Schedule

LAYOUT = geometry.plan_layout(2)


def test_lower_rz_rx():
    assert compiler.lower_rz(LAYOUT, 1, 0.3) == [NPhase(LAYOUT.rail1(1), 0.3)]
    assert compiler.lower_rx(LAYOUT, 0, 0.3) == [
        Hop(LAYOUT.rail1(0), LAYOUT.ancilla(0)),
        PSwap(LAYOUT.rail0(0), LAYOUT.ancilla(0), 0.3),
        Hop(LAYOUT.ancilla(0), LAYOUT.rail1(0)),
    ]


def test_rewrite_gate():
    assert compiler.rewrite_gate(gate("h", 0), np.pi) == [
        Gate("rz", (0,), -np.pi / 2),
        Gate("rx", (0,), np.pi / 2),
        Gate("rz", (0,), -np.pi / 2),
    ]
    assert compiler.rewrite_gate(gate("x", 1), np.pi) == [Gate("rx", (1,), np.pi)]
    assert compiler.rewrite_gate(gate("cz", 0, 1), np.pi) == [Gate("cphase", (0, 1))]
    cnot = compiler.rewrite_gate(gate("cnot", 0, 1), np.pi)
    assert [g.kind for g in cnot] == ["rz", "rx", "rz", "cphase", "rz", "rx", "rz"]
    assert all(g.qubits == (1,) for g in cnot if g.kind != "cphase")
    # native gates pass through untouched, at any phi
    native = Gate("cphase", (1, 0), None, -2)
    assert compiler.rewrite_gate(native, 0.7) == [native]


def test_lower_h_cnot():
    assert compiler.lower_h(1) == compiler.rewrite_gate(gate("h", 1), np.pi)
    assert compiler.lower_x(0) == [Gate("rx", (0,), np.pi)]
    cnot = compiler.lower_cnot(1, 0, np.pi)
    assert cnot[3] == Gate("cz", (1, 0))
    assert cnot[:3] == cnot[4:] == compiler.lower_h(0)


def test_semionic_only():
    with pytest.raises(ValueError, match="CNOT requires semionic phase"):
        compiler.lower_cnot(0, 1, 0.7)
    with pytest.raises(ValueError, match="CNOT requires semionic phase"):
        compiler.rewrite_gate(gate("cnot", 0, 1), 2 * np.pi / 3)
    with pytest.raises(ValueError, match="CZ requires semionic phase"):
        compiler.rewrite_gate(gate("cz", 0, 1), 2 * np.pi / 3)


def test_lower_cz():
    ops = compiler.lower_cz(LAYOUT, 0, 1)
    x_layer = compiler.lower_rx(LAYOUT, 0, np.pi) + compiler.lower_rx(LAYOUT, 1, np.pi)
    loop = geometry.plan_braid_loop(LAYOUT, 0, 1)
    assert ops[: len(x_layer)] == x_layer
    assert ops[-len(x_layer) :] == x_layer
    braid = ops[len(x_layer) : -len(x_layer)]
    assert braid == [Hop(a, b) for a, b in zip(loop[:-1], loop[1:])]

    cw = compiler.lower_cz(LAYOUT, 0, 1, windings=-2)
    cw_loop = geometry.plan_braid_loop(LAYOUT, 0, 1, "cw", turns=2)
    assert len(cw) == 2 * len(x_layer) + len(cw_loop) - 1

    # an explicit loop must wind as requested and avoid the other rails
    assert compiler.lower_cz(LAYOUT, 0, 1, path=loop) == ops
    with pytest.raises(ValueError):
        compiler.lower_cz(LAYOUT, 0, 1, windings=2, path=loop)
    with pytest.raises(ValueError):
        compiler.lower_cz(LAYOUT, 1, 0, path=loop)


def test_compile_circuit():
    circ = CircuitIR(2, gates=[gate("h", 0), gate("cnot", 0, 1), gate("t", 1)])
    schedule = compiler.compile_circuit(circ)
    assert isinstance(schedule, Schedule)
    assert schedule.layout == LAYOUT
    assert schedule.phi == np.pi
    assert schedule == compiler.compile_circuit(circ)
    assert schedule.ops[-1] == NPhase(LAYOUT.rail1(1), -np.pi / 4)
    assert len(compiler.compile_circuit(CircuitIR(3))) == 0


def test_compile_errors():
    circ = CircuitIR(2, 2 * np.pi / 3, gates=[gate("x", 0), gate("cnot", 0, 1)])
    with pytest.raises(CompileError, match="gate 1: CNOT requires semionic phase") as err:
        compiler.compile_circuit(circ)
    assert err.value.gate_index == 1
    with pytest.raises(CompileError):
        compiler.compile_circuit(CircuitIR(2), spacing=2)
    assert CompileError("oops").gate_index is None
    assert str(CompileError("oops", 3)) == "gate 3: oops"


def test_validate_schedule():
    circ = CircuitIR(3, gates=[gate("h", 0), gate("cnot", 0, 2), gate("cz", 2, 1)])
    schedule = compiler.compile_circuit(circ)
    assert compiler.validate_schedule(schedule).ok
    assert compiler.validate_schedule(schedule, limit=0).ok

    # qubit 0's rail0 anyon walked onto qubit 1's rail0
    walk = [Hop((1, 1), (2, 1)), Hop((2, 1), (3, 1)), Hop((3, 1), (4, 1))]
    report = compiler.validate_schedule(Schedule(LAYOUT, np.pi, walk))
    assert not report.ok and report.index == 2
    assert report.reason == "hard-core collision: hop (3, 1) -> (4, 1)"

    far = Schedule(LAYOUT, np.pi, [Hop((0, 0), (2, 0))])
    assert compiler.validate_schedule(far) == (
        False,
        0,
        "sites (0, 0) and (2, 0) not adjacent",
    )

    outside = Schedule(LAYOUT, np.pi, [NPhase((9, 0), 0.1)])
    assert compiler.validate_schedule(outside).reason == "site (9, 0) out of bounds"

    nan = Schedule(LAYOUT, np.pi, [PSwap((0, 0), (1, 0), np.nan)])
    assert compiler.validate_schedule(nan).reason == "non-finite angle"


def test_validate_schedule_branches():
    # only the branch moved by the partial swap reaches qubit 1
    split = [
        PSwap((1, 1), (2, 1), np.pi / 2),
        Hop((2, 1), (3, 1)),
        Hop((3, 1), (4, 1)),
    ]
    report = compiler.validate_schedule(Schedule(LAYOUT, np.pi, split))
    assert not report.ok and report.index == 2

    # exact replay knows rail1 and the ancilla are never both occupied; the
    # occupancy mask cannot tell
    ops = [
        PSwap(LAYOUT.rail0(0), LAYOUT.ancilla(0), np.pi / 2),
        Hop(LAYOUT.ancilla(0), LAYOUT.rail1(0)),
    ]
    schedule = Schedule(LAYOUT, np.pi, ops)
    assert compiler.validate_schedule(schedule).ok
    report = compiler.validate_schedule(schedule, limit=0)
    assert not report.ok and report.index == 1
    assert report.reason.startswith("possible hard-core collision")

    safe = [Hop(LAYOUT.ancilla(0), (0, 2)), Hop((0, 2), LAYOUT.ancilla(0))]
    assert compiler.validate_schedule(Schedule(LAYOUT, np.pi, safe)).ok
    assert compiler.validate_schedule(Schedule(LAYOUT, np.pi, safe), limit=0).ok
