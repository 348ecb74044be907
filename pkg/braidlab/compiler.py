# -*- coding: utf-8 -*-
"""
Lowering of logical circuits to schedules of anyon primitives, and symbolic
validation of the resulting schedules
"""

from collections import namedtuple
from itertools import product

import numpy as np
from loguru import logger

from braidlab.circuit import Gate
from braidlab.fock import pack_sites, site_bit
from braidlab.geometry import (
    DEFAULT_SPACING,
    LatticePath,
    anyon_point,
    as_site,
    in_bounds,
    plan_braid_loop,
    plan_layout,
    winding_number,
)
from braidlab.schedule import Hop, NPhase, PSwap, Schedule

EXACT_REPLAY_LIMIT = 10
SEMIONIC_TOL = 1e-12

ValidationReport = namedtuple("ValidationReport", ("ok", "index", "reason"))
ValidationReport.__doc__ = """\
Outcome of :func:`validate_schedule`; `index` and `reason` describe the first
offending primitive, or are None when `ok`
"""


class CompileError(ValueError):
    """
    Raised when a circuit cannot be lowered

    Parameters
    ----------
    message : str
    gate_index : int, optional
        Index of the offending gate in the circuit, if known
    """

    def __init__(self, message, gate_index=None):
        if gate_index is not None:
            message = "gate {}: {}".format(gate_index, message)
        super().__init__(message)
        self.gate_index = gate_index


def _check_semionic(kind, phi):
    if abs(phi - np.pi) > SEMIONIC_TOL:
        raise ValueError("{} requires semionic phase".format(kind.upper()))


def lower_rz(layout, q, theta):
    """
    Lowers RZ(theta) = diag(1, exp(-i theta)) on qubit `q`

    Returns
    -------
    ops : list
        A single number-phase pulse on rail1
    """
    return [NPhase(layout.rail1(q), float(theta))]


def lower_rx(layout, q, theta):
    """
    Lowers RX(theta) = exp(-i theta X / 2) on qubit `q`

    Rail1's contents are parked on the ancilla so that the partial swap acts on
    the vertical (phase-free) edge rail0 - ancilla, then brought back.

    Returns
    -------
    ops : list
    """
    rail0, ancilla, rail1 = layout.rail0(q), layout.ancilla(q), layout.rail1(q)
    return [
        Hop(rail1, ancilla),
        PSwap(rail0, ancilla, float(theta)),
        Hop(ancilla, rail1),
    ]


def lower_h(q):
    """H = RZ(-pi/2) RX(pi/2) RZ(-pi/2), with RZ(theta) = diag(1, exp(-i theta))"""
    return [
        Gate("rz", (q,), -np.pi / 2),
        Gate("rx", (q,), np.pi / 2),
        Gate("rz", (q,), -np.pi / 2),
    ]


def lower_x(q):
    """X = RX(pi), up to global phase"""
    return [Gate("rx", (q,), np.pi)]


def lower_cnot(control, target, phi):
    """
    CNOT = H(target) CZ H(target); exact only for semions

    Parameters
    ----------
    control, target : int
    phi : float
        Statistical angle of the machine

    Returns
    -------
    gates : list of Gate
    """
    _check_semionic("cnot", phi)
    return lower_h(target) + [Gate("cz", (control, target))] + lower_h(target)


def _check_loop(layout, path, control, target, windings):
    if not path.closed or path[0] != layout.rail0(control):
        raise ValueError(
            "Braid path must be closed at qubit {}'s rail0.".format(control)
        )
    allowed = {layout.rail0(control), layout.ancilla(target)}
    for s in path:
        if not in_bounds(s, layout.shape) or (s in layout.reserved and s not in allowed):
            raise ValueError("Braid path visits reserved site {}.".format(tuple(s)))
    for q in range(layout.n_qubits):
        for rail in (layout.rail0(q), layout.rail1(q)):
            if q == control and rail == layout.rail0(q):
                continue
            expected = windings if (q == target and rail == layout.rail0(q)) else 0
            got = winding_number(path, anyon_point(rail))
            if got != expected:
                raise ValueError(
                    "Braid path winds {} time(s) around {}, expected {}.".format(
                        got, tuple(rail), expected
                    )
                )


def lower_cz(layout, control, target, *, windings=1, path=None):
    """
    Lowers the braid controlled-phase gate diag(1, 1, 1, exp(i windings phi))

    The braid carries the control's rail0 contents around the target's rail0,
    which phases the branch where both rail0 sites are occupied (logical 00).
    X layers on both qubits before and after move that phase onto logical 11.

    Parameters
    ----------
    layout : QubitLayout
    control, target : int
    windings : int, optional
        Signed number of braid turns. Default: 1
    path : LatticePath, optional
        Explicit braid loop; must wind `windings` times around the target
        rail0 and never around another rail. Default: planned loop

    Returns
    -------
    ops : list
    """
    if path is None:
        orientation = "ccw" if windings > 0 else "cw"
        path = plan_braid_loop(
            layout, control, target, orientation, turns=abs(int(windings))
        )
    else:
        path = path if isinstance(path, LatticePath) else LatticePath(path)
        _check_loop(layout, path, control, target, windings)

    x_layer = lower_rx(layout, control, np.pi) + lower_rx(layout, target, np.pi)
    braid = [Hop(a, b) for a, b in zip(path[:-1], path[1:])]

    return x_layer + braid + x_layer


def rewrite_gate(item, phi):
    """
    Rewrites `item` into the native gate set {rz, rx, cphase}

    Parameters
    ----------
    item : Gate
    phi : float
        Statistical angle of the machine

    Returns
    -------
    gates : list of Gate
    """
    kind, qubits = item.kind, item.qubits
    if kind in ("rz", "rx", "cphase"):
        return [item]
    elif kind == "h":
        rewritten = lower_h(qubits[0])
    elif kind == "x":
        rewritten = lower_x(qubits[0])
    elif kind == "z":
        rewritten = [Gate("rz", qubits, np.pi)]
    elif kind == "s":
        rewritten = [Gate("rz", qubits, -np.pi / 2)]
    elif kind == "t":
        rewritten = [Gate("rz", qubits, -np.pi / 4)]
    elif kind == "y":
        rewritten = [Gate("rz", qubits, np.pi), Gate("rx", qubits, np.pi)]
    elif kind == "cz":
        _check_semionic(kind, phi)
        rewritten = [Gate("cphase", qubits)]
    elif kind == "cnot":
        rewritten = lower_cnot(qubits[0], qubits[1], phi)
    else:
        raise ValueError("Cannot rewrite gate {!r}.".format(kind))

    return [g for r in rewritten for g in rewrite_gate(r, phi)]


def lower_gate(layout, item):
    """Lowers native gate `item` to primitives"""
    if item.kind == "rz":
        return lower_rz(layout, item.qubits[0], item.theta)
    elif item.kind == "rx":
        return lower_rx(layout, item.qubits[0], item.theta)
    elif item.kind == "cphase":
        return lower_cz(layout, *item.qubits, windings=item.windings)
    raise ValueError("Gate {!r} is not native; rewrite it first.".format(item.kind))


def compile_circuit(circuit, *, spacing=DEFAULT_SPACING):
    """
    Compiles `circuit` into a schedule of anyon primitives

    Parameters
    ----------
    circuit : CircuitIR
    spacing : int, optional
        Lattice columns per qubit. Default: 3

    Returns
    -------
    schedule : :class:`braidlab.Schedule`

    Raises
    ------
    CompileError
        If a gate cannot be lowered or the schedule fails validation
    """
    try:
        layout = plan_layout(circuit.n_qubits, spacing)
    except ValueError as err:
        raise CompileError(str(err)) from err
    logger.info(f"Compiling {circuit} onto {layout}")

    ops = []
    for idx, item in enumerate(circuit.gates):
        try:
            native = rewrite_gate(item, circuit.phi)
            for g in native:
                ops += lower_gate(layout, g)
        except ValueError as err:
            raise CompileError(str(err), gate_index=idx) from err
        logger.debug(
            f"Gate {idx} ({item.kind} {item.qubits}) -> {len(native)} native gate(s)"
        )

    schedule = Schedule(layout, circuit.phi, ops)
    report = validate_schedule(schedule)
    if not report.ok:
        raise CompileError(
            "schedule failed validation at op {}: {}".format(report.index, report.reason)
        )
    logger.info(f"Compiled {schedule}")

    return schedule


def _basis_configurations(layout):
    rails = [(layout.rail0(q), layout.rail1(q)) for q in range(layout.n_qubits)]
    return {pack_sites(choice, layout.shape) for choice in product(*rails)}


def validate_schedule(schedule, *, limit=EXACT_REPLAY_LIMIT):
    """
    Symbolically replays occupancy to find collisions and malformed primitives

    Up to `limit` qubits every branch reachable from every encoded basis input
    is tracked exactly. Beyond it a may-be-occupied mask is tracked instead,
    which can report collisions that no branch actually reaches.

    Parameters
    ----------
    schedule : Schedule
    limit : int, optional
        Largest qubit count replayed exactly. Default: 10

    Returns
    -------
    report : ValidationReport
    """
    layout, shape = schedule.layout, schedule.shape
    exact = layout.n_qubits <= limit
    if exact:
        branches = _basis_configurations(layout)
    else:
        maybe = pack_sites(
            [s for q in range(layout.n_qubits) for s in (layout.rail0(q), layout.rail1(q))],
            shape,
        )

    for idx, op in enumerate(schedule.ops):
        sites = [as_site(op.site)] if isinstance(op, NPhase) else [as_site(s) for s in op[:2]]
        for s in sites:
            if not in_bounds(s, shape):
                return ValidationReport(False, idx, "site {} out of bounds".format(tuple(s)))
        if isinstance(op, (NPhase, PSwap)) and not np.isfinite(op.theta):
            return ValidationReport(False, idx, "non-finite angle")
        if isinstance(op, NPhase):
            continue
        a, b = sites
        if abs(a.x - b.x) + abs(a.y - b.y) != 1:
            return ValidationReport(
                False, idx, "sites {} and {} not adjacent".format(tuple(a), tuple(b))
            )

        bit_a, bit_b = site_bit(a, shape), site_bit(b, shape)
        both = bit_a | bit_b
        if exact:
            moved = set()
            for config in branches:
                occ = config & both
                if isinstance(op, Hop) and occ == both:
                    return ValidationReport(
                        False,
                        idx,
                        "hard-core collision: hop {} -> {}".format(tuple(a), tuple(b)),
                    )
                if occ in (bit_a, bit_b):
                    moved.add(config ^ both)
                    if isinstance(op, Hop):
                        continue
                moved.add(config)
            branches = moved
        else:
            on_a, on_b = bool(maybe & bit_a), bool(maybe & bit_b)
            if isinstance(op, Hop):
                if on_a and on_b:
                    return ValidationReport(
                        False,
                        idx,
                        "possible hard-core collision: hop {} -> {}".format(
                            tuple(a), tuple(b)
                        ),
                    )
                if on_a != on_b:
                    maybe ^= both
            elif on_a or on_b:
                maybe |= both

    return ValidationReport(True, None, None)
