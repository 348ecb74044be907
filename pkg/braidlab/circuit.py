# -*- coding: utf-8 -*-
"""
Logical circuit representation
"""

from collections import namedtuple

import numpy as np

Gate = namedtuple("Gate", ("kind", "qubits", "theta", "windings"), defaults=(None, 1))
Gate.__doc__ = """\
Logical gate

Parameters
----------
kind : str
    One of :data:`SINGLE_QUBIT_GATES` or :data:`TWO_QUBIT_GATES`
qubits : tuple of int
    Operand(s); (control, target) for two-qubit gates
theta : float, optional
    Rotation angle, required by 'rz' and 'rx'
windings : int, optional
    Braid windings of a 'cphase' gate. Default: 1
"""

ROTATIONS = ["rz", "rx"]
SINGLE_QUBIT_GATES = ROTATIONS + ["h", "x", "y", "z", "s", "t"]
TWO_QUBIT_GATES = ["cz", "cphase", "cnot"]


def gate(kind, *qubits, theta=None, windings=1):
    """Convenience constructor, e.g. ``gate('rx', 0, theta=np.pi)``"""
    return Gate(kind, tuple(qubits), theta, windings)


def as_index(value, what="qubit index"):
    """Returns `value` as an int, rejecting non-integral numbers"""
    try:
        index = int(value)
    except (TypeError, ValueError):
        raise ValueError("Provided {} {!r} is not an integer.".format(what, value))
    if index != value:
        raise ValueError("Provided {} {!r} is not an integer.".format(what, value))
    return index


def check_gate(item, n_qubits):
    """
    Checks that `item` is a valid gate on `n_qubits` qubits

    Parameters
    ----------
    item : Gate
    n_qubits : int

    Returns
    -------
    item : Gate
        With normalized operand tuple and float angle
    """
    if not isinstance(item, Gate):
        raise TypeError("Provided gate {!r} must be a Gate.".format(item))
    kind = item.kind
    if kind not in SINGLE_QUBIT_GATES + TWO_QUBIT_GATES:
        raise ValueError(
            "Provided gate {!r} is not permitted; must be in {}.".format(
                kind, SINGLE_QUBIT_GATES + TWO_QUBIT_GATES
            )
        )
    qubits = tuple(as_index(q) for q in item.qubits)
    arity = 1 if kind in SINGLE_QUBIT_GATES else 2
    if len(qubits) != arity:
        raise ValueError(
            "Gate {} takes {} operand(s), got {}.".format(kind, arity, len(qubits))
        )
    if any(not 0 <= q < n_qubits for q in qubits):
        raise ValueError(
            "Gate {} operands {} out of range for {} qubit(s).".format(
                kind, qubits, n_qubits
            )
        )
    if arity == 2 and qubits[0] == qubits[1]:
        raise ValueError("Gate {} operands must be distinct.".format(kind))

    theta = item.theta
    if kind in ROTATIONS:
        if theta is None or not np.isfinite(float(theta)):
            raise ValueError("Gate {} needs a finite angle, got {}.".format(kind, theta))
        theta = float(theta)
    elif theta is not None:
        raise ValueError("Gate {} takes no angle.".format(kind))

    windings = item.windings
    if int(windings) != windings or (kind == "cphase" and windings == 0):
        raise ValueError("Braid windings must be a non-zero integer, got {}.".format(windings))
    if kind != "cphase" and windings != 1:
        raise ValueError("Only cphase gates accept braid windings.")

    return Gate(kind, qubits, theta, int(windings))


def gate_to_dict(item):
    """JSON-ready description of `item`"""
    out = dict(g=item.kind)
    if item.kind in SINGLE_QUBIT_GATES:
        out["q"] = item.qubits[0]
    else:
        out["c"], out["t"] = item.qubits
    if item.theta is not None:
        out["theta"] = float(item.theta)
    if item.windings != 1:
        out["windings"] = int(item.windings)
    return out


def gate_from_dict(info):
    """Builds a gate from :func:`gate_to_dict` output"""
    try:
        kind = info["g"]
        if kind in TWO_QUBIT_GATES:
            qubits = (info["c"], info["t"])
        else:
            qubits = (info["q"],)
        return Gate(kind, qubits, info.get("theta"), info.get("windings", 1))
    except (KeyError, TypeError) as err:
        raise ValueError("Malformed gate {!r}: missing {}".format(info, err))


class CircuitIR:
    """
    Ordered list of logical gates over `n_qubits` qubits

    Parameters
    ----------
    n_qubits : int
        Number of logical qubits
    phi : float, optional
        Statistical angle of the anyons realizing the circuit. Default: pi
    gates : list of Gate, optional
        Gates, in application order. Default: None

    Attributes
    ----------
    n_qubits : int
    phi : float
    gates : tuple of Gate
    """

    def __init__(self, n_qubits, phi=np.pi, gates=None):
        self._n_qubits = as_index(n_qubits, "qubit count")
        if self._n_qubits < 1:
            raise ValueError("Circuit needs at least one qubit, got {}.".format(n_qubits))
        self._phi = float(phi)
        if not (np.isfinite(self._phi) and 0 < abs(self._phi) < 2 * np.pi):
            raise ValueError(
                "Statistical angle must lie in (-2pi, 2pi) and be non-zero, "
                "got {}.".format(phi)
            )
        checked = []
        for idx, item in enumerate([] if gates is None else gates):
            try:
                checked.append(check_gate(item, self._n_qubits))
            except (TypeError, ValueError) as err:
                raise type(err)("gate {}: {}".format(idx, err)) from err
        self._gates = tuple(checked)

    def __len__(self):
        return len(self._gates)

    def __iter__(self):
        return iter(self._gates)

    def __eq__(self, other):
        return (
            isinstance(other, CircuitIR)
            and self._n_qubits == other._n_qubits
            and self._phi == other._phi
            and self._gates == other._gates
        )

    def __str__(self):
        return "{name}(n_qubits={n}, gates={g}, phi={phi})".format(
            name=self.__class__.__name__, n=self.n_qubits, g=len(self), phi=self.phi
        )

    __repr__ = __str__

    @property
    def n_qubits(self):
        """Number of logical qubits"""
        return self._n_qubits

    @property
    def phi(self):
        """Statistical angle (radians)"""
        return self._phi

    @property
    def gates(self):
        """Gates, in application order"""
        return self._gates

    def to_dict(self):
        """JSON-ready description of the circuit (without format key)"""
        return dict(
            qubits=self._n_qubits,
            phi=self._phi,
            gates=[gate_to_dict(g) for g in self._gates],
        )

    @classmethod
    def from_dict(cls, info):
        """Builds a circuit from :meth:`to_dict` output"""
        try:
            gates = []
            for idx, item in enumerate(info.get("gates", [])):
                try:
                    gates.append(gate_from_dict(item))
                except ValueError as err:
                    raise ValueError("gate {}: {}".format(idx, err)) from err
            return cls(info["qubits"], info.get("phi", np.pi), gates)
        except (KeyError, AttributeError) as err:
            raise ValueError("Malformed circuit description: missing {}".format(err))
