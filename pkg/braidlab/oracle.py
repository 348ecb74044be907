# -*- coding: utf-8 -*-
"""
Dense reference simulator over logical qubits, used to verify anyon-level
execution
"""

import numpy as np
from loguru import logger
from scipy import linalg

from braidlab import encoding
from braidlab.circuit import CircuitIR, check_gate

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SQRT2_INV = 1 / np.sqrt(2)
_FIXED = dict(
    h=np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    x=SIGMA_X,
    y=np.array([[0, -1j], [1j, 0]], dtype=complex),
    z=np.diag([1, -1]).astype(complex),
    s=np.diag([1, 1j]),
    t=np.diag([1, np.exp(1j * np.pi / 4)]),
    cz=np.diag([1, 1, 1, -1]).astype(complex),
    cnot=np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
)


def gate_matrix(gate, phi=np.pi):
    """
    Ideal matrix of `gate`, in (control, target) order for two-qubit gates

    RZ uses the convention diag(1, exp(-i theta)); CPHASE is
    diag(1, 1, 1, exp(i windings phi)).

    Parameters
    ----------
    gate : Gate
    phi : float, optional
        Statistical angle. Default: pi

    Returns
    -------
    matrix : (2, 2) or (4, 4) :obj:`numpy.ndarray`
    """
    if gate.kind == "rz":
        return np.diag([1, np.exp(-1j * gate.theta)])
    elif gate.kind == "rx":
        return linalg.expm(-0.5j * gate.theta * SIGMA_X)
    elif gate.kind == "cphase":
        return np.diag([1, 1, 1, np.exp(1j * gate.windings * phi)])
    return _FIXED[gate.kind]


class DenseState:
    """
    Dense state vector over `n_qubits` logical qubits

    Parameters
    ----------
    amplitudes : array_like
        Complex vector of length 2**n_qubits; qubit 0 is the most significant
        bit of the index (leftmost in bitstrings)

    Attributes
    ----------
    amplitudes : :obj:`numpy.ndarray`
    n_qubits : int
    """

    def __init__(self, amplitudes):
        self._amplitudes = np.asarray(amplitudes, dtype=complex).ravel()
        n = int(np.log2(max(self._amplitudes.size, 1)))
        if self._amplitudes.size < 2 or 2**n != self._amplitudes.size:
            raise ValueError(
                "Provided amplitude vector of length {} is not a power of two "
                "(>= 2).".format(self._amplitudes.size)
            )
        self._n_qubits = n
        if abs(self.norm - 1) > 1e-9:
            raise ValueError("Provided amplitudes have norm {}.".format(self.norm))

    @classmethod
    def from_bits(cls, bits):
        """Basis state `bits` (qubit 0 leftmost)"""
        bits = encoding.check_bits(bits, len(bits))
        amps = np.zeros(2 ** len(bits), dtype=complex)
        amps[int(bits, 2)] = 1
        return cls(amps)

    def __len__(self):
        return self._amplitudes.size

    def __getitem__(self, bits):
        idx = int(bits, 2) if isinstance(bits, str) else bits
        return self._amplitudes[idx]

    def __array__(self, dtype=None):
        return self._amplitudes if dtype is None else self._amplitudes.astype(dtype)

    def __str__(self):
        return "{name}(n_qubits={n})".format(
            name=self.__class__.__name__, n=self.n_qubits
        )

    __repr__ = __str__

    @property
    def amplitudes(self):
        """State vector"""
        return self._amplitudes

    @property
    def n_qubits(self):
        """Number of logical qubits"""
        return self._n_qubits

    @property
    def norm(self):
        """Sum of squared amplitude moduli"""
        return float(np.vdot(self._amplitudes, self._amplitudes).real)

    def probabilities(self):
        """Bitstring -> probability for every basis state"""
        fmt = "{:0" + str(self._n_qubits) + "b}"
        return {
            fmt.format(i): float(p)
            for i, p in enumerate(np.abs(self._amplitudes) ** 2)
        }


def apply_ideal_gate(state, gate, phi=np.pi):
    """
    Multiplies `state` by the ideal matrix of `gate`

    Parameters
    ----------
    state : DenseState
    gate : Gate
    phi : float, optional
        Statistical angle used by 'cphase'. Default: pi

    Returns
    -------
    state : DenseState
    """
    gate = check_gate(gate, state.n_qubits)
    n, qubits = state.n_qubits, list(gate.qubits)
    k = len(qubits)
    matrix = gate_matrix(gate, phi).reshape([2] * (2 * k))
    psi = state.amplitudes.reshape([2] * n)
    psi = np.tensordot(matrix, psi, axes=(list(range(k, 2 * k)), qubits))
    psi = np.moveaxis(psi, list(range(k)), qubits)

    return DenseState(psi.reshape(-1))


def simulate(circuit, bits):
    """
    Applies every gate of `circuit` to basis input `bits`

    Parameters
    ----------
    circuit : CircuitIR
    bits : str
        Input bitstring, qubit 0 leftmost

    Returns
    -------
    state : DenseState
    """
    if not isinstance(circuit, CircuitIR):
        raise TypeError("Cannot simulate object of type {}".format(type(circuit)))
    bits = encoding.check_bits(bits, circuit.n_qubits)
    state = DenseState.from_bits(bits)
    for gate in circuit.gates:
        state = apply_ideal_gate(state, gate, circuit.phi)
    logger.debug(f"Simulated {circuit} on input {bits}")

    return state


def decode_state(layout, anyon):
    """
    Dense logical vector of codespace state `anyon`

    Parameters
    ----------
    layout : QubitLayout
    anyon : SparseFockState

    Returns
    -------
    vector : :obj:`numpy.ndarray`
    """
    vector = np.zeros(2**layout.n_qubits, dtype=complex)
    for bits, amp in encoding.codespace_amplitudes(layout, anyon).items():
        vector[int(bits, 2)] = amp
    return vector


def fidelity(dense, layout, anyon):
    """
    Global-phase-invariant overlap |<dense|decode(anyon)>|^2

    Parameters
    ----------
    dense : DenseState
    layout : QubitLayout
    anyon : SparseFockState

    Returns
    -------
    fidelity : float
        In [0, 1]
    """
    if dense.n_qubits != layout.n_qubits:
        raise ValueError(
            "Dense state has {} qubit(s), layout has {}.".format(
                dense.n_qubits, layout.n_qubits
            )
        )
    overlap = np.vdot(dense.amplitudes, decode_state(layout, anyon))
    return float(min(abs(overlap) ** 2, 1.0))


def equal_up_to_global_phase(a, b, atol=1e-10):
    """
    Whether arrays `a` and `b` agree entrywise after removing one global phase

    Parameters
    ----------
    a, b : array_like
    atol : float, optional
        Absolute entrywise tolerance. Default: 1e-10

    Returns
    -------
    equal : bool
    """
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    idx = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(b[idx]) == 0:
        return bool(np.allclose(a, 0, rtol=0, atol=atol))
    phase = a[idx] / b[idx]
    if abs(phase) == 0:
        return False
    phase /= abs(phase)
    return bool(np.allclose(a, phase * b, rtol=0, atol=atol))
