# -*- coding: utf-8 -*-
"""
Dual-rail encoding of logical qubits: basis-state preparation, readout and
sampling. Qubit 0 is the leftmost character of every bitstring.
"""

from collections import defaultdict
from functools import lru_cache

import numpy as np
from loguru import logger

from braidlab import operations, utils
from braidlab.fock import site_bit


class CodespaceError(ValueError):
    """Raised when a configuration does not encode a logical bitstring"""


def check_bits(bits, n_qubits):
    """
    Coerces `bits` into a '0'/'1' string of length `n_qubits`

    Parameters
    ----------
    bits : str or sequence of int
    n_qubits : int

    Returns
    -------
    bits : str
    """
    if not isinstance(bits, str):
        bits = "".join(str(int(b)) for b in bits)
    if len(bits) != n_qubits:
        raise ValueError(
            "Bitstring {!r} has length {}, expected {}.".format(
                bits, len(bits), n_qubits
            )
        )
    if set(bits) - {"0", "1"}:
        raise ValueError("Bitstring {!r} may only contain '0' and '1'.".format(bits))
    return bits


@lru_cache(maxsize=64)
def _rail_bits(layout):
    rails = [
        (site_bit(layout.rail0(q), layout.shape), site_bit(layout.rail1(q), layout.shape))
        for q in range(layout.n_qubits)
    ]
    mask = 0
    for b0, b1 in rails:
        mask |= b0 | b1
    return rails, mask


def encode_basis(layout, bits, *, phi=np.pi):
    """
    Prepares the encoded basis state `bits`

    Parameters
    ----------
    layout : QubitLayout
    bits : str or sequence of int
        Logical bitstring, qubit 0 leftmost
    phi : float, optional
        Statistical angle of the anyons. Default: pi

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
        One anyon per qubit: on rail0 for a 0, on rail1 for a 1
    """
    bits = check_bits(bits, layout.n_qubits)
    occupied = [
        layout.rail1(q) if b == "1" else layout.rail0(q) for q, b in enumerate(bits)
    ]
    return operations.init_state(layout.shape, occupied, phi=phi)


def decode_configuration(layout, config):
    """
    Returns the logical bitstring encoded by packed `config`

    Parameters
    ----------
    layout : QubitLayout
    config : int

    Returns
    -------
    bits : str

    Raises
    ------
    CodespaceError
        If an anyon sits off the rails, or a qubit has both or neither rail
        occupied
    """
    rails, mask = _rail_bits(layout)
    if config & ~mask:
        raise CodespaceError("state not in codespace: anyon off the qubit rails")
    bits = []
    for q, (b0, b1) in enumerate(rails):
        on0, on1 = bool(config & b0), bool(config & b1)
        if on0 == on1:
            raise CodespaceError(
                "state not in codespace: qubit {} has {} rail(s) occupied".format(
                    q, 2 if on0 else 0
                )
            )
        bits.append("1" if on1 else "0")
    return "".join(bits)


def codespace_amplitudes(layout, state):
    """
    Decodes every configuration of `state` into its logical bitstring

    Parameters
    ----------
    layout : QubitLayout
    state : SparseFockState

    Returns
    -------
    amplitudes : dict
        Bitstring -> complex amplitude, sorted by bitstring
    """
    state = utils.check_state(state, shape=layout.shape)
    amps = {decode_configuration(layout, c): a for c, a in state.terms.items()}
    return dict(sorted(amps.items()))


def readout_distribution(layout, state):
    """
    Born-rule distribution of logical bitstrings in `state`

    Parameters
    ----------
    layout : QubitLayout
    state : SparseFockState

    Returns
    -------
    distribution : dict
        Bitstring -> probability, sorted by bitstring
    """
    state = utils.check_state(state, shape=layout.shape)
    dist = defaultdict(float)
    for config, amp in state.terms.items():
        dist[decode_configuration(layout, config)] += abs(amp) ** 2
    total = sum(dist.values())
    if abs(total - 1) > 1e-12:
        logger.warning(
            f"Readout probabilities sum to {total}; state norm has drifted from 1."
        )
    return dict(sorted(dist.items()))


def sample(layout, state, shots, seed=None):
    """
    Draws `shots` readouts of `state`

    Parameters
    ----------
    layout : QubitLayout
    state : SparseFockState
    shots : int
        Number of readouts
    seed : int, optional
        Random seed; falls back to ``BRAIDLAB_SEED``. Default: None

    Returns
    -------
    counts : dict
        Bitstring -> number of draws, zero counts omitted
    """
    shots = int(shots)
    if shots < 0:
        raise ValueError("Number of shots must be non-negative, got {}.".format(shots))
    dist = readout_distribution(layout, state)
    if shots == 0:
        return {}

    keys = list(dist)
    probs = np.array([dist[k] for k in keys])
    rng = np.random.default_rng(utils.get_seed(seed))
    draws = rng.multinomial(shots, probs / probs.sum())
    logger.info(f"Sampled {shots} shot(s) over {len(keys)} outcome(s)")

    return {k: int(n) for k, n in zip(keys, draws) if n > 0}
