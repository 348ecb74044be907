# -*- coding: utf-8 -*-
"""
Functions and classes for summarizing schedules and their execution
"""

from itertools import product

import numpy as np

from braidlab import encoding, operations
from braidlab.schedule import Hop, NPhase, PSwap

AMPLITUDE_FLOOR = 1e-12


class ScheduleStats:
    """
    Class for calculating statistics of a compiled schedule

    Parameters
    ----------
    schedule : Schedule

    Attributes
    ----------
    n_ops : int
        Total number of primitives
    n_nphase : int
        Number-phase pulses
    n_hop : int
        Bare hops
    n_pswap : int
        Partial swaps
    braids : list of (int, int)
        (first op index, hop count) of every braid loop
    n_braids : int
        Number of braid loops
    braid_hops : int
        Hops spent inside braid loops
    shape : tuple of int
        Lattice (width, height)

    Notes
    -----
    A braid loop is a run of at least four consecutive hops, each starting
    where the previous one ended, that returns to its first site.
    """

    def __init__(self, schedule):
        self.schedule = schedule

    @property
    def n_ops(self):
        """Total number of primitives"""
        return len(self.schedule)

    @property
    def n_nphase(self):
        """Number-phase pulses"""
        return sum(isinstance(op, NPhase) for op in self.schedule)

    @property
    def n_hop(self):
        """Bare hops"""
        return sum(isinstance(op, Hop) for op in self.schedule)

    @property
    def n_pswap(self):
        """Partial swaps"""
        return sum(isinstance(op, PSwap) for op in self.schedule)

    @property
    def braids(self):
        """
        (first op index, hop count) of every braid loop

        Heuristic: a braid is a maximal run of at least four chained hops that
        ends where it started. Loops placed back to back with no other op in
        between are reported as a single braid.
        """
        found, chain = [], []

        def _close(chain):
            if len(chain) >= 4 and chain[0][1].source == chain[-1][1].target:
                found.append((chain[0][0], len(chain)))

        for idx, op in enumerate(self.schedule):
            if isinstance(op, Hop) and chain and chain[-1][1].target == op.source:
                chain.append((idx, op))
                continue
            _close(chain)
            chain = [(idx, op)] if isinstance(op, Hop) else []
        _close(chain)

        return found

    @property
    def n_braids(self):
        """Number of braid loops"""
        return len(self.braids)

    @property
    def braid_hops(self):
        """Hops spent inside braid loops"""
        return sum(n for _, n in self.braids)

    @property
    def shape(self):
        """Lattice (width, height)"""
        return self.schedule.shape

    def to_dict(self):
        """JSON-ready summary"""
        return dict(
            ops=dict(
                total=self.n_ops,
                nphase=self.n_nphase,
                hop=self.n_hop,
                pswap=self.n_pswap,
            ),
            braids=self.n_braids,
            braid_hops=self.braid_hops,
            width=self.shape[0],
            height=self.shape[1],
            qubits=self.schedule.layout.n_qubits,
        )


def basis_strings(n_qubits):
    """All `n_qubits`-bit strings, in increasing order"""
    return ["".join(bits) for bits in product("01", repeat=n_qubits)]


def encoded_unitary(schedule):
    """
    Assembles the encoded-subspace matrix of `schedule`

    Column b holds the logical amplitudes produced from encoded basis input b.

    Parameters
    ----------
    schedule : Schedule

    Returns
    -------
    matrix : (2**n, 2**n) :obj:`numpy.ndarray`
    """
    layout = schedule.layout
    size = 2**layout.n_qubits
    matrix = np.zeros((size, size), dtype=complex)
    for col, bits in enumerate(basis_strings(layout.n_qubits)):
        state = encoding.encode_basis(layout, bits, phi=schedule.phi)
        state = operations.execute_schedule(schedule, state)
        for out, amp in encoding.codespace_amplitudes(layout, state).items():
            matrix[int(out, 2), col] = amp
    return matrix


def normalize_global_phase(amplitudes, floor=AMPLITUDE_FLOOR):
    """
    Rotates `amplitudes` so the first (by bitstring) amplitude is real positive

    Parameters
    ----------
    amplitudes : dict
        Bitstring -> complex amplitude
    floor : float, optional
        Amplitudes with smaller modulus are dropped. Default: 1e-12

    Returns
    -------
    amplitudes : dict
        Bitstring -> complex amplitude, sorted by bitstring
    """
    kept = {k: complex(v) for k, v in sorted(amplitudes.items()) if abs(v) >= floor}
    if not kept:
        return kept
    first = next(iter(kept.values()))
    rotate = np.conj(first) / abs(first)
    return {k: v * rotate for k, v in kept.items()}


class RunReport:
    """
    Outcome of running a schedule on one encoded input

    Parameters
    ----------
    bits : str
        Input bitstring
    stats : ScheduleStats
        Statistics of the schedule that was run
    distribution : dict, optional
        Readout distribution. Default: None
    counts : dict, optional
        Sampled readout counts. Default: None
    amplitudes : dict, optional
        Codespace amplitudes. Default: None
    fidelity : float, optional
        Fidelity against the dense oracle. Default: None
    wall_time : float, optional
        Seconds spent executing. Default: None
    """

    def __init__(
        self,
        bits,
        stats,
        *,
        distribution=None,
        counts=None,
        amplitudes=None,
        fidelity=None,
        wall_time=None,
    ):
        if distribution is not None and abs(sum(distribution.values()) - 1) > 1e-9:
            raise ValueError(
                "Readout distribution sums to {}.".format(sum(distribution.values()))
            )
        self.bits = bits
        self.stats = stats
        self.distribution = distribution
        self.counts = counts
        self.amplitudes = amplitudes
        self.fidelity = fidelity
        self.wall_time = wall_time

    def to_dict(self):
        """JSON-ready report; amplitudes as [re, im] with normalized global phase"""
        out = dict(input=self.bits, ops=self.stats.to_dict()["ops"])
        if self.distribution is not None:
            out["distribution"] = {
                k: p for k, p in self.distribution.items() if p >= AMPLITUDE_FLOOR**2
            }
        if self.counts is not None:
            out["counts"] = dict(self.counts)
        if self.amplitudes is not None:
            out["amplitudes"] = {
                k: [v.real, v.imag]
                for k, v in normalize_global_phase(self.amplitudes).items()
            }
        if self.fidelity is not None:
            out["fidelity"] = self.fidelity
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out
