# -*- coding: utf-8 -*-
"""
Primitives evolving the sparse Fock state of a hard-core anyon lattice
"""

from collections import defaultdict
from functools import lru_cache

import numpy as np
from loguru import logger

from braidlab import fock, utils
from braidlab.geometry import Edge, as_site
from braidlab.schedule import Hop, NPhase, PSwap


class CollisionError(ValueError):
    """Raised when a hop would move an anyon onto an occupied site"""


@lru_cache(maxsize=None)
def _string_mask(column, row, width, height):
    # sites whose strings pass through (column - 1/4, row)
    mask = 0
    for y in range(row + 1, height):
        mask |= 1 << (y * width + column)
    return mask


def init_state(shape, occupied=(), *, phi=np.pi, prune=None):
    """
    Returns a single-configuration state with amplitude 1

    Parameters
    ----------
    shape : tuple of int
        (width, height) of the lattice
    occupied : iterable of Site_like, optional
        Sites holding an anyon. Default: empty lattice
    phi : float, optional
        Statistical angle of the anyons (radians). Default: pi
    prune : float, optional
        Amplitude prune threshold. Default: 0.0

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
    """
    occupied = sorted({as_site(s) for s in occupied}, key=lambda s: (s.y, s.x))
    config = fock.pack_sites(occupied, shape)
    history = [
        (
            "init_state",
            dict(
                occupied=[list(s) for s in occupied],
                phi=float(phi),
                prune=prune,
                shape=[int(s) for s in shape],
            ),
        )
    ]
    state = fock.SparseFockState(
        {config: 1.0},
        shape,
        convention=fock.BraidingConvention(phi),
        history=history,
        prune=prune,
    )
    logger.debug(f"Initialized {state}")
    return state


def string_crossing_phase(convention, edge, config, shape):
    """
    Phase picked up by an anyon hopping along `edge` in configuration `config`

    Parameters
    ----------
    convention : BraidingConvention
    edge : Edge or (Site_like, Site_like)
        Directed hop; the anyon sits at ``edge.a`` and is excluded from the
        string census
    config : int
        Packed occupancy configuration before the hop
    shape : tuple of int
        (width, height) of the lattice

    Returns
    -------
    phase : complex
        Unit-modulus factor, exactly 1 for vertical hops
    """
    if not isinstance(edge, Edge):
        edge = Edge(*edge)
    if not edge.horizontal:
        return 1 + 0j
    mask = _string_mask(max(edge.a.x, edge.b.x), edge.a.y, shape[0], shape[1])
    mask &= ~fock.site_bit(edge.a, shape)
    count = fock.popcount(config & mask)
    if count == 0:
        return 1 + 0j
    return complex(np.exp(1j * np.sign(edge.dx) * convention.phi * count))


@utils.make_operation()
def apply_number_phase(state, site, theta):
    """
    Evolves `state` under the number operator at `site`, exp(-i theta n_site)

    Parameters
    ----------
    state : SparseFockState
    site : Site_like
    theta : float
        Pulse angle (radians)

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
    """
    state = utils.check_state(state)
    bit = state.bit(site)
    factor = complex(np.exp(-1j * theta))
    terms = {c: (a * factor if c & bit else a) for c, a in state.terms.items()}

    return utils.new_state_like(state, terms)


@utils.make_operation()
def apply_hop(state, source, target):
    """
    Swaps the occupations of adjacent sites `source` and `target`

    The moving component picks up the string-crossing phase of its directed
    hop. Terms with both sites empty are unchanged.

    Parameters
    ----------
    state : SparseFockState
    source, target : Site_like
        Adjacent lattice sites

    Returns
    -------
    state : :class:`braidlab.SparseFockState`

    Raises
    ------
    CollisionError
        If any term has both sites occupied
    """
    state = utils.check_state(state)
    edge = Edge(source, target)
    bit_a, bit_b = state.bit(edge.a), state.bit(edge.b)
    both = bit_a | bit_b

    terms = {}
    for config, amp in state.terms.items():
        occ = config & both
        if occ == 0:
            terms[config] = amp
        elif occ == both:
            raise CollisionError(
                "hard-core collision: hop {} -> {} with both sites occupied".format(
                    tuple(edge.a), tuple(edge.b)
                )
            )
        else:
            mover = edge if occ == bit_a else edge.reverse()
            gamma = string_crossing_phase(state.convention, mover, config, state.shape)
            terms[config ^ both] = amp * gamma

    return utils.new_state_like(state, terms)


@utils.make_operation()
def apply_partial_swap(state, a, b, theta):
    """
    Evolves `state` under the hopping Hamiltonian of adjacent sites `a` and
    `b`, exp(-i theta B_ab / 2)

    On the one-anyon span each term becomes cos(theta/2) (stay) - i
    sin(theta/2) gamma (move), with gamma the string-crossing phase of the
    move. Empty and doubly occupied pairs are unchanged.

    Parameters
    ----------
    state : SparseFockState
    a, b : Site_like
        Adjacent lattice sites
    theta : float
        Rotation angle (radians)

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
    """
    state = utils.check_state(state)
    edge = Edge(a, b)
    bit_a, bit_b = state.bit(edge.a), state.bit(edge.b)
    both = bit_a | bit_b
    stay, move = np.cos(theta / 2), -1j * np.sin(theta / 2)

    terms = defaultdict(complex)
    for config, amp in state.terms.items():
        occ = config & both
        if occ == 0 or occ == both:
            terms[config] += amp
            continue
        mover = edge if occ == bit_a else edge.reverse()
        gamma = string_crossing_phase(state.convention, mover, config, state.shape)
        terms[config] += stay * amp
        terms[config ^ both] += move * gamma * amp

    return utils.new_state_like(state, terms)


def inner_product(state1, state2):
    """
    Computes <state1|state2>

    Parameters
    ----------
    state1, state2 : SparseFockState
        States on the same lattice

    Returns
    -------
    overlap : complex
    """
    state1 = utils.check_state(state1)
    state2 = utils.check_state(state2, shape=state1.shape)
    small, large = (state1, state2) if len(state1) <= len(state2) else (state2, state1)
    overlap = sum(
        np.conj(state1[c]) * state2[c] for c in small.terms if c in large
    )
    return complex(overlap)


def execute_schedule(schedule, state, *, monitor=None):
    """
    Applies every primitive of `schedule` to `state`, in order

    Parameters
    ----------
    schedule : :class:`braidlab.Schedule`
    state : SparseFockState
        Input state on the schedule's lattice, with the schedule's phi
    monitor : callable, optional
        Called as ``monitor(index, op, state)`` after each primitive.
        Default: None

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
    """
    state = utils.check_state(state, shape=schedule.shape)
    if not np.isclose(state.phi, schedule.phi, rtol=0, atol=1e-12):
        raise ValueError(
            "State phi {} does not match schedule phi {}.".format(
                state.phi, schedule.phi
            )
        )

    logger.debug(f"Executing {schedule} on {state}")
    for idx, op in enumerate(schedule.ops):
        try:
            if isinstance(op, NPhase):
                state = apply_number_phase(state, op.site, op.theta)
            elif isinstance(op, Hop):
                state = apply_hop(state, op.source, op.target)
            elif isinstance(op, PSwap):
                state = apply_partial_swap(state, op.a, op.b, op.theta)
        except CollisionError as err:
            raise CollisionError("op {}: {}".format(idx, err)) from err
        if monitor is not None:
            monitor(idx, op, state)

    return state
