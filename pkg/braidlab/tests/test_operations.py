# -*- coding: utf-8 -*-

import numpy as np
import pytest

from braidlab import geometry, operations
from braidlab.fock import BraidingConvention, pack_sites
from braidlab.geometry import Edge
from braidlab.operations import CollisionError
from braidlab.schedule import Hop, NPhase, PSwap, Schedule
from braidlab.tests import utils as testutils

SHAPE = (4, 4)


def test_init_state():
    state = operations.init_state(SHAPE, [(1, 2), (0, 0)], phi=0.7)
    assert len(state) == 1
    assert state[pack_sites([(0, 0), (1, 2)], SHAPE)] == 1
    assert state.phi == 0.7
    assert state.history == [
        (
            "init_state",
            dict(occupied=[[0, 0], [1, 2]], phi=0.7, prune=None, shape=[4, 4]),
        )
    ]
    empty = operations.init_state(SHAPE)
    assert empty.n_anyons == 0 and empty[0] == 1
    with pytest.raises(ValueError):
        operations.init_state(SHAPE, [(4, 0)])


def test_string_crossing_phase():
    conv = BraidingConvention(0.7)
    config = pack_sites([(0, 0), (1, 2), (1, 3)], SHAPE)
    # two strings hang through (3/4, 0)
    assert np.isclose(
        operations.string_crossing_phase(conv, Edge((0, 0), (1, 0)), config, SHAPE),
        np.exp(2j * 0.7),
    )
    assert np.isclose(
        operations.string_crossing_phase(conv, ((1, 0), (0, 0)), config, SHAPE),
        np.exp(-2j * 0.7),
    )
    # only the anyon above row 2 counts on row 2; the mover itself never does
    assert np.isclose(
        operations.string_crossing_phase(conv, Edge((1, 2), (0, 2)), config, SHAPE),
        np.exp(-1j * 0.7),
    )
    assert operations.string_crossing_phase(
        conv, Edge((0, 0), (0, 1)), config, SHAPE
    ) == 1


def test_apply_number_phase():
    state = operations.init_state(SHAPE, [(1, 1)])
    out = operations.apply_number_phase(state, (1, 1), 0.3)
    assert np.isclose(out[state.bit((1, 1))], np.exp(-0.3j))
    same = operations.apply_number_phase(state, (2, 2), 0.3)
    assert same[state.bit((1, 1))] == 1
    assert out.history[-1] == ("apply_number_phase", dict(site=[1, 1], theta=0.3))
    # inputs are never mutated
    assert len(state.history) == 1


def test_apply_hop():
    state = operations.init_state(SHAPE, [(0, 0)])
    out = operations.apply_hop(state, (0, 0), (1, 0))
    assert out[state.bit((1, 0))] == 1
    back = operations.apply_hop(out, (1, 0), (0, 0))
    assert back[state.bit((0, 0))] == 1
    assert [h[0] for h in back.history] == ["init_state", "apply_hop", "apply_hop"]
    # hops between empty sites leave the state alone
    idle = operations.apply_hop(state, (2, 2), (2, 3))
    assert dict(idle.terms) == dict(state.terms)


def test_apply_hop_collision():
    state = operations.init_state(SHAPE, [(0, 0), (1, 0)])
    with pytest.raises(CollisionError, match="hard-core collision"):
        operations.apply_hop(state, (0, 0), (1, 0))
    with pytest.raises(ValueError):
        operations.apply_hop(state, (0, 0), (2, 0))


def test_braid_phase():
    # one anyon carried counter-clockwise around another: exp(i phi)
    phi = 2 * np.pi / 3
    state = operations.init_state(SHAPE, [(0, 0), (1, 1)], phi=phi)
    loop = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1), (0, 0)]
    out = state
    for a, b in zip(loop[:-1], loop[1:]):
        out = operations.apply_hop(out, a, b)
    assert np.isclose(operations.inner_product(state, out), np.exp(1j * phi))
    # and clockwise: exp(-i phi)
    out = state
    for a, b in zip(loop[::-1][:-1], loop[::-1][1:]):
        out = operations.apply_hop(out, a, b)
    assert np.isclose(operations.inner_product(state, out), np.exp(-1j * phi))


def test_apply_partial_swap():
    state = operations.init_state(SHAPE, [(1, 1)])
    half = operations.apply_partial_swap(state, (1, 1), (1, 2), np.pi / 2)
    assert np.isclose(half[state.bit((1, 1))], 1 / np.sqrt(2))
    assert np.isclose(half[state.bit((1, 2))], -1j / np.sqrt(2))
    assert np.isclose(half.norm, 1)
    full = operations.apply_partial_swap(half, (1, 1), (1, 2), np.pi / 2)
    assert np.isclose(full[state.bit((1, 2))], -1j)
    # doubly occupied and empty pairs are fixed points
    pair = operations.init_state(SHAPE, [(1, 1), (1, 2)])
    assert dict(operations.apply_partial_swap(pair, (1, 1), (1, 2), 1.0).terms) == dict(
        pair.terms
    )


@pytest.mark.parametrize("phi", [np.pi, 2 * np.pi / 3, 0.7])
def test_partial_swap_pi_is_hop(phi):
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = testutils.random_sites(SHAPE, 1, rng)[0]
        b = geometry.lattice_neighbours(a, SHAPE)[int(rng.integers(2))]
        state = testutils.random_state(SHAPE, 3, rng, phi=phi, edge=(a, b))
        swapped = operations.apply_partial_swap(state, a, b, np.pi)
        hopped = operations.apply_hop(state, a, b)
        for config in set(swapped.terms) | set(hopped.terms):
            assert abs(swapped[config] - (-1j) * hopped[config]) < 1e-12


def test_primitives_preserve_overlaps():
    rng = np.random.default_rng(12)
    for _ in range(20):
        a = testutils.random_sites(SHAPE, 1, rng)[0]
        b = geometry.lattice_neighbours(a, SHAPE)[0]
        first = testutils.random_state(SHAPE, 3, rng, phi=0.7, edge=(a, b))
        second = testutils.random_state(SHAPE, 3, rng, phi=0.7, edge=(a, b))
        before = operations.inner_product(first, second)
        theta = float(rng.uniform(-np.pi, np.pi))
        for apply in [
            lambda s: operations.apply_hop(s, a, b),
            lambda s: operations.apply_partial_swap(s, a, b, theta),
            lambda s: operations.apply_number_phase(s, a, theta),
        ]:
            out1, out2 = apply(first), apply(second)
            assert abs(out1.norm - 1) < 1e-12
            assert abs(operations.inner_product(out1, out2) - before) < 1e-12


def test_inner_product():
    a = operations.init_state(SHAPE, [(0, 0)])
    b = operations.init_state(SHAPE, [(1, 0)])
    assert operations.inner_product(a, b) == 0
    c = operations.apply_partial_swap(a, (0, 0), (1, 0), np.pi / 2)
    assert np.isclose(operations.inner_product(b, c), -1j / np.sqrt(2))
    assert np.isclose(operations.inner_product(c, b), 1j / np.sqrt(2))
    with pytest.raises(ValueError):
        operations.inner_product(a, operations.init_state((3, 3)))


def test_execute_schedule():
    layout = geometry.plan_layout(1)
    ops = [NPhase((1, 3), 0.5), Hop((1, 3), (1, 2)), PSwap((1, 1), (1, 2), np.pi)]
    schedule = Schedule(layout, np.pi, ops)
    state = operations.init_state(layout.shape, [(1, 1)])
    seen = []
    out = operations.execute_schedule(
        schedule, state, monitor=lambda i, op, s: seen.append((i, s.n_anyons))
    )
    assert seen == [(0, 1), (1, 1), (2, 1)]
    assert np.isclose(out[state.bit((1, 2))], -1j)
    assert len(out.history) == 4

    with pytest.raises(ValueError):
        operations.execute_schedule(
            schedule, operations.init_state(layout.shape, [(1, 1)], phi=0.7)
        )
    with pytest.raises(ValueError):
        operations.execute_schedule(schedule, operations.init_state((3, 3)))

    crash = Schedule(layout, np.pi, [Hop((1, 1), (1, 2))])
    blocked = operations.init_state(layout.shape, [(1, 1), (1, 2)])
    with pytest.raises(CollisionError, match="op 0"):
        operations.execute_schedule(crash, blocked)
