"""
Utilities for testing
"""

from collections import deque
from os.path import dirname
from os.path import join as pjoin

import numpy as np

from braidlab import operations, utils
from braidlab.circuit import CircuitIR, gate
from braidlab.fock import pack_sites
from braidlab.geometry import Site, as_site, lattice_neighbours

ANGLES = [np.pi / 2, np.pi, -np.pi / 4, 0.3, 1.234]


def get_test_data_path(fname=None):
    """Function for getting `braidlab` test data path"""
    path = pjoin(dirname(__file__), "data")
    return pjoin(path, fname) if fname is not None else path


def random_circuit(n_qubits, depth, rng, phi=np.pi):
    """
    Draws a circuit of `depth` gates; two-qubit gates only when `n_qubits` > 1

    At phi = pi the whole gate set is used, otherwise only rotations, fixed
    single-qubit gates and cphase
    """
    single = ["h", "x", "y", "z", "s", "t", "rz", "rx"]
    double = ["cz", "cnot", "cphase"] if np.isclose(phi, np.pi) else ["cphase"]
    gates = []
    for _ in range(depth):
        if n_qubits > 1 and rng.random() < 0.4:
            kind = double[int(rng.integers(len(double)))]
            c, t = (int(q) for q in rng.choice(n_qubits, size=2, replace=False))
            windings = int(rng.choice([-2, -1, 1, 2])) if kind == "cphase" else 1
            gates.append(gate(kind, c, t, windings=windings))
        else:
            kind = single[int(rng.integers(len(single)))]
            q = int(rng.integers(n_qubits))
            theta = float(rng.choice(ANGLES)) if kind in ("rz", "rx") else None
            gates.append(gate(kind, q, theta=theta))
    return CircuitIR(n_qubits, phi, gates)


def shortest_path(start, goal, blocked, shape):
    """Breadth-first lattice path from `start` to `goal` avoiding `blocked`"""
    start, goal = as_site(start), as_site(goal)
    prev = {start: None}
    queue = deque([start])
    while queue:
        here = queue.popleft()
        if here == goal:
            break
        for nxt in lattice_neighbours(here, shape):
            if nxt not in prev and nxt not in blocked:
                prev[nxt] = here
                queue.append(nxt)
    if goal not in prev:
        return None
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def random_closed_path(start, blocked, shape, rng, steps=30):
    """
    Random walk of `steps` hops from `start`, closed by a shortest path back

    Returns
    -------
    sites : list of Site
        Closed walk avoiding `blocked`
    """
    start = as_site(start)
    walk = [start]
    for _ in range(steps):
        options = [s for s in lattice_neighbours(walk[-1], shape) if s not in blocked]
        walk.append(options[int(rng.integers(len(options)))])
    back = shortest_path(walk[-1], start, blocked, shape)
    return walk + back[1:]


def random_sites(shape, count, rng):
    """`count` distinct random sites of the lattice"""
    flat = rng.choice(shape[0] * shape[1], size=count, replace=False)
    return [Site(int(i % shape[0]), int(i // shape[0])) for i in flat]


def random_state(shape, n_anyons, rng, *, n_terms=6, phi=np.pi, edge=None):
    """
    Normalized superposition of up to `n_terms` random configurations

    When `edge` is given every configuration holds exactly one anyon on its two
    sites, so hops along it never collide
    """
    free = [Site(x, y) for y in range(shape[1]) for x in range(shape[0])]
    if edge is not None:
        edge = [as_site(s) for s in edge]
        free = [s for s in free if s not in edge]
    terms = {}
    for _ in range(n_terms):
        count = n_anyons - (edge is not None)
        idx = rng.choice(len(free), size=count, replace=False)
        sites = [free[i] for i in idx]
        if edge is not None:
            sites.append(edge[int(rng.integers(2))])
        terms[pack_sites(sites, shape)] = complex(rng.normal(), rng.normal())
    scale = np.sqrt(sum(abs(a) ** 2 for a in terms.values()))
    base = operations.init_state(shape, phi=phi)
    return utils.new_state_like(base, {c: a / scale for c, a in terms.items()})
