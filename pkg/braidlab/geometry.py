# -*- coding: utf-8 -*-
"""
Integer-grid geometry: sites, directed edges, lattice paths, winding numbers and
the planning of qubit layouts and braid loops
"""

from collections import namedtuple

import numpy as np
from loguru import logger

DEFAULT_SPACING = 3

Site = namedtuple("Site", ("x", "y"))


def as_site(value):
    """
    Coerces `value` into a :class:`Site`

    Parameters
    ----------
    value : Site or (2,) array_like of int

    Returns
    -------
    site : Site
    """
    if isinstance(value, Site):
        return value
    try:
        x, y = value
    except (TypeError, ValueError):
        raise TypeError("Cannot interpret {!r} as a lattice site.".format(value))
    if int(x) != x or int(y) != y:
        raise ValueError("Site coordinates must be integers, got {!r}.".format(value))
    return Site(int(x), int(y))


def in_bounds(site, shape):
    """Whether `site` lies on a lattice of (width, height) `shape`"""
    return 0 <= site.x < shape[0] and 0 <= site.y < shape[1]


def lattice_neighbours(site, shape):
    """Returns the in-bounds nearest neighbours of `site` (E, N, W, S order)"""
    site = as_site(site)
    steps = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    cands = [Site(site.x + dx, site.y + dy) for dx, dy in steps]
    return [c for c in cands if in_bounds(c, shape)]


def anyon_point(site):
    """
    Returns the winding test point standing for an anyon at `site`

    The point is offset by a quarter lattice unit in both directions, so it never
    lies on a lattice edge; a closed lattice path that avoids `site` winds around
    this point exactly as often as around `site` itself.

    Parameters
    ----------
    site : Site

    Returns
    -------
    point : tuple of float
    """
    site = as_site(site)
    return (site.x - 0.25, site.y - 0.25)


class Edge(namedtuple("Edge", ("a", "b"))):
    """Directed nearest-neighbour edge from `a` to `b`"""

    __slots__ = ()

    def __new__(cls, a, b):
        a, b = as_site(a), as_site(b)
        if abs(a.x - b.x) + abs(a.y - b.y) != 1:
            raise ValueError(
                "Sites {} and {} are not nearest neighbours.".format(tuple(a), tuple(b))
            )
        return super().__new__(cls, a, b)

    @property
    def horizontal(self):
        """Whether the edge runs along a row"""
        return self.a.y == self.b.y

    @property
    def dx(self):
        """Signed column step of the edge (0 for vertical edges)"""
        return self.b.x - self.a.x

    def reverse(self):
        """Returns the edge traversed in the opposite direction"""
        return Edge(self.b, self.a)


class LatticePath:
    """
    Ordered walk over nearest-neighbour lattice sites

    Parameters
    ----------
    sites : sequence of Site_like
        Visited sites; consecutive entries must be nearest neighbours

    Attributes
    ----------
    sites : tuple of Site
        Visited sites, in order
    closed : bool
        Whether the walk returns to its first site
    """

    def __init__(self, sites):
        self._sites = tuple(as_site(s) for s in sites)
        if len(self._sites) == 0:
            raise ValueError("A lattice path needs at least one site.")
        if len(self._sites) > 1:
            steps = np.abs(np.diff(np.asarray(self._sites), axis=0)).sum(axis=1)
            bad = np.flatnonzero(steps != 1)
            if bad.size:
                i = bad[0]
                raise ValueError(
                    "Path steps {} -> {} (index {}) are not nearest neighbours.".format(
                        tuple(self._sites[i]), tuple(self._sites[i + 1]), i
                    )
                )

    def __len__(self):
        return len(self._sites)

    def __iter__(self):
        return iter(self._sites)

    def __getitem__(self, idx):
        return self._sites[idx]

    def __eq__(self, other):
        return isinstance(other, LatticePath) and self._sites == other._sites

    def __hash__(self):
        return hash(self._sites)

    def __add__(self, other):
        other = other if isinstance(other, LatticePath) else LatticePath(other)
        if self._sites[-1] != other._sites[0]:
            raise ValueError("Concatenated paths must share an endpoint.")
        return LatticePath(self._sites + other._sites[1:])

    def __str__(self):
        return "{name}(length={n}, closed={closed})".format(
            name=self.__class__.__name__, n=len(self), closed=self.closed
        )

    __repr__ = __str__

    @property
    def sites(self):
        """Visited sites, in order"""
        return self._sites

    @property
    def closed(self):
        """Whether the walk returns to its first site"""
        return len(self._sites) > 1 and self._sites[0] == self._sites[-1]

    @property
    def edges(self):
        """Directed edges traversed by the walk"""
        return [Edge(a, b) for a, b in zip(self._sites[:-1], self._sites[1:])]

    def reverse(self):
        """Returns the walk traversed backwards"""
        return LatticePath(self._sites[::-1])


def winding_number(path, point):
    """
    Counts the signed counter-clockwise turns of closed `path` around `point`

    Crossings of the downward vertical ray from `point` with horizontal path edges
    are summed: +1 for an edge heading in +x, -1 for -x. Self-intersecting and
    retraced paths are handled exactly.

    Parameters
    ----------
    path : LatticePath or sequence of Site_like
        Closed lattice path
    point : (2,) array_like of float
        Test point; use :func:`anyon_point` for anyons

    Returns
    -------
    winding : int

    Raises
    ------
    ValueError
        If `path` is not closed or `point` lies on (or is collinear with) an edge
    """
    if not isinstance(path, LatticePath):
        path = LatticePath(path)
    if not path.closed:
        raise ValueError("path not closed")

    px, py = float(point[0]), float(point[1])
    pts = np.asarray(path.sites, dtype=float)
    a, b = pts[:-1], pts[1:]

    if px.is_integer() and np.any((pts[:, 0] == px) & (pts[:, 1] <= py)):
        raise ValueError("degenerate point")

    horizontal = a[:, 1] == b[:, 1]
    spans = (
        horizontal
        & (np.minimum(a[:, 0], b[:, 0]) < px)
        & (px < np.maximum(a[:, 0], b[:, 0]))
    )
    if py.is_integer() and np.any(spans & (a[:, 1] == py)):
        raise ValueError("degenerate point")

    below = spans & (a[:, 1] < py)
    return int(np.sum(np.sign(b[below, 0] - a[below, 0])))


class QubitLayout:
    """
    Placement of each logical qubit's rail and gate-ancilla sites on the lattice

    Parameters
    ----------
    width, height : int
        Lattice dimensions
    qubits : list of (rail0, ancilla, rail1)
        Sites of each qubit; the three sites share a column and are vertically
        consecutive, rail0 lowest

    Attributes
    ----------
    shape : tuple of int
        (width, height)
    n_qubits : int
        Number of encoded qubits
    """

    def __init__(self, width, height, qubits):
        self._shape = (int(width), int(height))
        self._qubits = tuple(tuple(as_site(s) for s in q) for q in qubits)
        if any(len(q) != 3 for q in self._qubits):
            raise ValueError("Each qubit needs exactly rail0, ancilla and rail1 sites.")

        sites = [s for q in self._qubits for s in q]
        for s in sites:
            if not in_bounds(s, self._shape):
                raise ValueError(
                    "Site {} outside {}x{} lattice.".format(tuple(s), *self._shape)
                )
        if len(set(sites)) != len(sites):
            raise ValueError("Qubit rail and ancilla sites must be pairwise distinct.")
        for rail0, ancilla, rail1 in self._qubits:
            if not (
                rail0.x == ancilla.x == rail1.x
                and ancilla.y == rail0.y + 1
                and rail1.y == rail0.y + 2
            ):
                raise ValueError(
                    "Qubit sites {} must be vertically consecutive in one "
                    "column.".format([tuple(rail0), tuple(ancilla), tuple(rail1)])
                )
        cols = sorted(q[0].x for q in self._qubits)
        if np.any(np.diff(cols) < DEFAULT_SPACING):
            raise ValueError("insufficient corridor spacing")

    def __len__(self):
        return self.n_qubits

    def __eq__(self, other):
        return (
            isinstance(other, QubitLayout)
            and self._shape == other._shape
            and self._qubits == other._qubits
        )

    def __hash__(self):
        return hash((self._shape, self._qubits))

    def __str__(self):
        return "{name}(n_qubits={n}, shape={shape})".format(
            name=self.__class__.__name__, n=self.n_qubits, shape=self.shape
        )

    __repr__ = __str__

    @property
    def shape(self):
        """(width, height) of the lattice"""
        return self._shape

    @property
    def n_qubits(self):
        """Number of encoded qubits"""
        return len(self._qubits)

    def rail0(self, q):
        """Site holding the anyon of qubit `q` in logical 0"""
        return self._qubits[q][0]

    def ancilla(self, q):
        """Gate-ancilla site of qubit `q`"""
        return self._qubits[q][1]

    def rail1(self, q):
        """Site holding the anyon of qubit `q` in logical 1"""
        return self._qubits[q][2]

    def column(self, q):
        """Lattice column of qubit `q`"""
        return self._qubits[q][0].x

    @property
    def reserved(self):
        """Every rail and ancilla site of the layout"""
        return frozenset(s for q in self._qubits for s in q)

    def to_dict(self):
        """JSON-ready description of the layout"""
        return dict(
            width=self._shape[0],
            height=self._shape[1],
            qubits=[
                dict(rail0=list(r0), ancilla=list(anc), rail1=list(r1))
                for r0, anc, r1 in self._qubits
            ],
        )

    @classmethod
    def from_dict(cls, info):
        """Builds a layout from :meth:`to_dict` output"""
        try:
            qubits = [(q["rail0"], q["ancilla"], q["rail1"]) for q in info["qubits"]]
            return cls(info["width"], info["height"], qubits)
        except (KeyError, TypeError):
            raise ValueError("Malformed layout description: {!r}".format(info))


def plan_layout(n_qubits, spacing=DEFAULT_SPACING):
    """
    Places `n_qubits` dual-rail qubits on a single line

    Qubit `q` occupies column ``spacing * q + 1``, with rail0 at row 1, its
    ancilla at row 2 and rail1 at row 3; rows 0, 2 and 4 serve as corridors.

    Parameters
    ----------
    n_qubits : int
        Number of qubits, at least 1
    spacing : int, optional
        Columns per qubit; braid loops need a free column on each side of a rail.
        Default: 3

    Returns
    -------
    layout : QubitLayout
    """
    if int(n_qubits) < 1:
        raise ValueError("Layout needs at least one qubit, got {}.".format(n_qubits))
    if int(spacing) < DEFAULT_SPACING:
        raise ValueError("insufficient corridor spacing")

    qubits = []
    for q in range(int(n_qubits)):
        col = spacing * q + 1
        qubits.append((Site(col, 1), Site(col, 2), Site(col, 3)))
    layout = QubitLayout(spacing * n_qubits + 2, 5, qubits)
    logger.debug(f"Planned {layout}")

    return layout


def _enclosing_ring(cx, low, high):
    """Counter-clockwise ring of sites around column `cx`, from (cx-1, low)"""
    ring = [Site(x, low) for x in (cx - 1, cx, cx + 1)]
    ring += [Site(cx + 1, y) for y in range(low + 1, high + 1)]
    ring += [Site(x, high) for x in (cx, cx - 1)]
    ring += [Site(cx - 1, y) for y in range(high - 1, low, -1)]
    return ring


def plan_braid_loop(layout, source, target, orientation="ccw", *, turns=1):
    """
    Plans a closed hop path carrying qubit `source`'s rail0 contents around
    qubit `target`'s rail0 site

    The path leaves the source rail0 downwards, travels along the corridor row
    to the target, circles the target rail0 `turns` times (passing between the
    target's two rails through its ancilla site) and retraces its way back. The
    retraced transit winds around nothing.

    Parameters
    ----------
    layout : QubitLayout
    source, target : int
        Qubit indices
    orientation : {'ccw', 'cw'}, optional
        Direction of the loop around the target. Default: 'ccw'
    turns : int, optional
        Number of times the loop circles the target. Default: 1

    Returns
    -------
    path : LatticePath
        Closed path starting and ending at the source rail0
    """
    _valid_orientations = ["ccw", "cw"]

    if orientation not in _valid_orientations:
        raise ValueError(
            "Provided orientation {} is not permitted; must be in {}.".format(
                orientation, _valid_orientations
            )
        )
    for q in (source, target):
        if not 0 <= q < layout.n_qubits:
            raise ValueError(
                "Qubit index {} out of range for {}.".format(q, layout)
            )
    if source == target:
        raise ValueError("self-braid")
    if int(turns) < 1:
        raise ValueError("Braid loops need at least one turn, got {}.".format(turns))

    start, goal = layout.rail0(source), layout.rail0(target)
    row = start.y - 1
    if row < 0 or goal.y - 1 != row:
        raise ValueError("no corridor")

    cx, top = goal.x, layout.ancilla(target).y
    ring = _enclosing_ring(cx, row, top)
    entry = 0 if start.x < cx else 2
    ring = ring[entry:] + ring[:entry]
    if orientation == "cw":
        ring = [ring[0]] + ring[:0:-1]
    loop = ring * int(turns) + [ring[0]]

    step = 1 if ring[0].x > start.x else -1
    transit = [Site(x, row) for x in range(start.x, ring[0].x, step)]
    sites = [start] + transit + loop + transit[::-1] + [start]

    allowed = {start, layout.ancilla(target)}
    for s in sites:
        if not in_bounds(s, layout.shape) or (s in layout.reserved and s not in allowed):
            raise ValueError("no corridor")

    path = LatticePath(sites)
    logger.debug(
        f"Braid loop {source}->{target} ({orientation}, {turns} turn(s)): {len(path) - 1} hops"
    )
    return path


def perturb_path(path, forbidden, shape, rng, n_detours=5):
    """
    Inserts random detours into `path` without changing its winding about any
    lattice site

    Detours are either retraced spurs (step to a free neighbour and back) or
    loops around a unit plaquette whose corners are all free.

    Parameters
    ----------
    path : LatticePath
    forbidden : iterable of Site_like
        Sites detours must not visit
    shape : tuple of int
        (width, height) of the lattice
    rng : :class:`numpy.random.Generator`
    n_detours : int, optional
        Number of detours to attempt. Default: 5

    Returns
    -------
    path : LatticePath
    """
    sites = list(path.sites)
    blocked = {as_site(s) for s in forbidden}

    def _free(site):
        return in_bounds(site, shape) and site not in blocked

    for _ in range(int(n_detours)):
        i = int(rng.integers(len(sites)))
        here = sites[i]
        if rng.random() < 0.5:
            options = [s for s in lattice_neighbours(here, shape) if s not in blocked]
            if not options:
                continue
            spur = options[int(rng.integers(len(options)))]
            detour = [spur, here]
        else:
            dx, dy = (int(v) for v in rng.choice([-1, 1], size=2))
            corners = [
                Site(here.x + dx, here.y),
                Site(here.x + dx, here.y + dy),
                Site(here.x, here.y + dy),
            ]
            if not all(_free(c) for c in corners):
                continue
            if rng.random() < 0.5:
                corners = corners[::-1]
            detour = corners + [here]
        sites[i + 1 : i + 1] = detour

    return LatticePath(sites)
