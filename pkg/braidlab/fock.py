# -*- coding: utf-8 -*-
"""
Helper classes for holding the sparse Fock state of a hard-core anyon lattice and
the braiding convention that turns hops into phases
"""

from types import MappingProxyType

import numpy as np
from loguru import logger

from braidlab.geometry import Site, as_site, in_bounds

PRUNE_THRESHOLD = 0.0


def site_bit(site, shape):
    """
    Returns the packed occupancy bit of `site` (row-major order)

    Parameters
    ----------
    site : Site_like
    shape : tuple of int
        (width, height) of the lattice

    Returns
    -------
    bit : int
    """
    site = as_site(site)
    if not in_bounds(site, shape):
        raise ValueError(
            "Site {} outside {}x{} lattice.".format(tuple(site), shape[0], shape[1])
        )
    return 1 << (site.y * shape[0] + site.x)


def pack_sites(sites, shape):
    """Packs an iterable of occupied sites into a configuration integer"""
    config = 0
    for site in sites:
        config |= site_bit(site, shape)
    return config


def unpack_sites(config, shape):
    """Returns the occupied sites of packed `config`, in row-major order"""
    width = shape[0]
    return [
        Site(i % width, i // width)
        for i in range(shape[0] * shape[1])
        if (config >> i) & 1
    ]


def popcount(config):
    """Number of anyons in packed `config`"""
    return bin(config).count("1")


class BraidingConvention:
    """
    Statistical angle plus the string geometry that localizes braid phases

    Every anyon at (x0, y0) carries a string: the vertical ray at column
    x0 - 1/4 running strictly downwards (y < y0). A hop in +x across another
    anyon's string multiplies the amplitude by exp(+i phi); a hop in -x by
    exp(-i phi). Vertical hops cross nothing.

    Parameters
    ----------
    phi : float, optional
        Statistical angle in radians. Default: pi (semions)
    """

    string_offset = -0.25

    def __init__(self, phi=np.pi):
        phi = float(phi)
        if not np.isfinite(phi):
            raise ValueError("Statistical angle must be finite, got {}.".format(phi))
        self._phi = phi

    def __eq__(self, other):
        return isinstance(other, BraidingConvention) and self._phi == other._phi

    def __hash__(self):
        return hash(self._phi)

    def __str__(self):
        return "{name}(phi={phi})".format(name=self.__class__.__name__, phi=self.phi)

    __repr__ = __str__

    @property
    def phi(self):
        """Statistical angle (radians)"""
        return self._phi

    def crosses(self, edge, anyon):
        """Whether directed `edge` crosses the string hanging below `anyon`"""
        anyon = as_site(anyon)
        return (
            edge.horizontal
            and max(edge.a.x, edge.b.x) == anyon.x
            and edge.a.y < anyon.y
        )

    def loop_phase(self, winding):
        """Phase acquired by winding `winding` times around one anyon"""
        return np.exp(1j * self._phi * winding)


class SparseFockState:
    """
    Class to hold the joint state of all lattice modes

    Parameters
    ----------
    terms : dict
        Mapping of packed occupancy configuration (int, row-major bits) to
        complex amplitude
    shape : tuple of int
        (width, height) of the lattice
    convention : BraidingConvention, optional
        Braiding convention used by the hop primitives. Default: phi = pi
    history : list of tuples, optional
        Primitives applied to produce this state. Default: None
    prune : float, optional
        Amplitudes with modulus at or below this value are dropped. Default: 0.0
        (exact zeros only)

    Attributes
    ----------
    terms : mapping
        Read-only view of the configuration -> amplitude map
    shape : tuple of int
        Lattice (width, height)
    n_anyons : int
        Anyon number shared by every configuration
    norm : float
        Sum of squared amplitude moduli
    """

    def __init__(self, terms, shape, *, convention=None, history=None, prune=None):
        self._shape = tuple(int(s) for s in shape)
        if len(self._shape) != 2 or min(self._shape) < 1:
            raise ValueError("Lattice shape must be two positive integers.")
        self._convention = BraidingConvention() if convention is None else convention
        if not isinstance(self._convention, BraidingConvention):
            raise TypeError(
                "Provided convention {} must be a BraidingConvention.".format(convention)
            )
        self._prune = PRUNE_THRESHOLD if prune is None else float(prune)
        self._history = [] if history is None else history
        if not isinstance(self._history, list) or any(
            not isinstance(h, tuple) for h in self._history
        ):
            raise TypeError(
                "Provided history {} must be a list-of-tuples.".format(history)
            )

        limit = 1 << (self._shape[0] * self._shape[1])
        self._terms = {}
        for config, amp in dict(terms).items():
            config = int(config)
            if not 0 <= config < limit:
                raise ValueError(
                    "Configuration {:b} does not fit a {}x{} lattice.".format(
                        config, *self._shape
                    )
                )
            amp = complex(amp)
            if abs(amp) > self._prune:
                self._terms[config] = amp

        counts = {popcount(c) for c in self._terms}
        if len(counts) > 1:
            raise ValueError(
                "All configurations must carry the same anyon number, got {}.".format(
                    sorted(counts)
                )
            )
        self._n_anyons = counts.pop() if counts else 0

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def __contains__(self, config):
        return config in self._terms

    def __getitem__(self, config):
        return self._terms.get(config, 0j)

    def __str__(self):
        return "{name}(support={n}, anyons={a}, shape={shape}, phi={phi})".format(
            name=self.__class__.__name__,
            n=len(self),
            a=self.n_anyons,
            shape=self.shape,
            phi=self.phi,
        )

    __repr__ = __str__

    @property
    def terms(self):
        """Read-only configuration -> amplitude map"""
        return MappingProxyType(self._terms)

    @property
    def shape(self):
        """Lattice (width, height)"""
        return self._shape

    @property
    def convention(self):
        """Braiding convention of the lattice"""
        return self._convention

    @property
    def phi(self):
        """Statistical angle (radians)"""
        return self._convention.phi

    @property
    def prune(self):
        """Amplitude prune threshold"""
        return self._prune

    @property
    def history(self):
        """Primitives that have been applied to produce this state"""
        return self._history

    @property
    def n_anyons(self):
        """Anyon number shared by every configuration"""
        return self._n_anyons

    @property
    def norm(self):
        """Sum of squared amplitude moduli"""
        return float(sum(abs(a) ** 2 for a in self._terms.values()))

    def bit(self, site):
        """Packed occupancy bit of `site`"""
        return site_bit(site, self._shape)

    def occupied(self, config):
        """Occupied sites of `config`"""
        return unpack_sites(config, self._shape)

    def bitstring(self, config):
        """Row-major occupancy bitstring of `config`"""
        n = self._shape[0] * self._shape[1]
        return "".join("1" if (config >> i) & 1 else "0" for i in range(n))

    def dump(self):
        """
        Debug dump of the state

        Returns
        -------
        dump : list of (str, float, float)
            (row-major occupancy bitstring, real part, imaginary part), sorted
            lexicographically by bitstring
        """
        logger.debug(f"Dumping {self}")
        rows = [
            (self.bitstring(c), a.real, a.imag) for c, a in self._terms.items()
        ]
        return sorted(rows)
