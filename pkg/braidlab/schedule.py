# -*- coding: utf-8 -*-
"""
Primitive lattice operations and the schedules that order them
"""

from collections import namedtuple

import numpy as np

from braidlab.geometry import QubitLayout, as_site

NPhase = namedtuple("NPhase", ("site", "theta"))
NPhase.__doc__ = "Number-phase pulse exp(-i theta n_site)"
Hop = namedtuple("Hop", ("source", "target"))
Hop.__doc__ = "Bare occupation swap of two adjacent sites"
PSwap = namedtuple("PSwap", ("a", "b", "theta"))
PSwap.__doc__ = "Partial swap exp(-i theta B_ab / 2) of two adjacent sites"

OP_KINDS = dict(nphase=NPhase, hop=Hop, pswap=PSwap)


def op_to_dict(op):
    """JSON-ready description of primitive `op`"""
    if isinstance(op, NPhase):
        return dict(op="nphase", site=list(op.site), theta=float(op.theta))
    elif isinstance(op, Hop):
        return {"op": "hop", "from": list(op.source), "to": list(op.target)}
    elif isinstance(op, PSwap):
        return dict(op="pswap", a=list(op.a), b=list(op.b), theta=float(op.theta))
    raise TypeError("Cannot serialize primitive of type {}".format(type(op)))


def op_from_dict(info):
    """Builds a primitive from :func:`op_to_dict` output"""
    try:
        kind = info["op"]
        if kind == "nphase":
            return NPhase(as_site(info["site"]), float(info["theta"]))
        elif kind == "hop":
            return Hop(as_site(info["from"]), as_site(info["to"]))
        elif kind == "pswap":
            return PSwap(as_site(info["a"]), as_site(info["b"]), float(info["theta"]))
    except (KeyError, TypeError) as err:
        raise ValueError("Malformed primitive {!r}: {}".format(info, err))
    raise ValueError(
        "Unknown primitive {!r}; must be in {}.".format(kind, list(OP_KINDS))
    )


class Schedule:
    """
    Ordered list of primitive lattice operations, with the layout header they
    were compiled for

    Parameters
    ----------
    layout : QubitLayout
        Qubit placement the schedule acts on
    phi : float
        Statistical angle the schedule was compiled for
    ops : list of NPhase, Hop or PSwap, optional
        Primitives, in execution order. Default: None

    Attributes
    ----------
    layout : QubitLayout
    phi : float
    ops : tuple
    shape : tuple of int
        Lattice (width, height)
    """

    def __init__(self, layout, phi, ops=None):
        if not isinstance(layout, QubitLayout):
            raise TypeError("Provided layout {} must be a QubitLayout.".format(layout))
        self._layout = layout
        self._phi = float(phi)
        if not np.isfinite(self._phi):
            raise ValueError("Statistical angle must be finite, got {}.".format(phi))
        self._ops = tuple([] if ops is None else ops)
        for op in self._ops:
            if not isinstance(op, tuple(OP_KINDS.values())):
                raise TypeError("Cannot schedule operation of type {}".format(type(op)))

    def __len__(self):
        return len(self._ops)

    def __iter__(self):
        return iter(self._ops)

    def __getitem__(self, idx):
        return self._ops[idx]

    def __eq__(self, other):
        return (
            isinstance(other, Schedule)
            and self._layout == other._layout
            and self._phi == other._phi
            and self._ops == other._ops
        )

    def __str__(self):
        return "{name}(ops={n}, n_qubits={q}, phi={phi})".format(
            name=self.__class__.__name__,
            n=len(self),
            q=self._layout.n_qubits,
            phi=self._phi,
        )

    __repr__ = __str__

    @property
    def layout(self):
        """Qubit placement the schedule acts on"""
        return self._layout

    @property
    def phi(self):
        """Statistical angle (radians)"""
        return self._phi

    @property
    def ops(self):
        """Primitives, in execution order"""
        return self._ops

    @property
    def shape(self):
        """Lattice (width, height)"""
        return self._layout.shape

    def to_dict(self):
        """JSON-ready description of the schedule (without format key)"""
        return dict(
            layout=self._layout.to_dict(),
            phi=self._phi,
            ops=[op_to_dict(op) for op in self._ops],
        )

    @classmethod
    def from_dict(cls, info):
        """Builds a schedule from :meth:`to_dict` output"""
        try:
            layout = QubitLayout.from_dict(info["layout"])
            ops = [op_from_dict(op) for op in info.get("ops", [])]
            return cls(layout, info["phi"], ops)
        except (KeyError, TypeError) as err:
            raise ValueError("Malformed schedule description: {}".format(err))
