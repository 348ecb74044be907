# -*- coding: utf-8 -*-
"""
Functions for loading and saving circuits, schedules and state histories
"""

import json
import os.path as op

from loguru import logger

from braidlab import utils
from braidlab.circuit import CircuitIR
from braidlab.schedule import Schedule

FORMAT_VERSION = 1


def _read_json(fname, kind):
    if not op.exists(fname):
        raise FileNotFoundError("{} file {} does not exist.".format(kind, fname))
    try:
        with open(fname, "r") as src:
            info = json.load(src)
    except json.JSONDecodeError as err:
        raise ValueError("{} file {} is not valid JSON: {}".format(kind, fname, err))
    if not isinstance(info, dict):
        raise ValueError("{} file {} must hold a JSON object.".format(kind, fname))
    return _check_format(info, "{} file {}".format(kind, fname))


def _check_format(info, source):
    """Copy of `info` without its "format" key; rejects other versions"""
    info = dict(info)
    version = info.pop("format", None)
    if version is None:
        logger.warning(
            f"{source} has no format key; assuming version {FORMAT_VERSION}."
        )
    elif version != FORMAT_VERSION:
        raise ValueError(
            "{} has format version {}, expected {}.".format(
                source, version, FORMAT_VERSION
            )
        )
    return info


def _write_json(fname, info):
    fname += ".json" if not fname.endswith(".json") else ""
    with open(fname, "w") as dest:
        json.dump(dict(format=FORMAT_VERSION, **info), dest, indent=2, sort_keys=True)
        dest.write("\n")
    return fname


def load_circuit(data):
    """
    Returns `CircuitIR` object described by `data`

    Parameters
    ----------
    data : str or dict or CircuitIR
        Path to a circuit JSON file, a parsed description, or a circuit

    Returns
    -------
    circuit : :class:`braidlab.CircuitIR`

    Raises
    ------
    TypeError
        If provided `data` is unable to be loaded
    """
    if isinstance(data, CircuitIR):
        return data
    elif isinstance(data, str):
        circuit = CircuitIR.from_dict(_read_json(data, "Circuit"))
    elif isinstance(data, dict):
        circuit = CircuitIR.from_dict(_check_format(data, "Circuit description"))
    else:
        raise TypeError("Cannot load circuit of type {}".format(type(data)))
    logger.debug(f"Loaded {circuit}")

    return circuit


def save_circuit(fname, circuit):
    """
    Saves `circuit` to `fname`

    Parameters
    ----------
    fname : str
        Path to output file; .json will be appended if necessary
    circuit : CircuitIR

    Returns
    -------
    fname : str
        Full filepath to saved output
    """
    fname = _write_json(fname, circuit.to_dict())
    logger.info(f"Saved {circuit} in {fname}")
    return fname


def load_schedule(data):
    """
    Returns `Schedule` object described by `data`

    Parameters
    ----------
    data : str or dict or Schedule
        Path to a schedule JSON file, a parsed description, or a schedule

    Returns
    -------
    schedule : :class:`braidlab.Schedule`
    """
    if isinstance(data, Schedule):
        return data
    elif isinstance(data, str):
        schedule = Schedule.from_dict(_read_json(data, "Schedule"))
    elif isinstance(data, dict):
        schedule = Schedule.from_dict(_check_format(data, "Schedule description"))
    else:
        raise TypeError("Cannot load schedule of type {}".format(type(data)))
    logger.debug(f"Loaded {schedule}")

    return schedule


def save_schedule(fname, schedule):
    """
    Saves `schedule` to `fname`; output is byte-identical for equal schedules

    Parameters
    ----------
    fname : str
        Path to output file; .json will be appended if necessary
    schedule : Schedule

    Returns
    -------
    fname : str
        Full filepath to saved output
    """
    fname = _write_json(fname, schedule.to_dict())
    logger.info(f"Saved {schedule} in {fname}")
    return fname


def load_history(file, verbose=False):
    """
    Loads history from `file` and replays it, creating new state instance

    Parameters
    ----------
    file : str
        Path to input JSON file
    verbose : bool, optional
        Whether to log messages as history is being replayed. Default: False

    Returns
    -------
    state : :class:`braidlab.SparseFockState`
        Replayed state
    """
    # we'll be replaying functions from the top-level namespace
    import braidlab

    with open(file, "r") as src:
        history = json.load(src)

    logger.info(f"Replaying history from {file}")
    state = None
    for func, kwargs in history:
        if verbose:
            logger.info("Rerunning {}".format(func))
        if func == "init_state":
            state = braidlab.init_state(**kwargs)
        elif state is None:
            raise ValueError(
                "History in {} must start with init_state, got {}.".format(file, func)
            )
        else:
            state = getattr(braidlab, func)(state, **kwargs)

    return state


def save_history(file, state):
    """
    Saves history of `state` to `file`

    Saved file can be replayed with `braidlab.load_history`

    Parameters
    ----------
    file : str
        Path to output file; .json will be appended if necessary
    state : SparseFockState
        State with history to be saved to file

    Returns
    -------
    file : str
        Full filepath to saved output
    """
    state = utils.check_state(state)
    if len(state.history) == 0:
        logger.warning(
            "History of provided state is empty. Saving anyway, but reloading "
            "this file will result in an error."
        )
    file += ".json" if not file.endswith(".json") else ""
    with open(file, "w") as dest:
        json.dump(state.history, dest, indent=4)
    logger.info(f"Saved {state} history in {file}")

    return file
