# -*- coding: utf-8 -*-
"""
Various utilities for the anyon engine. These should not be called directly but
should support the primitives stored in `braidlab.operations`.
"""

import inspect
import os
import sys
from functools import wraps

from loguru import logger

from braidlab import fock

SEED_VARIABLE = "BRAIDLAB_SEED"


def _serializable(value):
    """Coerces sites, arrays and numpy scalars into JSON-friendly values"""
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, tuple):
        return [_serializable(v) for v in value]
    return value


def make_operation(*, exclude=None):
    """
    Wrapper to make functions into engine operations

    Wrapped functions should accept a :class:`braidlab.SparseFockState`
    instance, `state`, as their first parameter, and should return a new
    :class:`braidlab.SparseFockState` instance

    Parameters
    ----------
    exclude : list, optional
        What function parameters to exclude from being stored in history.
        Default: 'state'
    """

    def get_call(func):
        sig = inspect.signature(func)

        @wraps(func)
        def wrapper(state, *args, **kwargs):
            # exclude 'state', by default
            ignore = ["state"] if exclude is None else exclude

            bound = sig.bind(state, *args, **kwargs)
            bound.apply_defaults()
            params = bound.arguments
            state = func(state, *args, **kwargs)

            if state is None:
                return state

            provided = {
                k: _serializable(params[k]) for k in sorted(params) if k not in ignore
            }
            state._history += [(func.__name__, provided)]

            return state

        return wrapper

    return get_call


def check_state(state, shape=None):
    """
    Checks that `state` is a :class:`braidlab.SparseFockState`

    Parameters
    ----------
    state : SparseFockState
    shape : tuple of int, optional
        If provided, raise ValueError unless `state` lives on a lattice of this
        (width, height). Default: None

    Returns
    -------
    state : braidlab.SparseFockState

    Raises
    ------
    TypeError
        If `state` is not a sparse Fock state
    ValueError
        If `shape` is given and does not match
    """
    if not isinstance(state, fock.SparseFockState):
        raise TypeError("Cannot operate on state of type {}".format(type(state)))
    if shape is not None and tuple(shape) != state.shape:
        raise ValueError(
            "Lattice dimension mismatch: {} vs {}".format(state.shape, tuple(shape))
        )
    return state


def new_state_like(ref_state, terms, *, copy_history=True):
    """
    Makes `terms` into a state like `ref_state`

    Parameters
    ----------
    ref_state : SparseFockState
        Reference state providing lattice shape, convention and prune threshold
    terms : dict
        Mapping of packed configuration to complex amplitude
    copy_history : bool, optional
        Copy history from `ref_state` to the new state. Default: True

    Returns
    -------
    state : braidlab.SparseFockState
    """
    history = list(ref_state.history) if copy_history else []
    return ref_state.__class__(
        terms,
        ref_state.shape,
        convention=ref_state.convention,
        history=history,
        prune=ref_state.prune,
    )


def get_seed(seed=None):
    """
    Resolves the random seed to use

    Parameters
    ----------
    seed : int, optional
        Explicit seed. If None, the ``BRAIDLAB_SEED`` environment variable is
        consulted. Default: None

    Returns
    -------
    seed : int or None
    """
    if seed is not None:
        return int(seed)
    env = os.environ.get(SEED_VARIABLE)
    if env is None or env.strip() == "":
        return None
    try:
        return int(env)
    except ValueError:
        raise ValueError(
            "Environment variable {} must be an integer, got {!r}.".format(
                SEED_VARIABLE, env
            )
        )


def enable_logger(loglevel="INFO", diagnose=True, backtrace=True):
    """
    Toggles the use of the module's logger and configures it

    Parameters
    ----------
    loglevel : {'INFO', 'DEBUG', 'WARNING', 'ERROR'}
        Logger log level. Default: "INFO"
    """
    _valid_loglevels = ["INFO", "DEBUG", "WARNING", "ERROR"]

    if loglevel not in _valid_loglevels:
        raise ValueError(
            "Provided log level {} is not permitted; must be in {}.".format(
                loglevel, _valid_loglevels
            )
        )
    logger.enable("braidlab")
    try:
        logger.remove(0)
    except ValueError:
        logger.warning(
            "The logger has been already enabled. If you want to "
            "change the log level of an existing logger, please "
            "refer to the change_loglevel() function."
        )
        return
    log_handle = logger.add(
        sys.stderr, level=loglevel, backtrace=backtrace, diagnose=diagnose
    )
    logger.debug(f"Enabling logger with handle_id: {log_handle}")
    return log_handle


def change_loglevel(log_handle, loglevel, diagnose=True, backtrace=True):
    """
    Change the loguru logger's log level. The logger needs to
    be already enabled by `enable_logger()`

    Parameters
    ----------
    log_handle : Enabled logger's handle, returned by `enable_logger()`
    loglevel : {'INFO', 'DEBUG', 'WARNING', 'ERROR'}
    """
    _valid_loglevels = ["INFO", "DEBUG", "WARNING", "ERROR"]

    if loglevel not in _valid_loglevels:
        raise ValueError(
            "Provided log level {} is not permitted; must be in {}.".format(
                loglevel, _valid_loglevels
            )
        )
    logger.remove(log_handle)
    new_log_handle = logger.add(
        sys.stderr, level=loglevel, backtrace=backtrace, diagnose=diagnose
    )
    logger.info(
        f'Changing the logger log level to "{loglevel}" (New logger handle_id: {new_log_handle})'
    )
    return new_log_handle


def disable_logger(log_handle=None):
    """
    Removes logger sinks and silences the package logger

    Parameters
    ----------
    log_handle : Enabled logger's handle, returned by `enable_logger()`
        Default: None
        If left as None, this function will disable all logger instances
    """
    if log_handle is None:
        logger.info("Disabling all logger instances")
        logger.remove()
    else:
        logger.info(f"Disabling logger with handle_id: {log_handle}")
        logger.remove(log_handle)
    logger.disable("braidlab")
