# -*- coding: utf-8 -*-
import argparse
import json
import sys
import time

import numpy as np
from loguru import logger

import braidlab
from braidlab import analytics, encoding, oracle, utils
from braidlab.compiler import CompileError
from braidlab.geometry import DEFAULT_SPACING

FIDELITY_TOL = 1e-9
ALL_INPUTS_LIMIT = 12

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_COMPILE = 0, 1, 2, 3


class VerificationError(Exception):
    """Raised when a schedule or its output fails a correctness check"""


def get_parser():
    """Parser for command-line arguments"""
    parser = argparse.ArgumentParser(
        prog="braidlab",
        description="Compile, run and verify dual-rail anyon circuits.",
    )

    log_style_group = parser.add_argument_group(
        "Logging style arguments (optional and mutually exclusive)",
        "Options to specify the logging style",
    )
    log_style_group_exclusive = log_style_group.add_mutually_exclusive_group()
    log_style_group_exclusive.add_argument(
        "-debug",
        "--debug",
        dest="debug",
        action="store_true",
        help="Print additional debugging info and error diagnostics. Default is False.",
        default=False,
    )
    log_style_group_exclusive.add_argument(
        "-quiet",
        "--quiet",
        dest="quiet",
        action="store_true",
        help="Only print warnings and errors. Default is False.",
        default=False,
    )
    log_style_group.add_argument(
        "--log-file",
        dest="log_file",
        default=None,
        help="Also write logs to this file.",
    )

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    compile_cmd = commands.add_parser(
        "compile", help="Compile a circuit file into a schedule file."
    )
    compile_cmd.add_argument("circuit", help="Circuit JSON file.")
    compile_cmd.add_argument(
        "-o", "--output", required=True, help="Output schedule JSON file."
    )
    compile_cmd.add_argument(
        "--spacing",
        type=int,
        default=DEFAULT_SPACING,
        help="Lattice columns per qubit.",
    )

    run_cmd = commands.add_parser(
        "run", help="Execute a schedule on an encoded basis input."
    )
    run_cmd.add_argument("schedule", help="Schedule JSON file.")
    run_cmd.add_argument(
        "--input", dest="bits", required=True, help="Input bitstring, qubit 0 leftmost."
    )
    mode = run_cmd.add_mutually_exclusive_group(required=True)
    mode.add_argument("--shots", type=int, help="Number of sampled readouts.")
    mode.add_argument(
        "--amplitudes",
        action="store_true",
        help="Report exact codespace amplitudes instead of samples.",
    )
    run_cmd.add_argument(
        "--seed", type=int, default=None, help="Random seed (default: $BRAIDLAB_SEED)."
    )
    run_cmd.add_argument(
        "--timing", action="store_true", help="Include wall time in the report."
    )

    verify_cmd = commands.add_parser(
        "verify", help="Check a compiled circuit against the dense oracle."
    )
    verify_cmd.add_argument("circuit", help="Circuit JSON file.")
    verify_cmd.add_argument(
        "--inputs",
        nargs="+",
        default=["all"],
        metavar="all | random N",
        help="Verify on every basis input, or on N random ones.",
    )
    verify_cmd.add_argument(
        "--seed", type=int, default=None, help="Random seed (default: $BRAIDLAB_SEED)."
    )

    stats_cmd = commands.add_parser("stats", help="Summarize a schedule file.")
    stats_cmd.add_argument("schedule", help="Schedule JSON file.")

    return parser


def configure_logging(*, debug=False, quiet=False, log_file=None):
    """
    Enables the package logger with stderr (and optional file) sinks

    Returns
    -------
    handles : list of int
        Sink ids, to be removed when the command finishes
    """
    logger.enable("braidlab")
    try:
        logger.remove(0)
    except ValueError:
        pass

    if quiet:
        level, backtrace, diagnose = "WARNING", False, False
    elif debug:
        level, backtrace, diagnose = "DEBUG", True, True
    else:
        level, backtrace, diagnose = "INFO", True, False

    handles = [
        logger.add(
            sys.stderr,
            level=level,
            colorize=True,
            backtrace=backtrace,
            diagnose=diagnose,
        )
    ]
    if log_file is not None:
        handles.append(
            logger.add(
                log_file,
                level=level,
                colorize=False,
                backtrace=backtrace,
                diagnose=diagnose,
            )
        )
    return handles


def _emit(report):
    print(json.dumps(report, indent=2, sort_keys=True))


def _check_schedule(schedule):
    report = braidlab.validate_schedule(schedule)
    if not report.ok:
        raise VerificationError(
            "schedule failed validation at op {}: {}".format(report.index, report.reason)
        )


def cmd_compile(*, circuit, output, spacing=DEFAULT_SPACING):
    """
    Compiles `circuit` and saves the schedule to `output`

    Parameters
    ----------
    circuit : str
        Path to circuit JSON file
    output : str
        Path to output schedule JSON file
    spacing : int, optional
        Lattice columns per qubit. Default: 3

    Returns
    -------
    code : int
    """
    circ = braidlab.load_circuit(circuit)
    schedule = braidlab.compile_circuit(circ, spacing=spacing)
    fname = braidlab.save_schedule(output, schedule)
    _emit(dict(output=fname, ops=analytics.ScheduleStats(schedule).to_dict()["ops"]))
    return EXIT_OK


def cmd_run(*, schedule, bits, shots=None, amplitudes=False, seed=None, timing=False):
    """
    Runs `schedule` on encoded input `bits` and prints a JSON run report

    Parameters
    ----------
    schedule : str
        Path to schedule JSON file
    bits : str
        Input bitstring, qubit 0 leftmost
    shots : int, optional
        Number of readouts to sample. Default: None
    amplitudes : bool, optional
        Report exact codespace amplitudes instead. Default: False
    seed : int, optional
        Random seed for sampling. Default: None
    timing : bool, optional
        Include wall time in the report. Default: False

    Returns
    -------
    code : int
    """
    sched = braidlab.load_schedule(schedule)
    layout = sched.layout
    bits = encoding.check_bits(bits, layout.n_qubits)
    seed = utils.get_seed(seed)
    _check_schedule(sched)

    start = time.perf_counter()
    state = braidlab.encode_basis(layout, bits, phi=sched.phi)
    state = braidlab.execute_schedule(sched, state)
    wall_time = time.perf_counter() - start
    logger.info(f"Executed {sched} on input {bits} in {wall_time:.3f} s")

    report = analytics.RunReport(
        bits,
        analytics.ScheduleStats(sched),
        distribution=encoding.readout_distribution(layout, state),
        counts=None if amplitudes else encoding.sample(layout, state, shots, seed),
        amplitudes=encoding.codespace_amplitudes(layout, state) if amplitudes else None,
        wall_time=wall_time if timing else None,
    )
    _emit(report.to_dict())
    return EXIT_OK


def _verify_inputs(inputs, n_qubits, seed):
    if inputs == ["all"]:
        if n_qubits > ALL_INPUTS_LIMIT:
            raise ValueError(
                "All-inputs verification supports at most {} qubits, circuit has "
                "{}.".format(ALL_INPUTS_LIMIT, n_qubits)
            )
        return analytics.basis_strings(n_qubits)
    if len(inputs) == 2 and inputs[0] == "random":
        try:
            count = int(inputs[1])
        except ValueError:
            count = 0
        if count < 1:
            raise ValueError(
                "Number of random inputs must be a positive integer, got "
                "{!r}.".format(inputs[1])
            )
        rng = np.random.default_rng(utils.get_seed(seed))
        draws = rng.integers(0, 2, size=(count, n_qubits))
        return ["".join(str(b) for b in row) for row in draws]
    raise ValueError("--inputs must be 'all' or 'random N', got {}.".format(inputs))


def cmd_verify(*, circuit, inputs=("all",), seed=None):
    """
    Compiles `circuit`, then compares anyon execution with the dense oracle

    Parameters
    ----------
    circuit : str
        Path to circuit JSON file
    inputs : list of str, optional
        ['all'] or ['random', N]. Default: ['all']
    seed : int, optional
        Random seed for drawing inputs. Default: None

    Returns
    -------
    code : int
        0 iff every fidelity is at least 1 - 1e-9
    """
    circ = braidlab.load_circuit(circuit)
    bitstrings = _verify_inputs(list(inputs), circ.n_qubits, seed)
    schedule = braidlab.compile_circuit(circ)
    layout = schedule.layout

    results = []
    for bits in bitstrings:
        state = braidlab.encode_basis(layout, bits, phi=schedule.phi)
        state = braidlab.execute_schedule(schedule, state)
        fid = oracle.fidelity(oracle.simulate(circ, bits), layout, state)
        logger.debug(f"Input {bits}: fidelity {fid:.12f}")
        results.append(dict(input=bits, fidelity=fid))

    min_fidelity = min(r["fidelity"] for r in results)
    ok = min_fidelity >= 1 - FIDELITY_TOL
    logger.info(
        f"Verified {circ} on {len(results)} input(s): min fidelity {min_fidelity:.12f}"
    )
    _emit(dict(min_fidelity=min_fidelity, ok=ok, results=results))

    return EXIT_OK if ok else EXIT_VERIFY


def cmd_stats(*, schedule):
    """
    Prints op counts by kind, braid count and lattice dimensions of `schedule`

    Returns
    -------
    code : int
    """
    sched = braidlab.load_schedule(schedule)
    _emit(analytics.ScheduleStats(sched).to_dict())
    return EXIT_OK


COMMANDS = dict(compile=cmd_compile, run=cmd_run, verify=cmd_verify, stats=cmd_stats)


def main(argv=None):
    """
    Command-line entry point

    Parameters
    ----------
    argv : list of str, optional
        Arguments, without the program name. Default: ``sys.argv[1:]``

    Returns
    -------
    code : int
        0 success, 1 verification failure, 2 input error, 3 compile error
    """
    try:
        opts = vars(get_parser().parse_args(argv))
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_INPUT

    handles = configure_logging(
        debug=opts.pop("debug"), quiet=opts.pop("quiet"), log_file=opts.pop("log_file")
    )
    command = COMMANDS[opts.pop("command")]
    try:
        return command(**opts)
    except CompileError as err:
        logger.error(f"Compile error: {err}")
        return EXIT_COMPILE
    except (
        VerificationError,
        encoding.CodespaceError,
        braidlab.CollisionError,
    ) as err:
        logger.error(f"Verification failed: {err}")
        return EXIT_VERIFY
    except (OSError, ValueError, TypeError) as err:
        logger.error(f"Input error: {err}")
        return EXIT_INPUT
    finally:
        for handle in handles:
            logger.remove(handle)
        logger.disable("braidlab")


if __name__ == "__main__":
    sys.exit(main())
