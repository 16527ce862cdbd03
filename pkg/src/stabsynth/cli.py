"""Command-line interface for the stabilizer-code toolchain.

Subcommands
-----------
synth        synthesize an encoder circuit for a code
optimize     run the optimization pipeline on a circuit JSON file
syndromes    print a code's single-qubit-error syndrome table
verify       check a circuit against the code's encoding oracle
simulate     encode a logical basis state, optionally with an error
export-qasm  render a circuit JSON file as OpenQASM 2.0

Codes are named either by a ``.stab`` file path or by a shipped name
(``eight_qubit``, ``steane``, ``thirteen_qubit``).  Exit codes: 0 on
success, 1 when a verification fails, 2 on input errors (including
unknown flags).  All commands are deterministic: identical inputs
produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import library
from .circuit import Circuit, from_json, to_json, to_qasm
from .gf2 import solve as gf2_solve
from .linear import DEFAULT_SEARCH_BUDGET
from .encoder import synthesize_encoder
from .optimizer import optimize
from .pauli import PauliString
from .simulator import (
    StateVector,
    apply_pauli,
    check_stabilized,
    logical_label,
    projector_encode,
    run,
    states_close,
)
from .syndrome import build_syndrome_table, format_table, syndrome_decimal, syndrome_of

__all__ = ["main"]

_ERROR_SPEC = re.compile(r"^([XYZ])@([0-9]+)$")


class _InputError(Exception):
    """User input the CLI cannot act on (exit code 2)."""


def _load_code(spec: str) -> library.CodeDefinition:
    try:
        return library.load_code(spec)
    except (FileNotFoundError, library.StabParseError, ValueError) as exc:
        raise _InputError(str(exc)) from exc


def _load_circuit(path: str) -> Circuit:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read circuit file {path!r}: {exc}") from exc
    try:
        return from_json(text)
    except ValueError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_synth(args) -> int:
    code = _load_code(args.code)
    sf = code.standard_form()
    gate_set = args.gates.replace("-", "_")
    circuit = synthesize_encoder(
        sf, gate_set=gate_set, strip=not args.no_strip, name=f"{code.name}_encoder"
    )
    _write_output(to_json(circuit), args.output)
    return 0


def _cmd_optimize(args) -> int:
    circuit = _load_circuit(args.circuit)
    witnesses = []
    for path in args.witness or []:
        try:
            payload = json.loads(Path(path).read_text())
            ops = []
            for pair in payload["ops"]:
                c, t = pair
                ops.append((int(c), int(t)))
            witnesses.append(ops)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise _InputError(f"bad witness file {path!r}: {exc}") from exc
    try:
        optimized, report = optimize(
            circuit,
            level=args.level,
            search_budget=args.search_budget,
            block_witnesses=witnesses or None,
        )
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    _write_output(to_json(optimized), args.output)
    if args.report:
        Path(args.report).write_text(report.to_json())
    return 0


def _cmd_syndromes(args) -> int:
    code = _load_code(args.code)
    table = build_syndrome_table(code.standard_form())
    sys.stdout.write(format_table(table, args.format))
    return 0


def _solve_frame(pairs: list[tuple[str, int]], n: int) -> list[int] | None:
    """Wires of a terminal Z frame explaining per-label sign flips.

    ``pairs`` holds (basis label, sign bit) rows; a frame on wire set F
    predicts sign = XOR of the label bits on F.  Returns a sorted wire
    list, or None when no frame is consistent.
    """
    mat = np.array(
        [[int(b) for b in label] for label, _ in pairs], dtype=np.uint8
    ).reshape(len(pairs), n)
    rhs = np.array([s for _, s in pairs], dtype=np.uint8)
    f = gf2_solve(mat, rhs)
    if f is None:
        return None
    return [q + 1 for q in range(n) if f[q]]


def _cmd_verify(args) -> int:
    code = _load_code(args.code)
    sf = code.standard_form()
    circuit = _load_circuit(args.circuit)
    if circuit.n != sf.n:
        raise _InputError(
            f"circuit acts on {circuit.n} qubits but {code.name} has {sf.n}"
        )
    if len(circuit.logical_qubits()) != sf.k:
        raise _InputError(
            f"circuit marks {len(circuit.logical_qubits())} logical inputs "
            f"but {code.name} has k={sf.k}"
        )

    sign_rows: list[tuple[str, int]] = []
    outputs: list[tuple[str, StateVector, StateVector]] = []
    consistent = True
    for i in range(2**sf.k):
        bits = format(i, f"0{sf.k}b") if sf.k else ""
        out = run(circuit, logical_label(circuit, bits))
        oracle = projector_encode(sf, bits)
        outputs.append((bits, out, oracle))
        for idx in range(2**sf.n):
            a, b = out.amps[idx], oracle.amps[idx]
            if abs(a) < 1e-10 and abs(b) < 1e-10:
                continue
            if abs(a - b) < 1e-10:
                sign_rows.append((format(idx, f"0{sf.n}b"), 0))
            elif abs(a + b) < 1e-10:
                sign_rows.append((format(idx, f"0{sf.n}b"), 1))
            else:
                consistent = False

    frame_wires: list[int] = []
    if args.allow_frame and consistent:
        solved = _solve_frame(sign_rows, sf.n) if sign_rows else []
        if solved is None:
            consistent = False
        else:
            frame_wires = solved

    stabilized = 0
    matched = 0
    total = 2**sf.k
    for bits, out, oracle in outputs:
        checked = out
        if frame_wires:
            for q in frame_wires:
                checked = apply_pauli(
                    checked, PauliString.parse(
                        "".join("Z" if x == q else "I" for x in range(1, sf.n + 1))
                    )
                )
        if all(check_stabilized(checked, g) for g in sf.generators):
            stabilized += 1
        if consistent and states_close(
            checked, oracle, up_to_global_phase=bool(frame_wires)
        ):
            matched += 1

    frame_note = (
        " after frame " + " ".join(f"Z({q})" for q in frame_wires)
        if frame_wires
        else ""
    )
    print(f"stabilized basis states: {stabilized}/{total}{frame_note}")
    print(f"projector-oracle matches: {matched}/{total}{frame_note}")
    ok = stabilized == total and matched == total
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_simulate(args) -> int:
    code = _load_code(args.code)
    sf = code.standard_form()
    bits = args.logical if args.logical is not None else "0" * sf.k
    if len(bits) != sf.k or any(b not in "01" for b in bits):
        raise _InputError(
            f"--logical wants {sf.k} bits of 0/1, got {args.logical!r}"
        )
    encoder = synthesize_encoder(sf, gate_set="mixed", name=f"{code.name}_encoder")
    state = run(encoder, logical_label(encoder, bits))
    error = None
    if args.error:
        m = _ERROR_SPEC.match(args.error)
        if not m:
            raise _InputError(
                f"--error wants the form P@q with P in X,Y,Z (e.g. X@3), "
                f"got {args.error!r}"
            )
        letter, qubit = m.group(1), int(m.group(2))
        if not 1 <= qubit <= sf.n:
            raise _InputError(f"--error qubit {qubit} outside 1..{sf.n}")
        error = PauliString.parse(
            "".join(letter if x == qubit else "I" for x in range(1, sf.n + 1))
        )
        state = apply_pauli(state, error)

    print(f"code: {code.name}  logical: |{bits}>", end="")
    print(f"  error: {args.error}" if error is not None else "")
    for label, amp in state.nonzero_labels():
        print(f"  {amp.real:+.4f}{amp.imag:+.4f}i |{label}>")
    if error is not None:
        bits_vec = syndrome_of(error, sf)
        syndrome = "".join(str(int(b)) for b in bits_vec)
        print(f"syndrome: {syndrome} (decimal {syndrome_decimal(bits_vec)})")
    return 0


def _cmd_export_qasm(args) -> int:
    circuit = _load_circuit(args.circuit)
    _write_output(to_qasm(circuit), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabsynth",
        description="Synthesize, optimize, and verify stabilizer-code circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize an encoder circuit")
    p.add_argument("code", help=".stab file or shipped code name")
    p.add_argument("--gates", choices=("mixed", "cnot-cz"), default="mixed")
    p.add_argument(
        "--no-strip", action="store_true",
        help="keep gates that provably act on |0> wires",
    )
    p.add_argument("-o", "--output", metavar="OUT.json")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("optimize", help="optimize a circuit JSON file")
    p.add_argument("circuit", metavar="circuit.json")
    p.add_argument("--level", choices=("rules", "full"), default="rules")
    p.add_argument(
        "--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET, metavar="N"
    )
    p.add_argument(
        "--witness", action="append", metavar="W.json",
        help='JSON file {"ops": [[control, target], ...]} with a known '
        "short realisation usable for matching CNOT regions (repeatable)",
    )
    p.add_argument("-o", "--output", metavar="OUT.json")
    p.add_argument("--report", metavar="REPORT.json")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("syndromes", help="print the syndrome table")
    p.add_argument("code")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_syndromes)

    p = sub.add_parser("verify", help="check a circuit encodes the code")
    p.add_argument("code")
    p.add_argument("circuit", metavar="circuit.json")
    p.add_argument(
        "--allow-frame", action="store_true",
        help="accept (and report) a terminal Pauli-Z frame",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("simulate", help="encode a basis state, show the state")
    p.add_argument("code")
    p.add_argument("--error", metavar="P@q")
    p.add_argument("--logical", metavar="BITS")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("export-qasm", help="render circuit JSON as OpenQASM 2.0")
    p.add_argument("circuit", metavar="circuit.json")
    p.add_argument("-o", "--output", metavar="OUT.qasm")
    p.set_defaults(func=_cmd_export_qasm)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
