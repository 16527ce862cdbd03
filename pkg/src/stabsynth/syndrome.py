"""Syndrome computation and single-error decoding.

Syndrome bit i records whether an error anticommutes with standard-form
generator i (0 = commutes, 1 = anticommutes).  Bit 1 is the most
significant bit of the decimal rendering.  The production decoder is
algebraic — pure symplectic products — and the simulator's circuit-level
measurement is cross-checked against it in the test suite.
"""

from __future__ import annotations

import json

import numpy as np

from .pauli import PauliString
from .symplectic import StandardForm

__all__ = ["syndrome_of", "SyndromeTable", "build_syndrome_table", "format_table"]


def syndrome_of(e: PauliString, sf: StandardForm) -> np.ndarray:
    """Anticommutation bits of the error against each standard generator."""
    if e.n != sf.n:
        raise ValueError(f"error acts on {e.n} qubits, code has {sf.n}")
    x, z = sf.x.astype(np.uint32), sf.z.astype(np.uint32)
    bits = (x @ e.z.astype(np.uint32) + z @ e.x.astype(np.uint32)) % 2
    return bits.astype(np.uint8)


def syndrome_decimal(bits: np.ndarray) -> int:
    """Decimal value with syndrome bit 1 as the most significant bit."""
    return int("".join(str(int(b)) for b in bits), 2) if len(bits) else 0


class SyndromeTable:
    """Lookup table over all weight-<=1 Pauli errors of one code."""

    def __init__(self, sf: StandardForm, entries: list[tuple[PauliString, np.ndarray]]):
        self.sf = sf
        self.entries = entries
        self._by_syndrome: dict[bytes, PauliString] = {}
        for error, bits in entries:
            key = bits.tobytes()
            if key in self._by_syndrome:
                other = self._by_syndrome[key]
                raise ValueError(
                    f"syndrome collision: {other} and {error} both give "
                    f"{''.join(str(int(b)) for b in bits)} — "
                    "the code does not correct all single-qubit errors"
                )
            self._by_syndrome[key] = error

    def decode(self, syndrome: np.ndarray) -> PauliString | None:
        """The unique matching correction, or None when uncorrectable."""
        syndrome = np.asarray(syndrome, dtype=np.uint8) & 1
        if syndrome.shape != (self.sf.m,):
            raise ValueError(f"syndrome must have {self.sf.m} bits")
        return self._by_syndrome.get(syndrome.tobytes())


def _single_qubit_errors(n: int) -> list[PauliString]:
    """All X/Z/Y errors per qubit (in that order), identity last."""
    errors = []
    zeros = np.zeros(n, dtype=np.uint8)
    for q in range(n):
        for letter in ("X", "Z", "Y"):
            x, z = zeros.copy(), zeros.copy()
            if letter in ("X", "Y"):
                x[q] = 1
            if letter in ("Z", "Y"):
                z[q] = 1
            errors.append(PauliString(x, z))
    errors.append(PauliString.identity(n))
    return errors


def build_syndrome_table(sf: StandardForm) -> SyndromeTable:
    """Table over all 3n+1 weight-<=1 errors; collisions are an error."""
    entries = [(e, syndrome_of(e, sf)) for e in _single_qubit_errors(sf.n)]
    return SyndromeTable(sf, entries)


def format_table(table: SyndromeTable, fmt: str = "table") -> str:
    """Render the table as aligned text or JSON.

    Text columns: the error's letters (one per qubit), one column per
    syndrome bit, and the decimal value.
    """
    if fmt == "json":
        rows = [
            {
                "error": str(error),
                "syndrome": "".join(str(int(b)) for b in bits),
                "decimal": syndrome_decimal(bits),
            }
            for error, bits in table.entries
        ]
        return json.dumps(rows, indent=2) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    m = table.sf.m
    header = ["Error"] + [f"bit{i}" for i in range(1, m + 1)] + ["Decimal"]
    rows = [header]
    for error, bits in table.entries:
        rows.append(
            [" ".join(str(error))]
            + [str(int(b)) for b in bits]
            + [str(syndrome_decimal(bits))]
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = []
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"
