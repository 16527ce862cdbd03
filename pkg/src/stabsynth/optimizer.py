"""Rule-driven circuit optimization with exact equivalence checking.

The pipeline rewrites an encoder circuit toward the {H, CX} gate set and
shrinks its CNOT count in several passes:

1. retarget   — controlled-Y gates are expanded exactly into CZ + CX + S,
                and every CZ slides left until it merges with a Hadamard
                (becoming a CX) or, failing that, is expanded with a
                Hadamard pair.
2. strip      — gates that provably act on |0> wires are elided.
3. cancel     — adjacent involutive pairs (modulo commuting interleavers)
                cancel, and S pairs merge into Z.
4. frame      — diagonal Pauli gates that commute to the end of the
                circuit are collected into a trailing "Pauli frame".
5. ports      — for each Hadamard, the CX gates feeding its wire are
                re-realised as a minimum-weight combination of the labels
                currently carried by the other wires.
6. triangles  — the CNOT-distribution identity applied in reverse
                contracts triple patterns to two gates.
7. fold       — a wire's CX fan-in collapses to two gates bracketing a
                span when another wire's evolution across that span
                already carries the same GF(2) difference.

``apply_rules`` runs the passes and returns a self-contained circuit (the
frame stays in the gate list).  ``optimize`` additionally resynthesizes
extracted CNOT blocks at ``level="full"``, splits the frame into the
report, and re-simulates the result against the input — a mismatch is a
hard error, never a silent fallback.

Every window rewrite used here is a registered, registration-verified
rule from :mod:`stabsynth.rules`; the two dataflow passes (strip, ports)
additionally rely on proven-|0> tracking and exact GF(2) label algebra.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .circuit import Circuit, Gate, gate_counts, two_qubit_count
from .gf2 import min_weight_solution
from .linear import DEFAULT_SEARCH_BUDGET, block_to_matrix, resynthesize
from .rules import REGISTRY, gates_commute, rule
from .simulator import circuits_equivalent

__all__ = [
    "CnotBlock",
    "OptimizationError",
    "OptimizationReport",
    "apply_rules",
    "extract_cnot_blocks",
    "frame_from_notes",
    "optimize",
]

LEVELS = ("rules", "full")
TARGET_GATE_SETS = ("cnot-h",)

_FRAME_NOTE = re.compile(r"^pauli frame: (.+)$")


class OptimizationError(RuntimeError):
    """The optimizer's internal equivalence check failed."""


@dataclass(frozen=True)
class CnotBlock:
    """A maximal run of consecutive CX gates in a reordered gate list."""

    span: range
    gates: tuple[Gate, ...]


@dataclass
class OptimizationReport:
    """What the optimizer did: gate counts, rule firings, block rewrites."""

    counts_before: dict[str, int]
    counts_after: dict[str, int]
    rules_fired: dict[str, int] = field(default_factory=dict)
    blocks_resynthesized: list[dict] = field(default_factory=list)
    frame: tuple[Gate, ...] = ()

    def to_json(self) -> str:
        payload = {
            "counts_before": self.counts_before,
            "counts_after": self.counts_after,
            "rules_fired": dict(sorted(self.rules_fired.items())),
            "blocks_resynthesized": self.blocks_resynthesized,
            "frame": [str(g) for g in self.frame],
        }
        return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# proven-|0> tracking


def _initial_zero(circuit: Circuit) -> set[int]:
    return {
        q + 1 for q, role in enumerate(circuit.roles) if role == "ancilla_zero"
    }


def _advance_zero(zero: set[int], g: Gate) -> None:
    """Update the proven-|0> set after ``g`` executes."""
    if g.kind in ("H", "X", "Y"):
        zero.discard(g.q[0])
    elif g.kind in ("CX", "CY"):
        c, t = g.q
        if c not in zero:
            zero.discard(t)
    # S, Z and CZ fix |0> wires exactly, so the set is unchanged.


# ---------------------------------------------------------------------------
# passes


class _Fires(dict):
    def hit(self, name: str, times: int = 1) -> None:
        if name not in REGISTRY and name not in (
            "gate_commutation_move", "port_minimization", "fanin_fold",
        ):
            raise KeyError(f"firing unregistered rule {name!r}")
        self[name] = self.get(name, 0) + times


def _pass_strip(gates, circuit, fires):
    """Drop gates that provably act trivially on |0> wires."""
    zero = _initial_zero(circuit)
    out = []
    for g in gates:
        if g.kind in ("S", "Z") and g.q[0] in zero:
            fires.hit("phase_zero_elision" if g.kind == "S" else "z_zero_elision")
            continue
        if g.kind == "CZ" and (g.q[0] in zero or g.q[1] in zero):
            fires.hit("cz_zero_leg_elision")
            continue
        if g.kind == "CX" and g.q[0] in zero:
            fires.hit("cnot_zero_control_elision")
            continue
        _advance_zero(zero, g)
        out.append(g)
    return out


def _pass_retarget(gates, fires):
    """Expand CY gates and eliminate CZ gates in favour of CX and H."""
    out = []
    for g in gates:
        if g.kind == "CY":
            c, t = g.q
            out += [Gate("CZ", (c, t)), Gate("CX", (c, t)), Gate("S", (c,))]
            fires.hit("cy_to_cz_cx_s")
        else:
            out.append(g)

    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(out):
            g = out[i]
            if g.kind != "CZ":
                i += 1
                continue
            j = i
            while j > 0:
                prev = out[j - 1]
                if prev.kind == "H" and prev.q[0] in g.q:
                    leg = prev.q[0]
                    other = g.q[0] if g.q[1] == leg else g.q[1]
                    if g.q[0] == leg:
                        fires.hit("cz_control_target_swap")
                    out[j - 1:j + 1] = [Gate("CX", (other, leg)), Gate("H", (leg,))]
                    fires.hit("cz_from_cx_conjugation")
                    changed = True
                    break
                if gates_commute(prev, g):
                    out[j - 1], out[j] = g, prev
                    fires.hit("gate_commutation_move")
                    j -= 1
                    continue
                break
            i += 1

    # Any CZ still present cannot reach a Hadamard: expand it with its own.
    expanded = []
    for g in out:
        if g.kind == "CZ":
            a, b = g.q
            expanded += [Gate("H", (b,)), Gate("CX", (a, b)), Gate("H", (b,))]
            fires.hit("cz_via_hadamards")
        else:
            expanded.append(g)
    return expanded


_PAIR_RULE = {
    "H": "h_pair_cancellation",
    "CX": "cx_pair_cancellation",
    "CZ": "cz_pair_cancellation",
    "Z": "z_pair_cancellation",
}


def _pass_cancel(gates, fires):
    """Cancel equal involutive pairs and merge S pairs, modulo commuters."""
    out = list(gates)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            g = out[i]
            if g.kind not in _PAIR_RULE and g.kind != "S":
                continue
            for j in range(i + 1, len(out)):
                if out[j] == g:
                    if g.kind == "S":
                        out[i] = Gate("Z", g.q)
                        del out[j]
                        fires.hit("s_pair_merge")
                    else:
                        del out[j]
                        del out[i]
                        fires.hit(_PAIR_RULE[g.kind])
                    changed = True
                    break
                if not gates_commute(g, out[j]):
                    break
            if changed:
                break
    return out


def _pass_collect_frame(gates, fires):
    """Move diagonal Pauli-axis gates (S, Z) to the end where possible.

    Returns (remaining gates, frame gates).  The frame is reported per
    qubit as the net power of S — S, Z, or Z then S — in qubit order.
    """
    out = list(gates)
    powers: dict[int, int] = {}
    moved = True
    while moved:
        moved = False
        for i, g in enumerate(out):
            if g.kind not in ("S", "Z"):
                continue
            if all(gates_commute(g, later) for later in out[i + 1:]):
                powers[g.q[0]] = (
                    powers.get(g.q[0], 0) + (1 if g.kind == "S" else 2)
                ) % 4
                if i + 1 < len(out):
                    fires.hit("gate_commutation_move", len(out) - i - 1)
                del out[i]
                moved = True
                break
    frame = []
    for q in sorted(powers):
        p = powers[q]
        if p >= 2:
            frame.append(Gate("Z", (q,)))
        if p % 2:
            frame.append(Gate("S", (q,)))
    return out, tuple(frame)


def _min_weight_combo(rows, wires, delta, width):
    m = np.array(
        [[(r >> b) & 1 for b in range(width)] for r in rows], dtype=np.uint8
    ).T
    t = np.array([(delta >> b) & 1 for b in range(width)], dtype=np.uint8)
    sol = min_weight_solution(m, t)
    if sol is None:
        return None
    return [wires[s] for s in sol]


def _pass_ports(gates, circuit, fires):
    """Re-realise each Hadamard's feeding CX gates at minimum weight.

    Wires carry GF(2) labels over a growing basis: logical inputs
    contribute one column each, and every Hadamard output is a fresh
    column.  The CX gates targeting a wire between its last reset and its
    Hadamard build that wire's label; this pass replaces them — when
    strictly fewer gates suffice — with CX gates from other wires whose
    labels sum to the same value.  Every insertion point in the window is
    considered, because other wires' labels evolve and the cheapest
    realisation may only exist at particular points; among equally cheap
    realisations the earliest insertion point wins, which packs ports
    toward the front and leaves the remaining CX gates contiguous.  Sound
    only where the rewritten wire is not read inside the window, which
    the pass checks explicitly.
    """
    if any(g.kind not in ("H", "CX", "S", "Z", "CZ") for g in gates):
        return list(gates)

    n = circuit.n
    out = list(gates)
    changed = True
    while changed:
        changed = False
        labels = {}
        n_cols = 0
        for q in range(1, n + 1):
            if circuit.roles[q - 1] == "logical_input":
                labels[q] = 1 << n_cols
                n_cols += 1
            else:
                labels[q] = 0
        snapshots = [dict(labels)]
        feeders: dict[int, list[int]] = {q: [] for q in range(1, n + 1)}
        clean: dict[int, bool] = {q: True for q in range(1, n + 1)}
        reset_label = dict(labels)
        reset_pos = {q: 0 for q in range(1, n + 1)}

        for i, g in enumerate(out):
            if g.kind == "H":
                q = g.q[0]
                delta = labels[q] ^ reset_label[q]
                old = feeders[q]
                if clean[q] and old:
                    width = max(n_cols, 1)
                    wires = [w for w in range(1, n + 1) if w != q]
                    best = None
                    for pos in range(reset_pos[q], i + 1):
                        snap = snapshots[pos]
                        combo = _min_weight_combo(
                            [snap[w] for w in wires], wires, delta, width
                        )
                        if combo is None:
                            continue
                        key = (len(combo), pos, combo)
                        if best is None or key < best[0]:
                            best = (key, pos, combo)
                    if best is not None and len(best[2]) < len(old):
                        _key, pos, combo = best
                        new = [Gate("CX", (w, q)) for w in combo]
                        for idx in reversed(old):
                            del out[idx]
                        pos -= sum(1 for idx in old if idx < pos)
                        out[pos:pos] = new
                        fires.hit("port_minimization")
                        changed = True
                        break
                labels[q] = 1 << n_cols
                n_cols += 1
                reset_label[q] = labels[q]
                reset_pos[q] = i + 1
                feeders[q] = []
                clean[q] = True
            elif g.kind == "CX":
                c, t = g.q
                if feeders[c]:
                    clean[c] = False
                labels[t] ^= labels[c]
                feeders[t].append(i)
            else:
                # S, Z and CZ read their wires' values through phases.
                for q in g.q:
                    if feeders[q]:
                        clean[q] = False
            snapshots.append(dict(labels))
    return out


def _pass_fold(gates, circuit, fires):
    """Fold a wire's CX fan-in through another wire's evolution.

    When three or more CX gates feed wire ``t`` and the XOR of the values
    they deliver equals how some other wire ``s`` changes between the
    first and last of them, the whole group collapses to two copies of
    CX(s, t) — one at each end of the span, letting ``s`` carry the
    difference.  The replacement is exact provided nothing reads ``t``
    strictly inside the span, which the pass checks.  Wires are labelled
    as in the port pass: logical inputs and each Hadamard output
    contribute one GF(2) basis column.
    """
    if any(g.kind not in ("H", "CX", "S", "Z", "CZ") for g in gates):
        return list(gates)

    n = circuit.n
    out = list(gates)
    changed = True
    while changed:
        changed = False
        labels = {}
        n_cols = 0
        for q in range(1, n + 1):
            if circuit.roles[q - 1] == "logical_input":
                labels[q] = 1 << n_cols
                n_cols += 1
            else:
                labels[q] = 0
        snapshots = [dict(labels)]
        adds: dict[int, list[int]] = {q: [] for q in range(1, n + 1)}
        reads: dict[int, list[int]] = {q: [] for q in range(1, n + 1)}
        for i, g in enumerate(out):
            if g.kind == "H":
                q = g.q[0]
                reads[q].append(i)
                labels[q] = 1 << n_cols
                n_cols += 1
            elif g.kind == "CX":
                c, t = g.q
                reads[c].append(i)
                adds[t].append(i)
                labels[t] ^= labels[c]
            else:
                for q in g.q:
                    reads[q].append(i)
            snapshots.append(dict(labels))

        best = None
        for t in range(1, n + 1):
            pos = adds[t]
            if len(pos) < 3:
                continue
            for size in range(len(pos), 2, -1):
                for subset in combinations(pos, size):
                    lo, hi = subset[0], subset[-1]
                    if any(lo < r < hi for r in reads[t]):
                        continue
                    delta = 0
                    for p in subset:
                        delta ^= snapshots[p][out[p].q[0]]
                    i_min = max(
                        (r for r in reads[t] if r < lo), default=-1
                    ) + 1
                    j_max = min(
                        (r for r in reads[t] if r > hi), default=len(out)
                    )
                    for i in range(lo, i_min - 1, -1):
                        for j in range(hi + 1, j_max + 1):
                            if delta == 0:
                                key = (-size, t, subset, 0, 0, 0)
                                if best is None or key < best:
                                    best = key
                                break
                            for s in range(1, n + 1):
                                if s == t:
                                    continue
                                if snapshots[i][s] ^ snapshots[j][s] != delta:
                                    continue
                                key = (
                                    -(size - 2), t, subset,
                                    lo - i, j - hi - 1, s,
                                )
                                if best is None or key < best:
                                    best = key
                        if delta == 0:
                            break
        if best is not None:
            neg_gain, t, subset, di, dj, s = best
            members = set(subset)
            i = subset[0] - di
            j = subset[-1] + 1 + dj
            rebuilt = []
            for k, g in enumerate(out):
                if k == i and neg_gain != -len(subset):
                    rebuilt.append(Gate("CX", (s, t)))
                if k == j and neg_gain != -len(subset):
                    rebuilt.append(Gate("CX", (s, t)))
                if k not in members:
                    rebuilt.append(g)
            if j == len(out) and neg_gain != -len(subset):
                rebuilt.append(Gate("CX", (s, t)))
            out = rebuilt
            fires.hit("fanin_fold")
            changed = True
    return out


def _pass_triangles(gates, fires):
    """Contract CNOT-distribution triples back to two gates."""
    out = list(gates)
    changed = True
    while changed:
        changed = False
        for k in range(len(out)):
            g3 = out[k]
            if g3.kind != "CX":
                continue
            a, b = g3.q
            j = k - 1
            while j >= 0:
                g2 = out[j]
                if g2.kind == "CX" and g2.q[0] == a and g2.q[1] != b:
                    c = g2.q[1]
                    want = Gate("CX", (b, c))
                    i = j - 1
                    while i >= 0:
                        g1 = out[i]
                        if g1 == want:
                            seg1 = out[i + 1:j]
                            seg2 = out[j + 1:k]
                            out[i:k + 1] = seg1 + [g3, g1] + seg2
                            fires.hit("triangle_contraction")
                            changed = True
                            break
                        if not gates_commute(g1, want):
                            break
                        i -= 1
                    if changed:
                        break
                if not gates_commute(g2, g3):
                    break
                j -= 1
            if changed:
                break
    return out


# ---------------------------------------------------------------------------
# block extraction and resynthesis


def _bubble_singles(gates):
    """Move single-qubit gates left past two-qubit gates they commute with."""
    out = list(gates)
    moved = True
    while moved:
        moved = False
        for i in range(1, len(out)):
            g, prev = out[i], out[i - 1]
            if len(g.q) == 1 and len(prev.q) == 2 and gates_commute(prev, g):
                out[i - 1], out[i] = g, prev
                moved = True
    return out


def extract_cnot_blocks(circuit: Circuit) -> list[CnotBlock]:
    """Maximal contiguous CX runs, after commuting single-qubit gates away.

    Single-qubit gates are first bubbled leftward past any two-qubit gate
    they commute with, so runs interrupted only by movable gates merge.
    Spans index into that reordered gate list.
    """
    reordered = _bubble_singles(circuit.gates)
    blocks = []
    start = None
    for i, g in enumerate(reordered + [Gate("H", (1,))]):
        if i < len(reordered) and g.kind == "CX":
            if start is None:
                start = i
        elif start is not None:
            blocks.append(
                CnotBlock(range(start, i), tuple(reordered[start:i]))
            )
            start = None
    return blocks


def _resynthesize_blocks(gates, n, budget, report):
    out = _bubble_singles(gates)
    spans = []
    start = None
    for i in range(len(out) + 1):
        if i < len(out) and out[i].kind == "CX":
            if start is None:
                start = i
        elif start is not None:
            spans.append((start, i))
            start = None
    for s, e in reversed(spans):
        block = out[s:e]
        if len(block) < 2:
            continue
        m = block_to_matrix(block, n)
        better = resynthesize(m, "search", budget=budget, witness=block)
        if len(better) < len(block):
            report.blocks_resynthesized.append({
                "span": [s, e],
                "gates_before": len(block),
                "gates_after": len(better),
                "method": "search",
            })
            out[s:e] = list(better)
    return out


def _best_witness(candidates, matrix, n, zero_columns):
    """Shortest candidate realising ``matrix`` up to the don't-care columns."""
    mask = (1 << n) - 1
    for w in zero_columns:
        mask &= ~(1 << (n - w))
    want = [int(v) for v in matrix @ (1 << np.arange(n - 1, -1, -1))]
    best = None
    for cand in candidates:
        cand = tuple(cand)
        if any(g.kind != "CX" for g in cand):
            continue
        got = [
            int(v)
            for v in block_to_matrix(cand, n) @ (1 << np.arange(n - 1, -1, -1))
        ]
        if any((a ^ b) & mask for a, b in zip(got, want)):
            continue
        key = (len(cand), tuple(g.q for g in cand))
        if best is None or key < best[0]:
            best = (key, cand)
    return None if best is None else best[1]


def _staged_resynthesis(gates, circuit, budget, witnesses, report):
    """Hadamard-deferred region resynthesis for encoder-shaped circuits.

    After the rewrite passes, an encoder circuit bubbles into a leading CX
    run, a stack of Hadamards, and a trailing CX run.  Deferring a suffix
    of the stack — moving each deferred wire's Hadamard and fan-out gates
    behind the trailing run, and its feeding gates into it — leaves one
    wide CX region whose still-|0⟩ input wires turn whole matrix columns
    into don't-cares.  Every suffix split is scored with the budgeted
    search over that masked target and the lowest total CX count wins.
    Returns the rebuilt gate list, or ``None`` when the circuit does not
    match the three-section shape.
    """
    out = _bubble_singles(gates)
    n = circuit.n
    i = 0
    while i < len(out) and out[i].kind == "CX":
        i += 1
    j = i
    while j < len(out) and out[j].kind == "H":
        j += 1
    if j == i or any(g.kind != "CX" for g in out[j:]):
        return None
    ports, stack, tail = out[:i], out[i:j], out[j:]
    pivots = [g.q[0] for g in stack]
    if len(set(pivots)) != len(pivots):
        return None

    best = None
    for defer in range(len(pivots) + 1):
        front = set(pivots[:len(pivots) - defer])
        back = pivots[len(pivots) - defer:]
        back_set = set(back)

        front_ports, region = [], []
        if any(g.q[1] in back_set and g.q[0] in front for g in ports):
            continue  # a deferred wire is fed from behind a kept Hadamard
        for g in ports:
            (region if g.q[1] in back_set else front_ports).append(g)

        # Fan-out gates of deferred wires move behind their Hadamard; each
        # must commute past every region gate it jumps over.
        fanout = {b: [] for b in back}
        movable = True
        for p, g in enumerate(tail):
            if g.q[0] in back_set:
                if all(
                    later.q[0] in back_set or gates_commute(g, later)
                    for later in tail[p + 1:]
                ):
                    fanout[g.q[0]].append(g)
                else:
                    movable = False
                    break
            else:
                region.append(g)
        if not movable:
            continue

        written = {g.q[1] for g in front_ports}
        zero_columns = tuple(
            w for w in range(1, n + 1)
            if circuit.roles[w - 1] != "logical_input"
            and w not in front and w not in written
        )
        matrix = block_to_matrix(region, n)
        witness = _best_witness(
            [region, *witnesses], matrix, n, zero_columns
        )
        searched = resynthesize(
            matrix, "search", budget=budget, witness=witness,
            zero_columns=zero_columns,
        )
        total = len(front_ports) + len(searched) + sum(
            len(v) for v in fanout.values()
        )
        if best is None or total < best[0]:
            rebuilt = list(front_ports)
            rebuilt += [g for g in stack if g.q[0] in front]
            start = len(rebuilt)
            rebuilt += list(searched)
            for b in back:
                rebuilt.append(Gate("H", (b,)))
                rebuilt += fanout[b]
            best = (total, start, len(region), len(searched), back, rebuilt)

    if best is None:
        return None
    _total, start, before, after, back, rebuilt = best
    if after < before:
        report.blocks_resynthesized.append({
            "span": [start, start + after],
            "gates_before": before,
            "gates_after": after,
            "method": "search",
            "deferred_hadamards": list(back),
        })
    return rebuilt


# ---------------------------------------------------------------------------
# entry points


def _pipeline(circuit: Circuit, fires: _Fires):
    gates = _pass_strip(circuit.gates, circuit, fires)
    gates = _pass_retarget(gates, fires)
    gates = _pass_strip(gates, circuit, fires)
    gates = _pass_cancel(gates, fires)
    gates, frame = _pass_collect_frame(gates, fires)
    baseline = sum(1 for g in gates if len(g.q) == 2)
    gates = _pass_ports(gates, circuit, fires)
    gates = _pass_cancel(gates, fires)
    gates = _pass_triangles(gates, fires)
    gates = _pass_fold(gates, circuit, fires)
    gates = _pass_triangles(gates, fires)
    gates = _pass_strip(gates, circuit, fires)
    return gates, frame, baseline


def apply_rules(circuit: Circuit, *, target_gates: str = "cnot-h") -> Circuit:
    """Rewrite ``circuit`` toward ``target_gates`` using registered rules.

    The result is a self-contained exact equivalent of the input: any
    residual diagonal Pauli frame stays in the gate list, at the end.
    """
    if target_gates not in TARGET_GATE_SETS:
        raise ValueError(
            f"unknown target gate set {target_gates!r}; choose from "
            f"{', '.join(TARGET_GATE_SETS)}"
        )
    fires = _Fires()
    gates, frame, _ = _pipeline(circuit, fires)
    return circuit.replace_gates(
        tuple(gates) + frame, note="rewritten toward the cnot-h gate set"
    )


def frame_from_notes(circuit: Circuit) -> tuple[Gate, ...]:
    """Parse the trailing Pauli frame recorded in a circuit's notes."""
    for note in circuit.notes:
        m = _FRAME_NOTE.match(note)
        if m:
            gates = []
            for chunk in m.group(1).split():
                kind, q = chunk[0], chunk[2:-1]
                gates.append(Gate(kind, (int(q),)))
            return tuple(gates)
    return ()


def optimize(
    circuit: Circuit,
    *,
    level: str = "rules",
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    target_gates: str = "cnot-h",
    block_witnesses=None,
) -> tuple[Circuit, OptimizationReport]:
    """Optimize ``circuit`` and prove the result equivalent to the input.

    At ``level="rules"`` only the rewrite passes run; ``level="full"``
    additionally resynthesizes CNOT regions with the budgeted search —
    staged Hadamard-deferred regions when the circuit has the encoder
    shape, falling back to per-block resynthesis otherwise.  Known short
    realisations can be supplied as ``block_witnesses`` (sequences of CX
    gates); a witness is used whenever its matrix matches a region's on
    the columns that matter.  The returned circuit is expressed over the
    target gate set; any residual diagonal Pauli frame is split into the
    report (and recorded in the circuit notes), and the circuit composed
    with its frame is re-simulated against the input on every ancilla-
    restricted basis state.  A mismatch raises ``OptimizationError``.
    """
    if level not in LEVELS:
        raise ValueError(
            f"unknown optimization level {level!r}; choose from "
            f"{', '.join(LEVELS)}"
        )
    if target_gates not in TARGET_GATE_SETS:
        raise ValueError(
            f"unknown target gate set {target_gates!r}; choose from "
            f"{', '.join(TARGET_GATE_SETS)}"
        )

    fires = _Fires()
    report = OptimizationReport(
        counts_before=gate_counts(circuit), counts_after={}
    )
    gates, frame, baseline = _pipeline(circuit, fires)
    if level == "full":
        witnesses = [
            tuple(Gate("CX", (int(c), int(t))) for c, t in w)
            for w in (block_witnesses or ())
        ]
        staged = _staged_resynthesis(
            gates, circuit, search_budget, witnesses, report
        )
        if staged is not None:
            gates = staged
        else:
            gates = _resynthesize_blocks(
                gates, circuit.n, search_budget, report
            )

    if sum(1 for g in gates if len(g.q) == 2) > baseline:
        raise OptimizationError(
            "optimization increased the two-qubit gate count past the "
            "retargeted baseline; this is a bug in the rewrite passes"
        )

    notes = [f"optimized: level={level}"]
    if frame:
        notes.append("pauli frame: " + " ".join(str(g) for g in frame))
    result = circuit.replace_gates(tuple(gates), note=notes[0])
    for extra in notes[1:]:
        result = Circuit(
            result.n, result.gates, result.roles, name=result.name,
            notes=result.notes + (extra,), measurements=result.measurements,
        )

    with_frame = Circuit(
        result.n, result.gates + frame, result.roles, name=result.name,
    )
    bare_input = Circuit(circuit.n, circuit.gates, circuit.roles)
    if not circuits_equivalent(
        with_frame, bare_input, scope="ancilla_restricted",
        up_to_global_phase=False,
    ):
        raise OptimizationError(
            "optimized circuit (with its Pauli frame) is not equivalent to "
            "the input on the ancilla-restricted state space"
        )

    report.counts_after = gate_counts(result)
    report.rules_fired = dict(fires)
    report.frame = frame
    return result, report
