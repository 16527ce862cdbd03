"""Rewrite rules for Clifford circuits, brute-force verified at registration.

Every rule is an exact unitary identity on its local window — no global
phase slack — and a rule carrying ``zero_slots`` claims the identity only
on the subspace where those qubits are |0>.  ``register`` checks each
claim by building both sides' unitaries on the rule's (at most three)
qubits, so an unsound rule cannot enter the registry.  The same module
hosts the syntactic commutation test used to slide gates past each other;
it too is verified exhaustively at import time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuit import Gate, ONE_QUBIT_KINDS, TWO_QUBIT_KINDS
from .simulator import StateVector, apply_gate

__all__ = [
    "REGISTRY",
    "RewriteRule",
    "gates_commute",
    "register",
    "rule",
]


def _unitary(gates, n):
    dim = 2 ** n
    u = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        sv = StateVector.from_label(format(col, f"0{n}b"))
        for g in gates:
            apply_gate(sv, g)
        u[:, col] = sv.amps
    return u


@dataclass(frozen=True)
class RewriteRule:
    """A window rewrite: ``pattern`` gates may be replaced by ``replacement``.

    Gates are templates over slot numbers 1..arity; ``instantiate`` maps
    slots to concrete qubits.  ``zero_slots`` lists slots that must be
    proven |0> at the window for the rewrite to be sound.
    """

    name: str
    pattern: tuple[Gate, ...]
    replacement: tuple[Gate, ...]
    zero_slots: frozenset[int] = field(default_factory=frozenset)

    @property
    def arity(self) -> int:
        slots = {q for g in self.pattern + self.replacement for q in g.q}
        return max(slots) if slots else 0

    def instantiate(self, assignment: dict[int, int]) -> tuple[Gate, ...]:
        """Replacement gates with slot numbers mapped through ``assignment``."""
        return tuple(
            Gate(g.kind, tuple(assignment[s] for s in g.q))
            for g in self.replacement
        )

    def verify(self) -> None:
        n = self.arity
        u_lhs = _unitary(self.pattern, n)
        u_rhs = _unitary(self.replacement, n)
        cols = range(2 ** n)
        if self.zero_slots:
            cols = [
                c for c in cols
                if all(not (c >> (n - s)) & 1 for s in self.zero_slots)
            ]
            u_lhs = u_lhs[:, cols]
            u_rhs = u_rhs[:, cols]
        if not np.allclose(u_lhs, u_rhs, atol=1e-12):
            raise AssertionError(
                f"rewrite rule {self.name!r} is not a unitary identity"
            )


REGISTRY: dict[str, RewriteRule] = {}


def register(r: RewriteRule) -> RewriteRule:
    """Verify ``r`` by brute force and add it to the registry."""
    if r.name in REGISTRY:
        raise ValueError(f"rewrite rule {r.name!r} is already registered")
    r.verify()
    REGISTRY[r.name] = r
    return r


def rule(name: str) -> RewriteRule:
    """Look up a registered rule by name."""
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"no rewrite rule named {name!r}") from None


def _g(kind, *slots):
    return Gate(kind, slots)


register(RewriteRule(
    "cy_to_cz_cx_s",
    pattern=(_g("CY", 1, 2),),
    replacement=(_g("CZ", 1, 2), _g("CX", 1, 2), _g("S", 1)),
))

register(RewriteRule(
    "cz_control_target_swap",
    pattern=(_g("CZ", 1, 2),),
    replacement=(_g("CZ", 2, 1),),
))

register(RewriteRule(
    "cz_from_cx_conjugation",
    pattern=(_g("H", 1), _g("CZ", 1, 2)),
    replacement=(_g("CX", 2, 1), _g("H", 1)),
))

register(RewriteRule(
    "cz_via_hadamards",
    pattern=(_g("CZ", 1, 2),),
    replacement=(_g("H", 2), _g("CX", 1, 2), _g("H", 2)),
))

register(RewriteRule(
    "cnot_distribution",
    pattern=(_g("CX", 1, 2), _g("CX", 2, 3)),
    replacement=(_g("CX", 2, 3), _g("CX", 1, 3), _g("CX", 1, 2)),
))

register(RewriteRule(
    "triangle_contraction",
    pattern=(_g("CX", 2, 3), _g("CX", 1, 3), _g("CX", 1, 2)),
    replacement=(_g("CX", 1, 2), _g("CX", 2, 3)),
))

register(RewriteRule(
    "h_pair_cancellation",
    pattern=(_g("H", 1), _g("H", 1)),
    replacement=(),
))

register(RewriteRule(
    "cx_pair_cancellation",
    pattern=(_g("CX", 1, 2), _g("CX", 1, 2)),
    replacement=(),
))

register(RewriteRule(
    "cz_pair_cancellation",
    pattern=(_g("CZ", 1, 2), _g("CZ", 1, 2)),
    replacement=(),
))

register(RewriteRule(
    "s_pair_merge",
    pattern=(_g("S", 1), _g("S", 1)),
    replacement=(_g("Z", 1),),
))

register(RewriteRule(
    "z_pair_cancellation",
    pattern=(_g("Z", 1), _g("Z", 1)),
    replacement=(),
))

register(RewriteRule(
    "cnot_zero_control_elision",
    pattern=(_g("CX", 1, 2),),
    replacement=(),
    zero_slots=frozenset({1}),
))

register(RewriteRule(
    "cz_zero_leg_elision",
    pattern=(_g("CZ", 1, 2),),
    replacement=(),
    zero_slots=frozenset({1}),
))

register(RewriteRule(
    "phase_zero_elision",
    pattern=(_g("S", 1),),
    replacement=(),
    zero_slots=frozenset({1}),
))

register(RewriteRule(
    "z_zero_elision",
    pattern=(_g("Z", 1),),
    replacement=(),
    zero_slots=frozenset({1}),
))

register(RewriteRule(
    "hadamard_basis_ancilla",
    pattern=(_g("H", 2), _g("CX", 1, 2)),
    replacement=(_g("H", 2),),
    zero_slots=frozenset({2}),
))


# ---------------------------------------------------------------------------
# Commutation


def _local_actions(gate: Gate) -> dict[int, str]:
    """How ``gate`` acts on each of its qubits: diagonal, X-type, Y-type, or H."""
    kind = gate.kind
    if kind in ("S", "Z"):
        return {gate.q[0]: "diag"}
    if kind in ("X", "Y", "H"):
        return {gate.q[0]: {"X": "x", "Y": "y", "H": "h"}[kind]}
    c, t = gate.q
    if kind == "CZ":
        return {c: "diag", t: "diag"}
    return {c: "diag", t: "x" if kind == "CX" else "y"}


_COMMUTING_LOCAL_PAIRS = {
    ("diag", "diag"), ("x", "x"), ("y", "y"),
}


def gates_commute(a: Gate, b: Gate) -> bool:
    """Syntactic test that two gates commute exactly.

    Conservative: gates with disjoint supports always commute, and on
    every shared qubit the local actions must be of the same commuting
    type (both diagonal, both X-like, or both Y-like).  Verified
    exhaustively against the dense simulator at import time.
    """
    la, lb = _local_actions(a), _local_actions(b)
    shared = la.keys() & lb.keys()
    return all((la[q], lb[q]) in _COMMUTING_LOCAL_PAIRS for q in shared)


def _verify_commutation_predicate() -> None:
    gates = [Gate(k, (q,)) for k in ONE_QUBIT_KINDS for q in (1, 2, 3)]
    gates += [
        Gate(k, (c, t))
        for k in TWO_QUBIT_KINDS
        for c in (1, 2, 3)
        for t in (1, 2, 3)
        if c != t
    ]
    for a in gates:
        ua = _unitary([a], 3)
        for b in gates:
            if not gates_commute(a, b):
                continue
            ub = _unitary([b], 3)
            if not np.allclose(ua @ ub, ub @ ua, atol=1e-12):
                raise AssertionError(
                    f"commutation predicate wrongly passes {a} and {b}"
                )


_verify_commutation_predicate()
