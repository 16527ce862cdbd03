"""Synthesis of CNOT networks from their GF(2) transfer matrices.

A circuit made only of CX gates acts linearly on computational basis
labels: tracking each qubit's bit as a row vector, CX(c, t) adds row c
into row t.  The whole block is therefore summarised by an invertible
matrix over GF(2), and conversely any invertible matrix can be realised
as a CNOT network.  This module converts between the two representations
and offers two synthesis strategies: a deterministic Gaussian-elimination
routine and a budgeted iterative-deepening search for short realisations.
"""

from __future__ import annotations

import numpy as np

from .circuit import Gate
from .gf2 import as_bits, identity, invertible

__all__ = [
    "DEFAULT_SEARCH_BUDGET",
    "block_to_matrix",
    "gaussian_ops",
    "resynthesize",
    "search_ops",
]

DEFAULT_SEARCH_BUDGET = 50_000


def block_to_matrix(gates, n):
    """Transfer matrix of a CX-only gate sequence on ``n`` qubits.

    Row ``i`` of the result expresses the final bit carried by qubit
    ``i + 1`` as a GF(2) combination of the input bits.  Gates are applied
    in circuit order; anything other than a CX raises ``ValueError``
    because only CNOT networks are linear in this sense.
    """
    m = identity(n)
    for gate in gates:
        if gate.kind != "CX":
            raise ValueError(
                f"block_to_matrix needs a CX-only sequence, found {gate.kind}"
            )
        c, t = gate.q
        m[t - 1] ^= m[c - 1]
    return m


def _require_square_invertible(m):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not invertible(m):
        raise ValueError(
            "matrix is not invertible over GF(2); "
            "only reversible CNOT blocks can be resynthesized"
        )


def gaussian_ops(matrix):
    """Realise ``matrix`` as a CX sequence by Gaussian elimination.

    The matrix is reduced to the identity by row additions — a downward
    sweep column by column, a three-addition exchange whenever a pivot is
    missing, then upward back-substitution from the last column — and the
    recorded additions are replayed in reverse as CX gates.  The result is
    deterministic and lands on the identity matrix as an empty sequence.
    """
    m = as_bits(matrix).copy()
    _require_square_invertible(m)
    n = m.shape[0]
    ops: list[tuple[int, int]] = []

    def add(src, dst):
        m[dst] ^= m[src]
        ops.append((src, dst))

    for j in range(n):
        if not m[j, j]:
            i = j + int(np.flatnonzero(m[j:, j])[0])
            add(i, j)
            add(j, i)
            add(i, j)
        for i in range(j + 1, n):
            if m[i, j]:
                add(j, i)
    for j in range(n - 1, -1, -1):
        for i in range(j - 1, -1, -1):
            if m[i, j]:
                add(j, i)
    return tuple(Gate("CX", (c + 1, t + 1)) for c, t in reversed(ops))


def _pack_rows(m):
    n = m.shape[0]
    weights = 1 << np.arange(n - 1, -1, -1)
    return tuple(int(v) for v in m @ weights)


def _gate_key(gates):
    return tuple(g.q for g in gates)


def search_ops(matrix, *, budget=DEFAULT_SEARCH_BUDGET, witness=None,
               zero_columns=()):
    """Budgeted iterative-deepening search for a short CX realisation.

    Gate sequences are explored depth-first in ascending (control, target)
    order under an f = depth + h bound, where h counts the rows that still
    differ from the target — admissible because one CX rewrites exactly
    one row.  A per-iteration transposition table prunes revisits and
    ``budget`` caps node expansions across all iterations.  The first
    solution found is the shortest, and among equally short sequences the
    first in depth-first order.  Whenever the search is exhausted or the
    budget runs out, the best known realisation — a verified ``witness``
    if one was supplied, otherwise the Gaussian circuit — is returned, so
    the result is never longer than Gaussian elimination.

    ``zero_columns`` names qubits (1-based) whose input bit is known to be
    zero when the block runs.  Their columns become don't-cares: the
    search may return a sequence whose matrix differs from ``matrix`` in
    those columns, since the difference never reaches any state the block
    actually sees.  A witness only needs to agree on the other columns.
    """
    target = as_bits(matrix)
    _require_square_invertible(target)
    n = target.shape[0]
    if budget < 0:
        raise ValueError(f"search budget must be non-negative, got {budget}")
    mask = (1 << n) - 1
    for w in zero_columns:
        if not 1 <= w <= n:
            raise ValueError(f"zero_columns entry {w} outside 1..{n}")
        mask &= ~(1 << (n - w))

    goal = _pack_rows(target)

    def matches(state):
        return all((a ^ b) & mask == 0 for a, b in zip(state, goal))

    fallback = gaussian_ops(target)
    if witness is not None:
        w = tuple(witness)
        if not matches(_pack_rows(block_to_matrix(w, n))):
            raise ValueError("witness does not realize the target matrix")
        if (len(w), _gate_key(w)) < (len(fallback), _gate_key(fallback)):
            fallback = w

    start = _pack_rows(identity(n))
    if matches(start):
        return ()

    moves = [(c, t) for c in range(n) for t in range(n) if t != c]

    def h(state):
        return sum((a ^ b) & mask != 0 for a, b in zip(state, goal))

    upper = len(fallback)
    spent = 0
    bound = h(start)
    path: list[tuple[int, int]] = []

    def dfs(state, g, bound, seen):
        """Return (found, next_bound); raises _Exhausted when out of budget."""
        nonlocal spent
        if matches(state):
            return True, bound
        slack = bound - g
        if h(state) > slack:
            return False, g + h(state)
        spent += 1
        if spent > budget:
            raise _Exhausted
        nxt = None
        for c, t in moves:
            child = list(state)
            child[t] ^= state[c]
            child = tuple(child)
            prev = seen.get(child)
            if prev is not None and prev <= g + 1:
                continue
            seen[child] = g + 1
            path.append((c + 1, t + 1))
            found, fb = dfs(child, g + 1, bound, seen)
            if found:
                return True, bound
            path.pop()
            if nxt is None or fb < nxt:
                nxt = fb
        return False, bound + 1 if nxt is None else nxt

    try:
        while bound < upper:
            found, nxt = dfs(start, 0, bound, {start: 0})
            if found:
                return tuple(Gate("CX", q) for q in path)
            if nxt <= bound:
                break
            bound = nxt
    except _Exhausted:
        pass
    return fallback


class _Exhausted(Exception):
    """Internal signal: the node budget ran out mid-iteration."""


def resynthesize(matrix, method="gaussian", *, budget=DEFAULT_SEARCH_BUDGET,
                 witness=None, zero_columns=()):
    """Synthesise a CX gate sequence whose transfer matrix is ``matrix``.

    ``method`` selects the strategy: ``"gaussian"`` for deterministic
    elimination, ``"search"`` for the budgeted iterative-deepening search
    (optionally seeded with a known ``witness`` realisation and free to
    treat ``zero_columns`` as don't-cares).  Both accept only square
    invertible matrices and return a tuple of CX gates.
    """
    m = as_bits(matrix)
    if method == "gaussian":
        return gaussian_ops(m)
    if method == "search":
        return search_ops(m, budget=budget, witness=witness,
                          zero_columns=zero_columns)
    raise ValueError(
        f"unknown resynthesis method {method!r}; use 'gaussian' or 'search'"
    )
