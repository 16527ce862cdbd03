"""Rewrite-rule registry: soundness guard, lookup, commutation predicate."""

import numpy as np
import pytest

from stabsynth.circuit import Gate
from stabsynth.rules import REGISTRY, RewriteRule, gates_commute, register, rule
from stabsynth.simulator import StateVector, apply_gate


def test_registry_holds_verified_rules():
    assert len(REGISTRY) >= 16
    for name, r in REGISTRY.items():
        assert r.name == name
        r.verify()  # exact unitary identity, no tolerance slack


def test_lookup():
    assert rule("triangle_contraction").arity == 3
    with pytest.raises(KeyError, match="no rewrite rule named"):
        rule("does_not_exist")


def test_register_rejects_duplicates_and_unsound_rules():
    existing = rule("h_pair_cancellation")
    with pytest.raises(ValueError, match="already registered"):
        register(existing)
    with pytest.raises(AssertionError, match="not a unitary identity"):
        register(RewriteRule(
            "h_is_not_identity", pattern=(Gate("H", (1,)),), replacement=(),
        ))
    assert "h_is_not_identity" not in REGISTRY


def test_zero_slot_rules_claim_only_the_zero_subspace():
    r = rule("cnot_zero_control_elision")
    assert r.zero_slots == frozenset({1})
    # On the full space CX is certainly not the identity, so the claim
    # must be restricted for verify() to succeed.
    unrestricted = RewriteRule(
        "cnot_elision_unrestricted",
        pattern=r.pattern,
        replacement=r.replacement,
    )
    with pytest.raises(AssertionError):
        unrestricted.verify()


def test_instantiate_maps_slots_to_wires():
    r = rule("cz_from_cx_conjugation")
    gates = r.instantiate({1: 4, 2: 7})
    assert gates == (Gate("CX", (7, 4)), Gate("H", (4,)))


def test_gates_commute_is_sound_on_random_pairs():
    # The syntactic predicate may be conservative but must never claim a
    # false commutation; cross-check against the simulator on two qubits.
    rng = np.random.default_rng(3)
    pool = [Gate(k, (q,)) for k in ("H", "S", "X", "Y", "Z") for q in (1, 2)]
    pool += [Gate(k, (c, t)) for k in ("CX", "CY", "CZ")
             for c, t in ((1, 2), (2, 1))]

    def unitary(gates):
        u = np.zeros((4, 4), dtype=complex)
        for col in range(4):
            sv = StateVector.from_label(format(col, "02b"))
            for g in gates:
                apply_gate(sv, g)
            u[:, col] = sv.amps
        return u

    for _ in range(60):
        a, b = rng.choice(len(pool), size=2)
        ga, gb = pool[a], pool[b]
        if gates_commute(ga, gb):
            ua, ub = unitary([ga]), unitary([gb])
            assert np.allclose(ua @ ub, ub @ ua, atol=1e-12), (ga, gb)


def test_known_commutation_calls():
    assert gates_commute(Gate("CX", (1, 2)), Gate("CX", (1, 3)))
    assert gates_commute(Gate("CX", (1, 2)), Gate("CX", (3, 2)))
    assert not gates_commute(Gate("CX", (1, 2)), Gate("CX", (2, 3)))
    assert gates_commute(Gate("CZ", (1, 2)), Gate("CZ", (2, 3)))
    assert gates_commute(Gate("Z", (1,)), Gate("CX", (1, 2)))
    assert not gates_commute(Gate("Z", (2,)), Gate("CX", (1, 2)))
    assert not gates_commute(Gate("H", (1,)), Gate("CX", (1, 2)))
