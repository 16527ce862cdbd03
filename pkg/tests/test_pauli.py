"""Pauli-string algebra: parsing, printing, products, commutation."""

import numpy as np
import pytest

from stabsynth.pauli import PauliString


def test_parse_round_trips_every_phase_prefix():
    for text in ("XZIY", "iXZIY", "-XZIY", "-iXZIY"):
        assert str(PauliString.parse(text)) == text
    assert str(PauliString.parse("+XZ")) == "XZ"
    assert str(PauliString.parse("+iXZ")) == "iXZ"


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError, match="bad Pauli letter 'Q'"):
        PauliString.parse("XQZ")
    with pytest.raises(ValueError, match="no Pauli letters"):
        PauliString.parse("-")
    with pytest.raises(ValueError, match="bad phase prefix"):
        PauliString.parse("--X")


def test_identity_and_weight():
    one = PauliString.identity(5)
    assert str(one) == "IIIII"
    assert one.weight == 0
    assert PauliString.parse("XIYIZ").weight == 3


def test_known_products():
    x, z, y = (PauliString.parse(s) for s in "XZY")
    assert x * z == PauliString.parse("-iY")
    assert z * x == PauliString.parse("iY")
    assert x * y == PauliString.parse("iZ")
    assert y * x == PauliString.parse("-iZ")
    assert z * y == PauliString.parse("-iX")
    assert y * z == PauliString.parse("iX")
    for p in (x, z, y):
        assert p * p == PauliString.identity(1)


def test_product_letters_are_bitwise_xor():
    a = PauliString.parse("XXYZI")
    b = PauliString.parse("ZIYXZ")
    prod = a * b
    assert np.array_equal(prod.x, a.x ^ b.x)
    assert np.array_equal(prod.z, a.z ^ b.z)


def test_commutation_matches_product_order():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = PauliString(
            rng.integers(0, 2, 6, dtype=np.uint8),
            rng.integers(0, 2, 6, dtype=np.uint8),
        )
        b = PauliString(
            rng.integers(0, 2, 6, dtype=np.uint8),
            rng.integers(0, 2, 6, dtype=np.uint8),
        )
        assert a.commutes_with(b) == (a * b == b * a)


def test_product_is_associative():
    rng = np.random.default_rng(11)
    for _ in range(100):
        a, b, c = (
            PauliString(
                rng.integers(0, 2, 5, dtype=np.uint8),
                rng.integers(0, 2, 5, dtype=np.uint8),
                phase_exp=int(rng.integers(0, 4)),
            )
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


def test_self_product_is_identity():
    rng = np.random.default_rng(13)
    for _ in range(50):
        a = PauliString(
            rng.integers(0, 2, 7, dtype=np.uint8),
            rng.integers(0, 2, 7, dtype=np.uint8),
        )
        assert a * a == PauliString.identity(7)


def test_symplectic_row_round_trip():
    p = PauliString.parse("-iXYZI")
    row = p.symplectic_row()
    assert row.tolist() == [1, 1, 0, 0, 0, 1, 1, 0]
    back = PauliString.from_symplectic_row(row, phase_exp=p.phase_exp)
    assert back == p


def test_equality_includes_phase_and_supports_hashing():
    a = PauliString.parse("XZ")
    b = PauliString.parse("-XZ")
    assert a != b
    assert a == PauliString.parse("XZ")
    assert len({a, PauliString.parse("XZ"), b}) == 2


def test_mismatched_lengths_do_not_compare_equal():
    assert PauliString.parse("XZ") != PauliString.parse("XZI")
