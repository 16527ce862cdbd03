"""GF(2) linear algebra helpers."""

import numpy as np
import pytest

from stabsynth import gf2


def test_as_bits_accepts_strings_and_lists():
    assert gf2.as_bits(["10", "01"]).tolist() == [[1, 0], [0, 1]]
    assert gf2.as_bits([[1, 0], [0, 1]]).dtype == np.uint8


def test_identity_and_mat_mul():
    eye = gf2.identity(3)
    m = gf2.as_bits(["110", "011", "001"])
    assert np.array_equal(gf2.mat_mul(m, eye), m)
    assert gf2.mat_mul(m, m).tolist() == [[1, 0, 1], [0, 1, 0], [0, 0, 1]]


def test_rank_and_invertibility():
    assert gf2.rank(gf2.as_bits(["11", "11"])) == 1
    assert gf2.rank(gf2.identity(4)) == 4
    assert gf2.invertible(gf2.as_bits(["11", "01"]))
    assert not gf2.invertible(gf2.as_bits(["11", "11"]))


def test_row_echelon_reports_pivots():
    reduced, pivots = gf2.row_echelon(gf2.as_bits(["011", "110", "101"]))
    assert pivots == [0, 1]
    assert gf2.rank(reduced) == 2


def test_solve_finds_a_solution_or_none():
    m = gf2.as_bits(["110", "011"])
    rhs = np.array([1, 0], dtype=np.uint8)
    x = gf2.solve(m, rhs)
    assert x is not None
    assert np.array_equal((m @ x) % 2, rhs)
    # An inconsistent system has no solution.
    m2 = gf2.as_bits(["11", "11"])
    assert gf2.solve(m2, np.array([1, 0], dtype=np.uint8)) is None


def test_min_weight_solution():
    # x1 ^ x2 = 1 has the two weight-1 solutions; the helper must pick one.
    m = gf2.as_bits(["11"])
    rhs = np.array([1], dtype=np.uint8)
    picks = gf2.min_weight_solution(m, rhs)
    assert picks is not None and len(picks) == 1
    assert gf2.min_weight_solution(
        gf2.as_bits(["11", "11"]), np.array([1, 0], dtype=np.uint8)
    ) is None
