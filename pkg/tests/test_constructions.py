from __future__ import annotations

import numpy as np
import pytest

from compolift.bitmatrix import BitMatrix
from compolift.constructions import (
    CONSTRUCTIONS,
    FirstRows,
    check_selfdual_blocks,
    evaluate_block_equations,
    explicit_pattern,
    gen_matrix,
    gen_matrix_r1,
    is_selfdual_direct,
    omega_f2,
    omega_r1,
)

C1_RB = (0, 0, 0, 0, 0, 1, 0, 1, 1)
C1_RC = (1, 0, 1, 1, 1, 0, 1, 0, 1)


def test_unit_coefficient_gives_identity():
    e1 = np.zeros(18, dtype=np.uint8)
    e1[0] = 1
    for name in CONSTRUCTIONS:
        assert omega_f2(name, e1) == BitMatrix.identity(18)


def test_pattern_first_row():
    for name in CONSTRUCTIONS:
        assert np.array_equal(explicit_pattern(name)[0], np.arange(18))


def test_quadrant_circulant_structure():
    # omega2/omega3 are block-circulant in their 6x6 quadrants:
    # grid row 2 starts with quadrant D, row 3 with C
    for name in ("omega2", "omega3"):
        p = explicit_pattern(name)
        b, c, d = p[:6, :6], p[:6, 6:12], p[:6, 12:]
        assert np.array_equal(p[6:12, :6], d)
        assert np.array_equal(p[6:12, 6:12], b)
        assert np.array_equal(p[6:12, 12:], c)
        assert np.array_equal(p[12:, :6], c)
        assert np.array_equal(p[12:, 6:12], d)
        assert np.array_equal(p[12:, 12:], b)


def test_table_row_is_selfdual():
    fr = FirstRows("omega1", "F2", C1_RB, C1_RC)
    assert check_selfdual_blocks(fr).ok
    assert is_selfdual_direct(fr)
    gen = gen_matrix(omega_f2("omega1", fr.alphas()))
    assert gen.rank() == 18


def test_all_zero_rows_fail_with_named_equation():
    fr = FirstRows("omega1", "F2", (0,) * 9, (0,) * 9)
    report = check_selfdual_blocks(fr)
    assert not report.ok
    assert "B*B^T + C*C^T = I" in report.failed()


def test_block_conditions_match_direct_check():
    rng = np.random.default_rng(44)
    for name in CONSTRUCTIONS:
        for ring, top in (("F2", 2), ("R1", 4)):
            for _ in range(60):
                alphas = rng.integers(0, top, size=18, dtype=np.uint8)
                fr = FirstRows.from_alphas(name, alphas, ring)
                assert check_selfdual_blocks(fr).ok == is_selfdual_direct(fr)


def test_batch_equations_match_single():
    rng = np.random.default_rng(46)
    batch = rng.integers(0, 4, size=(50, 18), dtype=np.uint8)
    names, results = evaluate_block_equations("omega2", batch, "R1")
    for t in range(50):
        fr = FirstRows.from_alphas("omega2", batch[t], "R1")
        report = check_selfdual_blocks(fr)
        assert tuple(ok for _, ok in report.equations) == tuple(results[:, t])
        assert tuple(n for n, _ in report.equations) == names


def test_first_rows_validation():
    with pytest.raises(ValueError):
        FirstRows("omega1", "F2", (0,) * 8, (0,) * 9)  # arity
    with pytest.raises(ValueError):
        FirstRows("omega1", "F2", (0,) * 9, (0,) * 9, (0,) * 9)  # no rD here
    with pytest.raises(ValueError):
        FirstRows("omega2", "F2", (0,) * 6, (0,) * 6)  # rD required
    with pytest.raises(ValueError):
        FirstRows("omega1", "F2", (0, 2) + (0,) * 7, (0,) * 9)  # R1 code in F2 row
    with pytest.raises(ValueError):
        FirstRows("omega4", "F2", (0,) * 9, (0,) * 9)


def test_from_tokens_ring_inference():
    fr = FirstRows.from_tokens("omega1", "0,0,0,0,0,1,0,1,1", "1,0,1,1,1,0,1,0,1")
    assert fr.ring == "F2"
    fr2 = FirstRows.from_tokens(
        "omega1", "u,0,u,u,u,1,u,u+1,1", "1,0,1,1,u+1,0,1,u,1"
    )
    assert fr2.ring == "R1"
    assert fr2.projection() == fr
    assert fr2.tokens()["rB"] == "u,0,u,u,u,1,u,u+1,1"


def test_gen_matrix():
    om = BitMatrix.identity(18)
    gen = gen_matrix(om)
    assert gen.cols == 36 and gen.rows == 18
    assert gen.submatrix(slice(0, 18), slice(18, 36)) == om
    with pytest.raises(ValueError):
        gen_matrix(BitMatrix.zeros(3, 4))


def test_gen_matrix_r1_roundtrip():
    rng = np.random.default_rng(48)
    codes = rng.integers(0, 4, size=18, dtype=np.uint8)
    om = omega_r1("omega3", codes)
    gen = gen_matrix_r1(om)
    assert gen.rows == 18 and gen.cols == 36
    assert np.array_equal(gen.to_codes()[:, 18:], om.to_codes())
