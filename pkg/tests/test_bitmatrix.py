from __future__ import annotations

import numpy as np
import pytest

from compolift.bitmatrix import BitMatrix, circulant, rref


def random_bitmatrix(rows, cols, rng):
    return BitMatrix.from_bits(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))


def test_circulant_unit_vector_is_identity():
    assert circulant([1, 0, 0]) == BitMatrix.identity(3)


def test_circulant_shift_rows():
    m = circulant([0, 1, 0])
    assert m.to_bits().tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


def test_circulant_product_hand_oracle():
    # circ(1,1,0) has rows (1,1,0),(0,1,1),(1,0,1); the Gram product over
    # GF(2) works out entrywise to circ(0,1,1)
    m = circulant([1, 1, 0])
    assert m.mat_mul(m.transpose()) == circulant([0, 1, 1])


def test_identity_law():
    rng = np.random.default_rng(7)
    m = random_bitmatrix(9, 9, rng)
    assert BitMatrix.identity(9).mat_mul(m) == m
    assert m.mat_mul(BitMatrix.identity(9)) == m


def test_circulants_commute():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a = circulant(rng.integers(0, 2, size=9))
        b = circulant(rng.integers(0, 2, size=9))
        assert a.mat_mul(b) == b.mat_mul(a)


def test_gram_symmetry():
    rng = np.random.default_rng(13)
    m = random_bitmatrix(18, 18, rng)
    gram = m.mat_mul(m.transpose())
    assert gram.transpose() == gram


def test_transpose_examples():
    assert BitMatrix.identity(6).transpose() == BitMatrix.identity(6)
    assert circulant([0, 1, 0]).transpose() == circulant([0, 0, 1])


def test_transpose_entrywise_oracle():
    rng = np.random.default_rng(17)
    m = random_bitmatrix(4, 7, rng)
    t = m.transpose()
    assert (t.rows, t.cols) == (7, 4)
    for i in range(4):
        for j in range(7):
            assert m.get(i, j) == t.get(j, i)
    assert t.transpose() == m


def test_product_transpose_property():
    rng = np.random.default_rng(19)
    a = random_bitmatrix(5, 8, rng)
    b = random_bitmatrix(8, 3, rng)
    assert a.mat_mul(b).transpose() == b.transpose().mat_mul(a.transpose())


def test_rank():
    assert BitMatrix.identity(18).rank() == 18
    assert BitMatrix.zeros(5, 5).rank() == 0
    rng = np.random.default_rng(23)
    omega = random_bitmatrix(18, 18, rng)
    gen = BitMatrix.identity(18).hstack(omega)
    assert gen.rank() == 18


def test_rank_stable_under_row_permutation():
    rng = np.random.default_rng(29)
    bits = rng.integers(0, 2, size=(10, 14), dtype=np.uint8)
    m = BitMatrix.from_bits(bits)
    p = BitMatrix.from_bits(bits[rng.permutation(10)])
    assert m.rank() == p.rank()


def test_bit_packing_roundtrip():
    rng = np.random.default_rng(31)
    for rows, cols in ((1, 1), (3, 64), (5, 65), (7, 130), (18, 36)):
        bits = rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)
        m = BitMatrix.from_bits(bits)
        assert np.array_equal(m.to_bits(), bits)
        for i in range(rows):
            for j in range(cols):
                assert m.get(i, j) == bits[i, j]
        assert m.row_weight(0) == int(bits[0].sum())


def test_text_roundtrip():
    rng = np.random.default_rng(37)
    m = random_bitmatrix(6, 10, rng)
    assert BitMatrix.from_text(m.to_text()) == m
    with pytest.raises(ValueError):
        BitMatrix.from_text("01\n0")
    with pytest.raises(ValueError):
        BitMatrix.from_text("01x")


def test_row_int_matches_bits():
    rng = np.random.default_rng(41)
    m = random_bitmatrix(3, 70, rng)
    for i in range(3):
        v = m.row_int(i)
        assert [(v >> j) & 1 for j in range(70)] == m.to_bits()[i].tolist()


def test_errors():
    with pytest.raises(ValueError):
        circulant([])
    with pytest.raises(ValueError):
        BitMatrix.zeros(0, 3)
    a = BitMatrix.identity(3)
    b = BitMatrix.identity(4)
    with pytest.raises(ValueError):
        a.mat_mul(b)


def test_rref_pivots():
    rng = np.random.default_rng(43)
    a = random_bitmatrix(6, 6, rng)
    gen = BitMatrix.identity(6).hstack(a)
    reduced, pivots = rref(gen)
    assert pivots == tuple(range(6))
    assert reduced == gen
