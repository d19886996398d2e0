from __future__ import annotations

import numpy as np
import pytest

from compolift import r1
from compolift.r1 import ONE, ONE_PLUS_U, U, ZERO, R1Matrix


def test_mul_table():
    assert r1.mul(U, U) == ZERO
    assert r1.mul(ONE_PLUS_U, ONE_PLUS_U) == ONE  # 1 + 2u + u^2 in char 2
    for x in range(4):
        assert r1.mul(ONE, x) == x
        assert r1.mul(x, ZERO) == ZERO


def test_ring_axioms_exhaustive():
    for x in range(4):
        for y in range(4):
            assert r1.mul(x, y) == r1.mul(y, x)
            assert r1.add(x, y) == r1.add(y, x)
            for z in range(4):
                assert r1.mul(r1.mul(x, y), z) == r1.mul(x, r1.mul(y, z))
                assert r1.mul(x, r1.add(y, z)) == r1.add(r1.mul(x, y), r1.mul(x, z))
    for x in range(4):
        assert r1.add(x, x) == ZERO  # characteristic 2


def test_tokens():
    assert [r1.token(c) for c in range(4)] == ["0", "1", "u", "u+1"]
    assert r1.parse_token("u + 1") == ONE_PLUS_U
    assert r1.parse_vector("(1, 0, u+1, u)") == (ONE, ZERO, ONE_PLUS_U, U)
    assert r1.format_vector((ONE, U)) == "1,u"
    with pytest.raises(ValueError):
        r1.parse_token("v")


def test_gray_map_singletons():
    images = {ZERO: (0, 0), ONE: (0, 1), U: (1, 1), ONE_PLUS_U: (1, 0)}
    for code, expect in images.items():
        assert tuple(r1.gray_map([code])) == expect


def test_lee_weights():
    assert [r1.lee_weight([c]) for c in range(4)] == [0, 1, 2, 1]


def test_gray_weight_equals_lee_weight():
    rng = np.random.default_rng(5)
    for _ in range(200):
        v = rng.integers(0, 4, size=18, dtype=np.uint8)
        assert int(r1.gray_map(v).sum()) == r1.lee_weight(v)


def test_gray_isometry_on_pairs():
    rng = np.random.default_rng(9)
    for _ in range(1000):
        x = rng.integers(0, 4, size=12, dtype=np.uint8)
        y = rng.integers(0, 4, size=12, dtype=np.uint8)
        hamming = int((r1.gray_map(x) != r1.gray_map(y)).sum())
        assert hamming == r1.lee_distance(x, y)


def test_projection():
    assert r1.project([ONE_PLUS_U]).tolist() == [1]
    assert r1.project([U]).tolist() == [0]
    rng = np.random.default_rng(3)
    codes = rng.integers(0, 4, size=18, dtype=np.uint8)
    assert np.array_equal(r1.project(codes), codes & 1)


def _schoolbook_mul(x_codes, y_codes):
    n = x_codes.shape[0]
    out = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(n):
            acc = ZERO
            for k in range(n):
                acc = r1.add(acc, r1.mul(int(x_codes[i, k]), int(y_codes[k, j])))
            out[i, j] = acc
    return out


def test_matmul_against_schoolbook():
    rng = np.random.default_rng(21)
    for _ in range(25):
        x = rng.integers(0, 4, size=(3, 3), dtype=np.uint8)
        y = rng.integers(0, 4, size=(3, 3), dtype=np.uint8)
        got = R1Matrix.from_codes(x).mat_mul(R1Matrix.from_codes(y)).to_codes()
        assert np.array_equal(got, _schoolbook_mul(x, y))


def test_matmul_identities():
    rng = np.random.default_rng(27)
    m = R1Matrix.from_codes(rng.integers(0, 4, size=(4, 4), dtype=np.uint8))
    assert R1Matrix.identity(4).mat_mul(m) == m
    # u*M times u*N vanishes since u^2 = 0
    um = R1Matrix.from_codes((rng.integers(0, 2, size=(4, 4), dtype=np.uint8)) << 1)
    un = R1Matrix.from_codes((rng.integers(0, 2, size=(4, 4), dtype=np.uint8)) << 1)
    assert um.mat_mul(un).is_zero()


def test_r1matrix_roundtrip():
    rng = np.random.default_rng(33)
    codes = rng.integers(0, 4, size=(5, 7), dtype=np.uint8)
    m = R1Matrix.from_codes(codes)
    assert np.array_equal(m.to_codes(), codes)
    assert np.array_equal(m.row_codes(2), codes[2])
    assert np.array_equal(m.transpose().to_codes(), codes.T)
    assert np.array_equal(m.projection().to_bits(), codes & 1)


def _all_codewords(gen_codes):
    """Row span over F2+uF2 of a small generator, by exhaustive combination."""
    k, n = gen_codes.shape
    words = []
    for coeffs in np.ndindex(*(4,) * k):
        acc = np.zeros(n, dtype=np.uint8)
        for c, row in zip(coeffs, gen_codes):
            if c:
                acc ^= np.array([r1.mul(c, int(v)) for v in row], dtype=np.uint8)
        words.append(acc)
    return np.array(words)


def test_projection_at_most_halves_distance():
    # min Lee distance of a code is at most twice the min Hamming distance
    # of its projection, checked exhaustively on random small codes
    rng = np.random.default_rng(39)
    checked = 0
    while checked < 10:
        gen = rng.integers(0, 4, size=(2, 4), dtype=np.uint8)
        words = _all_codewords(gen)
        lee = [r1.lee_weight(w) for w in words if w.any()]
        proj = words & 1
        ham = [int(p.sum()) for p in proj if p.any()]
        if not lee or not ham:
            continue
        assert min(lee) <= 2 * min(ham)
        checked += 1
