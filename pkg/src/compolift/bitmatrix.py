"""Dense linear algebra over GF(2) with bit-packed rows."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

_WORD_BITS = 64


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a (rows, cols) 0/1 array into little-endian uint64 words."""
    rows, cols = bits.shape
    nwords = (cols + _WORD_BITS - 1) // _WORD_BITS
    pad = nwords * _WORD_BITS - cols
    if pad:
        bits = np.concatenate([bits, np.zeros((rows, pad), dtype=np.uint8)], axis=1)
    packed = np.packbits(bits.astype(np.uint8), axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def _unpack(words: np.ndarray, cols: int) -> np.ndarray:
    flat = np.ascontiguousarray(words).view(np.uint8)
    return np.unpackbits(flat, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
    """A rows x cols matrix over GF(2).

    Rows are bit-packed into 64-bit words, little-endian within each word:
    bit j of word w holds column 64*w + j. Padding bits beyond `cols` are
    kept zero, so word-level popcounts and comparisons are exact. Instances
    are treated as immutable; every operation returns a new matrix.
    """

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._words = words

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        nwords = (cols + _WORD_BITS - 1) // _WORD_BITS
        return cls(rows, cols, np.zeros((rows, nwords), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        out = cls.zeros(n, n)
        words = out._words
        for i in range(n):
            w, b = divmod(i, _WORD_BITS)
            words[i, w] = np.uint64(1) << np.uint64(b)
        return out

    @classmethod
    def from_bits(cls, bits) -> "BitMatrix":
        arr = np.atleast_2d(np.asarray(bits, dtype=np.uint8) & 1)
        rows, cols = arr.shape
        if rows < 1 or cols < 1:
            raise ValueError("from_bits needs a non-empty 2-d array")
        return cls(rows, cols, _pack(arr))

    @classmethod
    def from_row_ints(cls, ints: Sequence[int], cols: int) -> "BitMatrix":
        bits = np.zeros((len(ints), cols), dtype=np.uint8)
        for i, v in enumerate(ints):
            for j in range(cols):
                bits[i, j] = (v >> j) & 1
        return cls.from_bits(bits)

    # -- element access ----------------------------------------------------

    def get(self, i: int, j: int) -> int:
        w, b = divmod(j, _WORD_BITS)
        return int((self._words[i, w] >> np.uint64(b)) & np.uint64(1))

    def to_bits(self) -> np.ndarray:
        """Unpack to a (rows, cols) uint8 array."""
        return _unpack(self._words, self.cols)

    def row_bits(self, i: int) -> np.ndarray:
        return _unpack(self._words[i : i + 1], self.cols)[0]

    def row_int(self, i: int) -> int:
        """Row i as a Python int, bit j = column j."""
        v = 0
        for w in range(self._words.shape[1] - 1, -1, -1):
            v = (v << _WORD_BITS) | int(self._words[i, w])
        return v

    def row_words(self) -> np.ndarray:
        """The packed uint64 word array (copy); shape (rows, nwords)."""
        return self._words.copy()

    def row_weight(self, i: int) -> int:
        return int(np.bitwise_count(self._words[i]).sum())

    def weight(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    # -- algebra -----------------------------------------------------------

    def mat_mul(self, other: "BitMatrix") -> "BitMatrix":
        """GF(2) product self @ other."""
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = BitMatrix.zeros(self.rows, other.cols)
        sel = self.to_bits().astype(bool)
        for i in range(self.rows):
            picked = other._words[sel[i]]
            if picked.shape[0]:
                out._words[i] = np.bitwise_xor.reduce(picked, axis=0)
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return self.mat_mul(other)

    def add(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        return BitMatrix(self.rows, self.cols, self._words ^ other._words)

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        return self.add(other)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_bits(self.to_bits().T)

    def rank(self) -> int:
        """GF(2) row rank by elimination on a copy; self is not modified."""
        work = self._words.copy()
        r = 0
        for c in range(self.cols):
            w, b = divmod(c, _WORD_BITS)
            col = (work[r:, w] >> np.uint64(b)) & np.uint64(1)
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                work[[r, p]] = work[[p, r]]
            below = (work[r + 1 :, w] >> np.uint64(b)) & np.uint64(1)
            hit = r + 1 + np.nonzero(below)[0]
            work[hit] ^= work[r]
            r += 1
            if r == self.rows:
                break
        return r

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return BitMatrix.from_bits(
            np.concatenate([self.to_bits(), other.to_bits()], axis=1)
        )

    def submatrix(self, rows: slice, cols: slice) -> "BitMatrix":
        return BitMatrix.from_bits(self.to_bits()[rows, cols])

    def permute_cols(self, order: Sequence[int]) -> "BitMatrix":
        return BitMatrix.from_bits(self.to_bits()[:, list(order)])

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._words.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == BitMatrix.identity(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self._words, other._words)
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        """ASCII serialization: one row per line of '0'/'1' characters."""
        bits = self.to_bits()
        return "\n".join("".join("1" if b else "0" for b in row) for row in bits)

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        bad = [ln for ln in lines if set(ln) - {"0", "1"}]
        if bad:
            raise ValueError(f"matrix text contains non-binary characters: {bad[0]!r}")
        if len({len(ln) for ln in lines}) != 1:
            raise ValueError("matrix text rows have unequal lengths")
        bits = np.array([[int(ch) for ch in ln] for ln in lines], dtype=np.uint8)
        return cls.from_bits(bits)


def circulant(first_row: Iterable[int]) -> BitMatrix:
    """m x m circulant: row i is `first_row` cyclically shifted right by i."""
    row = np.asarray(list(first_row), dtype=np.uint8) & 1
    m = row.shape[0]
    if m < 1:
        raise ValueError("circulant needs a non-empty first row")
    bits = np.empty((m, m), dtype=np.uint8)
    for i in range(m):
        bits[i] = np.roll(row, i)
    return BitMatrix.from_bits(bits)


def rref(mat: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns (zero rows dropped)."""
    bits = mat.to_bits().copy()
    m, n = bits.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        nz = np.nonzero(bits[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            bits[[r, p]] = bits[[p, r]]
        hit = np.nonzero(bits[:, c])[0]
        for i in hit:
            if i != r:
                bits[i] ^= bits[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if r == 0:
        raise ValueError("matrix has rank 0")
    return BitMatrix.from_bits(bits[:r]), tuple(pivots)
