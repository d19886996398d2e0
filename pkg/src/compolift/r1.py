"""The four-element ring F2 + uF2 (u^2 = 0): arithmetic, Gray map, Lee weight.

Elements a + bu are encoded as two-bit codes ``a | (b << 1)``:
0 -> 0, 1 -> 1, u -> 2, 1+u -> 3. Vectors are uint8 arrays of codes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .bitmatrix import BitMatrix

ZERO, ONE, U, ONE_PLUS_U = 0, 1, 2, 3

TOKENS = ("0", "1", "u", "u+1")
LEE_WEIGHTS = (0, 1, 2, 1)


def add(x: int, y: int) -> int:
    return x ^ y


def mul(x: int, y: int) -> int:
    """(a1+b1·u)(a2+b2·u) = a1·a2 + (a1·b2 + a2·b1)·u since u^2 = 0."""
    a1, b1 = x & 1, (x >> 1) & 1
    a2, b2 = y & 1, (y >> 1) & 1
    return (a1 & a2) | (((a1 & b2) ^ (a2 & b1)) << 1)


def token(code: int) -> str:
    return TOKENS[code]


def parse_token(text: str) -> int:
    t = text.replace(" ", "").replace("\t", "")
    try:
        return TOKENS.index(t)
    except ValueError:
        raise ValueError(f"not an F2+uF2 token: {text!r}") from None


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse a comma-separated token vector, e.g. '1,0,u+1,u'; '(...)' allowed."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    return tuple(parse_token(p) for p in s.split(","))


def format_vector(codes: Iterable[int]) -> str:
    return ",".join(TOKENS[c] for c in codes)


def a_plane(codes) -> np.ndarray:
    return np.asarray(codes, dtype=np.uint8) & 1


def b_plane(codes) -> np.ndarray:
    return (np.asarray(codes, dtype=np.uint8) >> 1) & 1


def from_planes(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint8) & 1
    b = np.asarray(b, dtype=np.uint8) & 1
    return a | (b << 1)


def gray_map(codes) -> np.ndarray:
    """The isometry a+bu -> (b, a+b) from Lee metric to Hamming metric.

    A length-n code vector maps to a length-2n binary vector.
    """
    a = a_plane(codes)
    b = b_plane(codes)
    return np.concatenate([b, a ^ b])


def project(codes) -> np.ndarray:
    """Projection mu(a + bu) = a, componentwise."""
    return a_plane(codes)


def lee_weight(codes) -> int:
    c = np.asarray(codes, dtype=np.uint8)
    table = np.array(LEE_WEIGHTS, dtype=np.int64)
    return int(table[c].sum())


def lee_distance(x, y) -> int:
    return lee_weight(np.asarray(x, dtype=np.uint8) ^ np.asarray(y, dtype=np.uint8))


class R1Matrix:
    """Matrix over F2+uF2 stored as two GF(2) planes M = A + u·B.

    Keeping the planes as BitMatrix values means every hot operation is a
    handful of word-level GF(2) products.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: BitMatrix, b: BitMatrix):
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise ValueError("plane dimensions disagree")
        self.a = a
        self.b = b

    @property
    def rows(self) -> int:
        return self.a.rows

    @property
    def cols(self) -> int:
        return self.a.cols

    @classmethod
    def from_codes(cls, codes) -> "R1Matrix":
        arr = np.atleast_2d(np.asarray(codes, dtype=np.uint8))
        return cls(BitMatrix.from_bits(arr & 1), BitMatrix.from_bits((arr >> 1) & 1))

    @classmethod
    def identity(cls, n: int) -> "R1Matrix":
        return cls(BitMatrix.identity(n), BitMatrix.zeros(n, n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "R1Matrix":
        return cls(BitMatrix.zeros(rows, cols), BitMatrix.zeros(rows, cols))

    def to_codes(self) -> np.ndarray:
        return from_planes(self.a.to_bits(), self.b.to_bits())

    def row_codes(self, i: int) -> np.ndarray:
        return from_planes(self.a.row_bits(i), self.b.row_bits(i))

    def mat_mul(self, other: "R1Matrix") -> "R1Matrix":
        """Product over F2+uF2 on bit planes: (Aa + u·Ab)(Ba + u·Bb)."""
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        a = self.a.mat_mul(other.a)
        b = self.a.mat_mul(other.b) ^ self.b.mat_mul(other.a)
        return R1Matrix(a, b)

    def __matmul__(self, other: "R1Matrix") -> "R1Matrix":
        return self.mat_mul(other)

    def add(self, other: "R1Matrix") -> "R1Matrix":
        return R1Matrix(self.a ^ other.a, self.b ^ other.b)

    def __xor__(self, other: "R1Matrix") -> "R1Matrix":
        return self.add(other)

    def transpose(self) -> "R1Matrix":
        return R1Matrix(self.a.transpose(), self.b.transpose())

    def hstack(self, other: "R1Matrix") -> "R1Matrix":
        return R1Matrix(self.a.hstack(other.a), self.b.hstack(other.b))

    def is_identity(self) -> bool:
        return self.a.is_identity() and self.b.is_zero()

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def projection(self) -> BitMatrix:
        """The mu image: the a-plane."""
        return self.a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, R1Matrix):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self) -> str:
        return f"R1Matrix({self.rows}x{self.cols})"


def gray_generator(gen: R1Matrix) -> BitMatrix:
    """Binary generator of the Gray image of the row span of `gen`.

    The image of a k-row generator over F2+uF2 is spanned over GF(2) by the
    Gray images of the rows g_i and of u·g_i, giving 2k rows of length
    2·cols: phi(g) = (b, a+b) and phi(u·g) = (a, a).
    """
    a = gen.a.to_bits()
    b = gen.b.to_bits()
    top = np.concatenate([b, a ^ b], axis=1)
    bottom = np.concatenate([a, a], axis=1)
    return BitMatrix.from_bits(np.concatenate([top, bottom], axis=0))
