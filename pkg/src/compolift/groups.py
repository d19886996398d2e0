"""Finite groups as explicit multiplication tables with a fixed element listing."""

from __future__ import annotations

from typing import Sequence

import numpy as np


class GroupTable:
    """A finite group: ordered elements g_0..g_{n-1} plus mul/inv tables.

    g_0 is always the identity. The listing order matters: group-ring
    matrices index coefficients by position in this listing.
    """

    __slots__ = ("label", "order", "mul", "inv", "names")

    def __init__(self, label: str, mul: np.ndarray, names: Sequence[str]):
        mul = np.asarray(mul, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n):
            raise ValueError("multiplication table must be square")
        _validate_table(mul)
        inv = np.empty(n, dtype=np.int64)
        for a in range(n):
            inv[a] = int(np.nonzero(mul[a] == 0)[0][0])
        self.label = label
        self.order = n
        self.mul = mul
        self.inv = inv
        self.names = tuple(names)

    def __repr__(self) -> str:
        return f"GroupTable({self.label}, order={self.order})"

    def name(self, i: int) -> str:
        return self.names[i]

    def element_order(self, i: int) -> int:
        k, acc = 1, i
        while acc != 0:
            acc = int(self.mul[acc, i])
            k += 1
        return k


def _validate_table(mul: np.ndarray) -> None:
    n = mul.shape[0]
    ident = np.arange(n)
    if not (np.array_equal(mul[0], ident) and np.array_equal(mul[:, 0], ident)):
        raise ValueError("element 0 is not the identity")
    for a in range(n):
        if len(set(mul[a].tolist())) != n or len(set(mul[:, a].tolist())) != n:
            raise ValueError("multiplication table is not a Latin square")
    # left[a,b,c] = (ab)c, right[a,b,c] = a(bc)
    left = mul[mul, :]
    right = mul[:, mul]
    if not np.array_equal(left, right):
        raise ValueError("multiplication table is not associative")
    for a in range(n):
        if not np.any(mul[a] == 0):
            raise ValueError("an element has no inverse")


def cyclic(m: int, exponents: Sequence[int] | None = None, label: str | None = None) -> GroupTable:
    """Cyclic group of order m, listed by the given exponent order (default 0..m-1)."""
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    exps = list(range(m)) if exponents is None else list(exponents)
    if sorted(e % m for e in exps) != list(range(m)) or exps[0] % m != 0:
        raise ValueError("exponents must list 0..m-1 once each, identity first")
    pos = {e % m: i for i, e in enumerate(exps)}
    mul = np.array([[pos[(exps[i] + exps[j]) % m] for j in range(m)] for i in range(m)])
    names = tuple("1" if e % m == 0 else f"a^{e % m}" for e in exps)
    return GroupTable(label or f"C{m}", mul, names)


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given even order 2m, relations x^m = y^2 = 1, yx = x^-1 y.

    Listing: x^i y^j at position i + m*j (i in 0..m-1, j in 0..1).
    """
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and >= 2")
    m = order // 2

    def idx(i: int, j: int) -> int:
        return i % m + m * (j % 2)

    def mul_el(p: int, q: int) -> int:
        i1, j1 = p % m, p // m
        i2, j2 = q % m, q // m
        sign = -1 if j1 else 1
        return idx(i1 + sign * i2, j1 + j2)

    mul = np.array([[mul_el(p, q) for q in range(order)] for p in range(order)])
    names = []
    for j in range(2):
        for i in range(m):
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "y" if j else ""
            names.append((xs + ys) or "1")
    return GroupTable(f"D{order}", mul, names)


def c3xc6() -> GroupTable:
    """C3 x C6 as <x, y | x^6 = y^3 = 1, xy = yx>, listed x^i y^j at i + 6*j."""
    def idx(i: int, j: int) -> int:
        return i % 6 + 6 * (j % 3)

    mul = np.array(
        [[idx(p % 6 + q % 6, p // 6 + q // 6) for q in range(18)] for p in range(18)]
    )
    names = []
    for j in range(3):
        for i in range(6):
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            names.append((xs + ys) or "1")
    return GroupTable("C3xC6", mul, names)


def build_group(name: str) -> GroupTable:
    """Build a group from a short presentation id: C<m>, D<2m>, or C3xC6."""
    key = name.strip()
    if key == "C3xC6":
        return c3xc6()
    if key.startswith("C") and key[1:].isdigit():
        m = int(key[1:])
        if m < 2:
            raise ValueError(f"unsupported group: {name!r}")
        return cyclic(m)
    if key.startswith("D") and key[1:].isdigit():
        order = int(key[1:])
        if order < 4 or order % 2:
            raise ValueError(f"unsupported group: {name!r}")
        return dihedral(order)
    raise ValueError(f"unsupported group: {name!r}")
