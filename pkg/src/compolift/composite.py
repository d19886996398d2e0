"""Group-ring matrices sigma(v) and their block-composite generalization omega(v).

Both constructions are compiled to an n x n *index pattern*: entry (i, j)
holds the position (0-based) of the coefficient that lands there. Applying
a pattern to a coefficient vector is then a single fancy-index, which makes
the same pattern serve every entry ring (GF(2), F2+uF2, or symbolic ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import GroupTable, build_group, c3xc6, cyclic, dihedral


def sigma_pattern(group: GroupTable) -> np.ndarray:
    """Index pattern of sigma(v): entry (i, j) = listing index of g_i^-1 g_j."""
    return group.mul[group.inv, :].copy()


def sigma(alphas, group: GroupTable) -> np.ndarray:
    """The group-ring matrix of a coefficient vector; row 0 equals `alphas`."""
    arr = np.asarray(alphas)
    if arr.shape[0] != group.order:
        raise ValueError(
            f"coefficient vector has length {arr.shape[0]}, group order is {group.order}"
        )
    return arr[sigma_pattern(group)]


@dataclass(frozen=True)
class CompositeSpec:
    """One composite construction: outer group, block size, per-block descriptor.

    `grid` is an (n/r) x (n/r) tuple-of-tuples; each entry is either None
    (plain outer-group block) or an inner GroupTable of order r. Block l at
    grid position (p, q) (row-major) is anchored at rows j = p*r, columns
    k = q*r: its first row is always outer-indexed, alpha[g_j^-1 g_{k+t}],
    and in an inner-group block the remaining rows transport inner products
    through the map h_t -> g_j^-1 g_{k+t}.
    """

    label: str
    group: GroupTable
    block_size: int
    grid: tuple[tuple[GroupTable | None, ...], ...]

    def __post_init__(self):
        n, r = self.group.order, self.block_size
        if r < 2 or n <= r or n % r:
            raise ValueError(
                f"block size must be a proper divisor >= 2 of the group order, got r={r}, n={n}"
            )
        q = n // r
        if len(self.grid) != q or any(len(row) != q for row in self.grid):
            raise ValueError(f"grid must be {q}x{q}")
        for row in self.grid:
            for h in row:
                if h is not None and h.order != r:
                    raise ValueError(
                        f"inner group {h.label} has order {h.order}, block size is {r}"
                    )

    def pattern(self) -> np.ndarray:
        return _omega_pattern_cached(self)


@lru_cache(maxsize=None)
def _omega_pattern_cached(spec: CompositeSpec) -> np.ndarray:
    g = spec.group
    n, r = g.order, spec.block_size
    q = n // r
    out = np.empty((n, n), dtype=np.int64)
    for p in range(q):
        for c in range(q):
            j0, k0 = p * r, c * r
            inner = spec.grid[p][c]
            if inner is None:
                for s in range(r):
                    for t in range(r):
                        out[j0 + s, k0 + t] = g.mul[g.inv[j0 + s], k0 + t]
            else:
                anchor = g.inv[j0]
                for t in range(r):
                    out[j0, k0 + t] = g.mul[anchor, k0 + t]
                for s in range(1, r):
                    hrow = inner.mul[inner.inv[s]]
                    for t in range(r):
                        out[j0 + s, k0 + t] = g.mul[anchor, k0 + int(hrow[t])]
    out.setflags(write=False)
    return out


def omega(alphas, spec: CompositeSpec) -> np.ndarray:
    """The composite matrix for a coefficient vector; row 0 equals `alphas`."""
    arr = np.asarray(alphas)
    if arr.shape[0] != spec.group.order:
        raise ValueError(
            f"coefficient vector has length {arr.shape[0]}, group order is {spec.group.order}"
        )
    return arr[spec.pattern()]


# The three shipped presets. The inner listings below are not the plain
# consecutive-power listings: they are the unique listings under which the
# generic engine reproduces the explicit block-circulant forms in
# constructions.py (the equality is enforced by tests/test_composite.py).
_INNER_C9_EXPONENTS = (0, 3, 6, 1, 4, 7, 2, 5, 8)
_INNER_C6_EXPONENTS = (0, 2, 4, 1, 3, 5)


def _uniform_grid(q: int, inner: GroupTable) -> tuple[tuple[GroupTable, ...], ...]:
    return tuple(tuple(inner for _ in range(q)) for _ in range(q))


@lru_cache(maxsize=None)
def preset(name: str) -> CompositeSpec:
    """The built-in composite constructions: omega1, omega2, omega3."""
    if name == "omega1":
        inner = cyclic(9, exponents=_INNER_C9_EXPONENTS)
        return CompositeSpec("omega1", dihedral(18), 9, _uniform_grid(2, inner))
    if name == "omega2":
        return CompositeSpec("omega2", c3xc6(), 6, _uniform_grid(3, dihedral(6)))
    if name == "omega3":
        inner = cyclic(6, exponents=_INNER_C6_EXPONENTS)
        return CompositeSpec("omega3", c3xc6(), 6, _uniform_grid(3, inner))
    raise ValueError(f"unknown preset: {name!r}")


PRESET_NAMES = ("omega1", "omega2", "omega3")
