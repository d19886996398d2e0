"""The three explicit order-18 block-circulant constructions and their
self-duality conditions.

Each construction is a 6x6 grid of 3x3 circulants over 18 coefficients,
written out exactly as an index pattern. These explicit forms are the
production path; composite.preset() builds the same patterns from group
tables and the test suite pins the two paths equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import r1
from .bitmatrix import BitMatrix
from .r1 import R1Matrix

CONSTRUCTIONS = ("omega1", "omega2", "omega3")

def _shift(c):
    # primed cell: first row rotated right once
    return (c[2], c[0], c[1])


def _tr(c):
    # transposed circulant is the circulant of the reversed tail
    return (c[0], c[2], c[1])


def _grid_omega1():
    # quadrants B, C, D, E of 3x3 circulant cells; 1-based coefficient ids
    b1, b2, b3 = (1, 2, 3), (4, 5, 6), (7, 8, 9)
    c1, c2, c3 = (10, 11, 12), (13, 14, 15), (16, 17, 18)
    d1, d2, d3 = (10, 18, 17), (16, 15, 14), (13, 12, 11)
    e1, e2, e3 = (1, 9, 8), (7, 6, 5), (4, 3, 2)
    return (
        (b1, b2, b3, c1, c2, c3),
        (_shift(b3), b1, b2, _shift(c3), c1, c2),
        (_shift(b2), _shift(b3), b1, _shift(c2), _shift(c3), c1),
        (d1, d2, d3, e1, e2, e3),
        (_shift(d3), d1, d2, _shift(e3), e1, e2),
        (_shift(d2), _shift(d3), d1, _shift(e2), _shift(e3), e1),
    )


def _grid_omega2():
    # quadrant-circulant layout in B, C, D with transposed cells on odd rows
    b1, b2 = (1, 2, 3), (4, 5, 6)
    c1, c2 = (7, 8, 9), (10, 11, 12)
    d1, d2 = (13, 14, 15), (16, 17, 18)
    return (
        (b1, b2, c1, c2, d1, d2),
        (_tr(b2), _tr(b1), _tr(c2), _tr(c1), _tr(d2), _tr(d1)),
        (d1, d2, b1, b2, c1, c2),
        (_tr(d2), _tr(d1), _tr(b2), _tr(b1), _tr(c2), _tr(c1)),
        (c1, c2, d1, d2, b1, b2),
        (_tr(c2), _tr(c1), _tr(d2), _tr(d1), _tr(b2), _tr(b1)),
    )


def _grid_omega3():
    # as omega2 but odd rows shift the off cells instead of transposing
    b1, b2 = (1, 2, 3), (4, 5, 6)
    c1, c2 = (7, 8, 9), (10, 11, 12)
    d1, d2 = (13, 14, 15), (16, 17, 18)
    return (
        (b1, b2, c1, c2, d1, d2),
        (_shift(b2), b1, _shift(c2), c1, _shift(d2), d1),
        (d1, d2, b1, b2, c1, c2),
        (_shift(d2), d1, _shift(b2), b1, _shift(c2), c1),
        (c1, c2, d1, d2, b1, b2),
        (_shift(c2), c1, _shift(d2), d1, _shift(b2), b1),
    )


_GRIDS = {
    "omega1": _grid_omega1(),
    "omega2": _grid_omega2(),
    "omega3": _grid_omega3(),
}

# omega1 is parameterized by two length-9 first rows (quadrants B, C);
# omega2/omega3 by three length-6 first rows (quadrants B, C, D).
ROW_LENGTHS = {"omega1": (9, 9, None), "omega2": (6, 6, 6), "omega3": (6, 6, 6)}


@lru_cache(maxsize=None)
def explicit_pattern(construction: str) -> np.ndarray:
    """18x18 index pattern (0-based coefficient positions) of a construction."""
    try:
        grid = _GRIDS[construction]
    except KeyError:
        raise ValueError(f"unknown construction: {construction!r}") from None
    out = np.empty((18, 18), dtype=np.int64)
    for bi in range(6):
        for bj in range(6):
            c = grid[bi][bj]
            rows = (c, (c[2], c[0], c[1]), (c[1], c[2], c[0]))
            for s in range(3):
                for t in range(3):
                    out[3 * bi + s, 3 * bj + t] = rows[s][t] - 1
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class FirstRows:
    """The defining first rows of one construction's circulant blocks.

    Entries are ring codes: 0/1 for GF(2), 0..3 for F2+uF2 (see r1 module).
    omega1 takes two length-9 rows; omega2/omega3 take three length-6 rows.
    """

    construction: str
    ring: str  # "F2" | "R1"
    rb: tuple[int, ...]
    rc: tuple[int, ...]
    rd: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction: {self.construction!r}")
        if self.ring not in ("F2", "R1"):
            raise ValueError(f"unknown ring: {self.ring!r}")
        lb, lc, ld = ROW_LENGTHS[self.construction]
        if len(self.rb) != lb:
            raise ValueError(f"rB must have {lb} entries, got {len(self.rb)}")
        if len(self.rc) != lc:
            raise ValueError(f"rC must have {lc} entries, got {len(self.rc)}")
        if ld is None:
            if self.rd is not None:
                raise ValueError(f"{self.construction} takes no rD row")
        elif self.rd is None or len(self.rd) != ld:
            raise ValueError(f"rD must have {ld} entries")
        top = 1 if self.ring == "F2" else 3
        for row in (self.rb, self.rc) + (() if self.rd is None else (self.rd,)):
            if any(not (0 <= v <= top) for v in row):
                raise ValueError(f"entry out of range for ring {self.ring}")

    @classmethod
    def from_tokens(
        cls,
        construction: str,
        rb: str,
        rc: str,
        rd: str | None = None,
        ring: str | None = None,
    ) -> "FirstRows":
        rows = [r1.parse_vector(rb), r1.parse_vector(rc)]
        rows.append(r1.parse_vector(rd) if rd is not None else None)
        if ring is None:
            used = {c for row in rows if row for c in row}
            ring = "F2" if used <= {0, 1} else "R1"
        return cls(construction, ring, rows[0], rows[1], rows[2])

    def alphas(self) -> np.ndarray:
        parts = [self.rb, self.rc] + ([self.rd] if self.rd is not None else [])
        return np.array([v for row in parts for v in row], dtype=np.uint8)

    @classmethod
    def from_alphas(cls, construction: str, alphas, ring: str) -> "FirstRows":
        arr = [int(v) for v in alphas]
        if len(arr) != 18:
            raise ValueError("coefficient vector must have length 18")
        lb, lc, ld = ROW_LENGTHS[construction]
        rd = tuple(arr[lb + lc :]) if ld else None
        return cls(construction, ring, tuple(arr[:lb]), tuple(arr[lb : lb + lc]), rd)

    def tokens(self) -> dict[str, str]:
        out = {"rB": r1.format_vector(self.rb), "rC": r1.format_vector(self.rc)}
        if self.rd is not None:
            out["rD"] = r1.format_vector(self.rd)
        return out

    def projection(self) -> "FirstRows":
        """The mu image over GF(2) (identity on F2 rows)."""
        if self.ring == "F2":
            return self
        prj = lambda row: tuple(int(v) & 1 for v in row)
        return FirstRows(
            self.construction,
            "F2",
            prj(self.rb),
            prj(self.rc),
            None if self.rd is None else prj(self.rd),
        )


def omega_f2(construction: str, alphas) -> BitMatrix:
    arr = np.asarray(alphas, dtype=np.uint8) & 1
    if arr.shape[0] != 18:
        raise ValueError("coefficient vector must have length 18")
    return BitMatrix.from_bits(arr[explicit_pattern(construction)])


def omega_r1(construction: str, codes) -> R1Matrix:
    arr = np.asarray(codes, dtype=np.uint8)
    if arr.shape[0] != 18:
        raise ValueError("coefficient vector must have length 18")
    return R1Matrix.from_codes(arr[explicit_pattern(construction)])


def omega_from_first_rows(fr: FirstRows) -> BitMatrix | R1Matrix:
    if fr.ring == "F2":
        return omega_f2(fr.construction, fr.alphas())
    return omega_r1(fr.construction, fr.alphas())


def gen_matrix(om: BitMatrix) -> BitMatrix:
    """Standard-form generator [I | om]."""
    if om.rows != om.cols:
        raise ValueError("omega block must be square")
    return BitMatrix.identity(om.rows).hstack(om)


def gen_matrix_r1(om: R1Matrix) -> R1Matrix:
    if om.rows != om.cols:
        raise ValueError("omega block must be square")
    return R1Matrix.identity(om.rows).hstack(om)


# --- block self-duality conditions -----------------------------------------
#
# For [I | om] the code is self-dual iff om·omᵀ = I. omega1 splits into four
# 9x9 quadrant equations; omega2/omega3 are block-circulant in their 6x6
# quadrants, so three equations cover the whole product.

_EQUATIONS = {
    "omega1": (
        ("B*B^T + C*C^T = I", (("B", "B"), ("C", "C")), "I"),
        ("B*D^T + C*E^T = 0", (("B", "D"), ("C", "E")), "0"),
        ("D*B^T + E*C^T = 0", (("D", "B"), ("E", "C")), "0"),
        ("D*D^T + E*E^T = I", (("D", "D"), ("E", "E")), "I"),
    ),
    "omega2": (
        ("B*B^T + C*C^T + D*D^T = I", (("B", "B"), ("C", "C"), ("D", "D")), "I"),
        ("B*D^T + C*B^T + D*C^T = 0", (("B", "D"), ("C", "B"), ("D", "C")), "0"),
        ("B*C^T + C*D^T + D*B^T = 0", (("B", "C"), ("C", "D"), ("D", "B")), "0"),
    ),
}
_EQUATIONS["omega3"] = _EQUATIONS["omega2"]

_QUADRANTS = {
    "omega1": {"B": (0, 9, 0, 9), "C": (0, 9, 9, 18), "D": (9, 18, 0, 9), "E": (9, 18, 9, 18)},
    "omega2": {"B": (0, 6, 0, 6), "C": (0, 6, 6, 12), "D": (0, 6, 12, 18)},
}
_QUADRANTS["omega3"] = _QUADRANTS["omega2"]


def _quadrant_patterns(construction: str) -> dict[str, np.ndarray]:
    pat = explicit_pattern(construction)
    return {
        k: pat[r0:r1, c0:c1] for k, (r0, r1, c0, c1) in _QUADRANTS[construction].items()
    }


def evaluate_block_equations(
    construction: str, alphas_batch: np.ndarray, ring: str
) -> tuple[tuple[str, ...], np.ndarray]:
    """Evaluate the theorem equations on a batch of coefficient vectors.

    alphas_batch: (N, 18) uint8 codes. Returns the equation names and an
    (n_equations, N) boolean array of per-equation results.
    """
    batch = np.atleast_2d(np.asarray(alphas_batch, dtype=np.uint8))
    quads = _quadrant_patterns(construction)
    m = next(iter(quads.values())).shape[0]
    eye = np.eye(m, dtype=np.uint8)
    planes: dict[str, tuple[np.ndarray, np.ndarray]] = {}
    for key, pat in quads.items():
        codes = batch[:, pat]  # (N, m, m)
        planes[key] = ((codes & 1).astype(np.int64), ((codes >> 1) & 1).astype(np.int64))
    eqs = _EQUATIONS[construction]
    results = np.empty((len(eqs), batch.shape[0]), dtype=bool)
    for e, (_, terms, target) in enumerate(eqs):
        acc_a = np.zeros((batch.shape[0], m, m), dtype=np.int64)
        acc_b = np.zeros_like(acc_a)
        for xk, yk in terms:
            xa, xb = planes[xk]
            ya, yb = planes[yk]
            yat = ya.transpose(0, 2, 1)
            acc_a += xa @ yat
            if ring == "R1":
                acc_b += xa @ yb.transpose(0, 2, 1) + xb @ yat
        acc_a &= 1
        want = eye if target == "I" else 0
        ok = np.all(acc_a == want, axis=(1, 2))
        if ring == "R1":
            acc_b &= 1
            ok &= ~np.any(acc_b, axis=(1, 2))
        results[e] = ok
    return tuple(name for name, _, _ in eqs), results


@dataclass(frozen=True)
class ConditionReport:
    """Per-equation outcome of the block self-duality conditions."""

    construction: str
    ring: str
    equations: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.equations)

    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, passed in self.equations if not passed)


def check_selfdual_blocks(fr: FirstRows) -> ConditionReport:
    """Evaluate the block equations for one FirstRows value."""
    names, results = evaluate_block_equations(
        fr.construction, fr.alphas()[None, :], fr.ring
    )
    eqs = tuple((name, bool(results[i, 0])) for i, name in enumerate(names))
    return ConditionReport(fr.construction, fr.ring, eqs)


def is_selfdual_direct(fr: FirstRows) -> bool:
    """Direct check om·omᵀ = I over the entry ring (oracle for the block path)."""
    om = omega_from_first_rows(fr)
    return om.mat_mul(om.transpose()).is_identity()
