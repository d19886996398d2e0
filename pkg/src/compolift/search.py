"""Seeded random search for self-dual codes and lifting over F2+uF2.

Randomness is counter-based (Philox keyed by the seed), so a run is fully
determined by (seed, budget): shard workers slice one shared draw stream
and results merge by trial index, making outputs independent of the shard
count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels, r1
from ._version import __version__
from .analysis import CodeParams, analyze_code, standard_form
from .bitmatrix import BitMatrix
from .constructions import (
    CONSTRUCTIONS,
    FirstRows,
    check_selfdual_blocks,
    explicit_pattern,
    gen_matrix,
    gen_matrix_r1,
    is_selfdual_direct,
    omega_f2,
    omega_r1,
)
from .r1 import gray_generator

_SPACE = 1 << 18  # coefficient vectors per construction


@dataclass(frozen=True)
class SearchConfig:
    construction: str
    target_d: int = 6
    budget: int = 10_000
    seed: int = 0
    shards: int = 1

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction: {self.construction!r}")
        if self.target_d not in (6, 8):
            raise ValueError("target distance must be 6 or 8")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")
        if self.shards < 1:
            raise ValueError("shards must be >= 1")


@dataclass(frozen=True)
class LiftConfig:
    base: "CodeRecord"
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    sample_count: int = 1024
    seed: int = 0
    shards: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown lift mode: {self.mode!r}")
        if self.mode == "sampled" and self.sample_count < 1:
            raise ValueError("sample count must be >= 1")
        if self.shards < 1:
            raise ValueError("shards must be >= 1")


@dataclass
class CodeRecord:
    """A constructed or verified code, self-contained for re-verification."""

    id: str
    construction: str
    ring: str
    rb: tuple[int, ...]
    rc: tuple[int, ...]
    rd: tuple[int, ...] | None = None
    params: CodeParams | None = None
    parent_id: str | None = None
    aut: str | None = None  # annotation only, never recomputed
    seed: int | None = None
    tool_version: str | None = None
    extra: dict = field(default_factory=dict)

    def first_rows(self) -> FirstRows:
        return FirstRows(self.construction, self.ring, self.rb, self.rc, self.rd)

    _PARAM_KEYS = ("n", "k", "d", "type", "family", "gamma", "beta", "a12", "a14", "a16")

    def to_dict(self) -> dict:
        out: dict = {
            "id": self.id,
            "construction": self.construction,
            "ring": self.ring,
            "rB": r1.format_vector(self.rb),
            "rC": r1.format_vector(self.rc),
        }
        if self.rd is not None:
            out["rD"] = r1.format_vector(self.rd)
        if self.params is not None:
            p = self.params
            values = (p.n, p.k, p.d, p.code_type, p.family, p.gamma, p.beta, p.a12, p.a14, p.a16)
            out.update({k: v for k, v in zip(self._PARAM_KEYS, values) if v is not None})
        if self.parent_id is not None:
            out["parent"] = self.parent_id
        if self.aut is not None:
            out["aut"] = self.aut
        if self.seed is not None:
            out["seed"] = self.seed
        if self.tool_version is not None:
            out["tool"] = self.tool_version
        out.update(self.extra)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CodeRecord":
        work = dict(data)
        rd = work.pop("rD", None)
        params = None
        if "n" in work:
            params = CodeParams(
                n=work.pop("n"),
                k=work.pop("k"),
                d=work.pop("d"),
                code_type=work.pop("type"),
                family=work.pop("family", None),
                gamma=work.pop("gamma", None),
                beta=work.pop("beta", None),
                a12=work.pop("a12", None),
                a14=work.pop("a14", None),
                a16=work.pop("a16", None),
            )
        return cls(
            id=work.pop("id"),
            construction=work.pop("construction"),
            ring=work.pop("ring"),
            rb=r1.parse_vector(work.pop("rB")),
            rc=r1.parse_vector(work.pop("rC")),
            rd=r1.parse_vector(rd) if rd is not None else None,
            params=params,
            parent_id=work.pop("parent", None),
            aut=work.pop("aut", None),
            seed=work.pop("seed", None),
            tool_version=work.pop("tool", None),
            extra=work,
        )


def fingerprint(rec: CodeRecord) -> tuple:
    """Dedup key (n, k, d, family, gamma, beta); equality is a heuristic for
    code equivalence, not a proof of it."""
    p = rec.params
    if p is None:
        raise ValueError(f"record {rec.id} has no analyzed parameters")
    return (p.n, p.k, p.d, p.family, p.gamma, p.beta)


def _bits_to_int(bits: Iterable[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        v |= (int(b) & 1) << i
    return v


def _int_to_bits(v: int, n: int) -> np.ndarray:
    return np.array([(v >> i) & 1 for i in range(n)], dtype=np.uint8)


def _sharded_scan(kernel, pattern: np.ndarray, draws: np.ndarray, shards: int, *args) -> np.ndarray:
    out = np.zeros(draws.shape[0], dtype=np.uint8)
    if shards <= 1 or draws.shape[0] < 2 * shards:
        kernel(pattern, *args, draws, out)
        return out
    bounds = np.linspace(0, draws.shape[0], shards + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=shards) as pool:
        futures = [
            pool.submit(kernel, pattern, *args, draws[lo:hi], out[lo:hi])
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        for f in futures:
            f.result()
    return out


def search_draws(seed: int, budget: int) -> np.ndarray:
    """The deterministic stream of candidate coefficient vectors."""
    rng = np.random.Generator(np.random.Philox(key=seed))
    return rng.integers(0, _SPACE, size=budget, dtype=np.uint32)


def search_binary(cfg: SearchConfig) -> list[CodeRecord]:
    """Draw random first rows, keep self-dual hits with distance >= target."""
    if cfg.budget == 0:
        return []
    draws = search_draws(cfg.seed, cfg.budget)
    pattern = explicit_pattern(cfg.construction)
    mask = _sharded_scan(_kernels.orthogonal_scan, pattern, draws, cfg.shards)
    records = []
    for trial in np.nonzero(mask)[0]:
        alphas = _int_to_bits(int(draws[trial]), 18)
        fr = FirstRows.from_alphas(cfg.construction, alphas, "F2")
        report = check_selfdual_blocks(fr)
        if not report.ok:  # cannot happen if the kernel agrees with the theorems
            raise AssertionError(f"kernel/theorem disagreement at trial {trial}")
        params = analyze_code(gen_matrix(omega_f2(cfg.construction, alphas)))
        if params.d < cfg.target_d:
            continue
        records.append(
            CodeRecord(
                id=f"{cfg.construction}-s{cfg.seed}-t{int(trial)}",
                construction=cfg.construction,
                ring="F2",
                rb=fr.rb,
                rc=fr.rc,
                rd=fr.rd,
                params=params,
                seed=cfg.seed,
                tool_version=__version__,
            )
        )
    return records


def lift_candidates(cfg: LiftConfig) -> np.ndarray:
    if cfg.mode == "exhaustive":
        return np.arange(_SPACE, dtype=np.uint32)
    rng = np.random.Generator(np.random.Philox(key=cfg.seed))
    raw = rng.integers(0, _SPACE, size=cfg.sample_count, dtype=np.uint32)
    return np.unique(raw)


def lift_code(cfg: LiftConfig) -> list[CodeRecord]:
    """Enumerate u-plane choices lifting a binary self-dual base code.

    Every accepted lift is orthogonal over F2+uF2; each is Gray-mapped and
    analyzed, and carries (family, gamma, beta) when its binary image is a
    [72, 36, 12] code.
    """
    base = cfg.base
    if base.ring != "F2":
        raise ValueError("lift base must be a binary record")
    base_fr = base.first_rows()
    if not is_selfdual_direct(base_fr):
        raise ValueError(f"lift base {base.id} is not self-dual")
    base_d = base.params.d if base.params else analyze_code(
        gen_matrix(omega_f2(base.construction, base_fr.alphas()))
    ).d
    abits = _bits_to_int(base_fr.alphas())
    betas = lift_candidates(cfg)
    pattern = explicit_pattern(base.construction)
    mask = _sharded_scan(_kernels.lift_scan, pattern, betas, cfg.shards, abits)
    records = []
    avec = base_fr.alphas()
    for beta_bits in betas[mask.astype(bool)]:
        bvec = _int_to_bits(int(beta_bits), 18)
        codes = r1.from_planes(avec, bvec)
        fr = FirstRows.from_alphas(base.construction, codes, "R1")
        om = omega_r1(base.construction, codes)
        gen = gray_standard_generator(om)
        params = analyze_code(gen, screen_d=12)
        if params.d > 2 * base_d:
            raise AssertionError("lift distance exceeds twice the projection distance")
        records.append(
            CodeRecord(
                id=f"{base.id}.u{int(beta_bits)}",
                construction=base.construction,
                ring="R1",
                rb=fr.rb,
                rc=fr.rc,
                rd=fr.rd,
                params=params,
                parent_id=base.id,
                seed=cfg.seed if cfg.mode == "sampled" else None,
                tool_version=__version__,
            )
        )
    return records


def gray_standard_generator(om) -> BitMatrix:
    """Standard-form binary generator of the Gray image of [I | om] over R1."""
    gray = gray_generator(gen_matrix_r1(om))
    return standard_form(gray).generator


def verify_record(rec: CodeRecord, by_id: dict[str, CodeRecord] | None = None) -> list[str]:
    """Re-derive everything a record claims from its first rows alone.

    Returns a list of mismatch descriptions (empty means verified).
    """
    problems: list[str] = []
    fr = rec.first_rows()
    report = check_selfdual_blocks(fr)
    if not report.ok:
        return [f"{rec.id}: block conditions failed: {', '.join(report.failed())}"]
    if rec.ring == "F2":
        params = analyze_code(gen_matrix(omega_f2(rec.construction, fr.alphas())))
    else:
        if not is_selfdual_direct(fr):
            return [f"{rec.id}: omega not orthogonal over F2+uF2"]
        proj = fr.projection()
        if not is_selfdual_direct(proj):
            problems.append(f"{rec.id}: projection is not self-dual")
        if by_id and rec.parent_id and rec.parent_id in by_id:
            parent = by_id[rec.parent_id]
            if parent.first_rows() != proj:
                problems.append(f"{rec.id}: projection differs from parent {rec.parent_id}")
        proj_d = analyze_code(gen_matrix(omega_f2(rec.construction, proj.alphas()))).d
        params = analyze_code(gray_standard_generator(omega_r1(rec.construction, fr.alphas())))
        if params.d > 2 * proj_d:
            problems.append(
                f"{rec.id}: distance {params.d} exceeds twice projection distance {proj_d}"
            )
    stored = rec.params
    if stored is not None:
        pairs = (
            ("n", stored.n, params.n),
            ("k", stored.k, params.k),
            ("d", stored.d, params.d),
            ("type", stored.code_type, params.code_type),
            ("family", stored.family, params.family),
            ("gamma", stored.gamma, params.gamma),
            ("beta", stored.beta, params.beta),
            ("a12", stored.a12, params.a12),
            ("a14", stored.a14, params.a14),
            ("a16", stored.a16, params.a16),
        )
        for name, want, got in pairs:
            if want is not None and want != got:
                problems.append(f"{rec.id}: {name} stored {want} but derived {got}")
    return problems
