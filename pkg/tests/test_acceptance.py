"""Acceptance suite: every numbered criterion prints one PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria execute.
"""

from __future__ import annotations

import time
from types import SimpleNamespace

import numpy as np
import pytest

from compolift import r1
from compolift import records as recmod
from compolift.analysis import analyze_code, full_weight_spectrum, standard_form, weight_spectrum_low
from compolift.composite import preset
from compolift.constructions import (
    CONSTRUCTIONS,
    evaluate_block_equations,
    explicit_pattern,
    gen_matrix,
    gen_matrix_r1,
    omega_f2,
    omega_r1,
)
from compolift.r1 import gray_generator
from compolift.search import LiftConfig, SearchConfig, lift_code, search_binary, verify_record
from compolift.tables import NEW_ENUMERATOR_PAIRS, all_records, binary_records, lift_records

from conftest import random_selfdual_generator

# published seed for the search smoke test (criterion 9)
SEARCH_SEED = 1818


def _line(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {num:>2} [{status}] {name}{suffix}")
    assert ok, f"criterion {num} failed: {name}{suffix}"


@pytest.fixture(scope="module")
def lift_results():
    """One full derivation per published lift, shared by criteria 3, 4, 8."""
    by_id = {r.id: r for r in all_records()}
    results = []
    for rec in lift_records():
        t0 = time.perf_counter()
        fr = rec.first_rows()
        om = omega_r1(rec.construction, fr.alphas())
        orthogonal = om.mat_mul(om.transpose()).is_identity()
        proj = fr.projection()
        parent_match = by_id[rec.parent_id].first_rows() == proj
        proj_gen = gen_matrix(omega_f2(rec.construction, proj.alphas()))
        proj_params = analyze_code(proj_gen)
        gray = standard_form(gray_generator(gen_matrix_r1(om))).generator
        params = analyze_code(gray)  # validates A*A^T = I, i.e. Gray image self-dual
        results.append(
            SimpleNamespace(
                rec=rec,
                orthogonal=orthogonal,
                parent_match=parent_match,
                proj_params=proj_params,
                params=params,
                elapsed=time.perf_counter() - t0,
            )
        )
    return results


def test_criterion_1_table1_reconstruction():
    expected = {"C1": 6, "C2": 6, "C3": 8, "C4": 8}
    t0 = time.perf_counter()
    derived = {}
    for rec in binary_records():
        if rec.id in expected:
            gen = gen_matrix(omega_f2(rec.construction, rec.first_rows().alphas()))
            params = analyze_code(gen)
            assert (params.n, params.k) == (36, 18)
            derived[rec.id] = params.d
    elapsed = time.perf_counter() - t0
    ok = derived == expected and elapsed < 1.0
    _line(1, "four [36,18] codes certify at d = 6,6,8,8", ok, f"{elapsed:.3f}s")


def test_criterion_2_tables6_and_8_reconstruction():
    rows = [r for r in binary_records() if r.construction in ("omega2", "omega3")]
    t0 = time.perf_counter()
    distances = []
    for rec in rows:
        gen = gen_matrix(omega_f2(rec.construction, rec.first_rows().alphas()))
        params = analyze_code(gen)
        distances.append((params.n, params.k, params.d))
    elapsed = time.perf_counter() - t0
    ok = len(rows) == 8 and all(p == (36, 18, 6) for p in distances) and elapsed < 1.0
    _line(2, "eight [36,18,6] codes from the three-row constructions", ok, f"{elapsed:.3f}s")


def test_criterion_3_all_thirty_lifts(lift_results):
    ok = len(lift_results) == 30
    worst = 0.0
    for res in lift_results:
        stored = res.rec.params
        derived = res.params
        ok &= res.orthogonal and res.parent_match
        ok &= (derived.n, derived.k, derived.d) == (72, 36, 12)
        ok &= derived.code_type == "I"
        ok &= derived.family == "W72_1"
        ok &= derived.gamma == stored.gamma and derived.beta == stored.beta
        ok &= res.elapsed <= 30.0
        worst = max(worst, res.elapsed)
    _line(3, "30 lifts verify as Type I [72,36,12] with exact (family,gamma,beta)",
          ok, f"max {worst:.2f}s/code")


def test_criterion_4_conclusion_cross_check(lift_results):
    derived = sorted((res.params.gamma, res.params.beta) for res in lift_results)
    claimed = sorted(
        (gamma, beta) for gamma, betas in NEW_ENUMERATOR_PAIRS.items() for beta in betas
    )
    ok = derived == claimed and len(claimed) == 30
    _line(4, "multiset of 30 (gamma, beta) pairs equals the published list", ok)


def test_criterion_5_composite_engine_oracle():
    rng = np.random.default_rng(505)
    mismatches = 0
    for name in CONSTRUCTIONS:
        generic = preset(name).pattern()
        explicit = explicit_pattern(name)
        if not np.array_equal(generic, explicit):
            mismatches += 1
        for top in (2, 4):  # binary and F2+uF2 coefficient vectors
            batch = rng.integers(0, top, size=(1000, 18), dtype=np.uint8)
            if not np.array_equal(batch[:, generic], batch[:, explicit]):
                mismatches += 1
    _line(5, "generic composite engine equals explicit block forms", mismatches == 0,
          "symbolic + 1000 random vectors x 3 constructions x 2 rings")


def _direct_orthogonal_batch(construction: str, batch: np.ndarray, ring: str) -> np.ndarray:
    pat = explicit_pattern(construction)
    codes = batch[:, pat]
    a = (codes & 1).astype(np.float32)
    at = a.transpose(0, 2, 1)
    eye = np.eye(18, dtype=np.int64)
    ok = np.all((a @ at).astype(np.int64) % 2 == eye, axis=(1, 2))
    if ring == "R1":
        b = ((codes >> 1) & 1).astype(np.float32)
        cross = (a @ b.transpose(0, 2, 1) + b @ at).astype(np.int64) % 2
        ok &= ~np.any(cross, axis=(1, 2))
    return ok


def test_criterion_6_theorem_equivalence():
    rng = np.random.default_rng(606)
    trials = 10_000
    disagreements = 0
    for name in CONSTRUCTIONS:
        for ring, top in (("F2", 2), ("R1", 4)):
            batch = rng.integers(0, top, size=(trials, 18), dtype=np.uint8)
            _, eqs = evaluate_block_equations(name, batch, ring)
            blocks_ok = np.all(eqs, axis=0)
            direct_ok = _direct_orthogonal_batch(name, batch, ring)
            disagreements += int(np.sum(blocks_ok != direct_ok))
    _line(6, "block conditions agree with direct omega*omega^T = I",
          disagreements == 0, f"{trials} rows x 3 constructions x 2 rings")


def test_criterion_7_enumeration_oracle():
    rng = np.random.default_rng(707)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(20):
        gen = random_selfdual_generator(8, rng)
        two_pass = weight_spectrum_low(gen, 4)
        full = full_weight_spectrum(gen)
        if not np.array_equal(two_pass[:10], full[:10]):
            bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 1.0
    _line(7, "two-information-set counts equal full enumeration on 20 [16,8] codes",
          ok, f"{elapsed:.3f}s")


def test_criterion_8_gray_and_projection_properties(lift_results):
    rng = np.random.default_rng(808)
    x = rng.integers(0, 4, size=(100_000, 12), dtype=np.uint8)
    y = rng.integers(0, 4, size=(100_000, 12), dtype=np.uint8)
    diff = x ^ y
    lee = np.array([0, 1, 2, 1], dtype=np.int64)[diff].sum(axis=1)
    a = diff & 1
    b = diff >> 1
    hamming = (b != 0).sum(axis=1) + ((a ^ b) != 0).sum(axis=1)
    isometry_ok = bool(np.array_equal(lee, hamming))
    theorem_ok = all(
        res.proj_params.d * 2 >= res.params.d  # d <= 2 d'
        and res.proj_params.n == 36  # projection self-dual [36,18] (analyze validated)
        for res in lift_results
    )
    _line(8, "Lee/Hamming isometry on 1e5 pairs; projection theorems on all lifts",
          isometry_ok and theorem_ok)


def test_criterion_9_search_smoke():
    t0 = time.perf_counter()
    cfg = SearchConfig("omega1", target_d=6, budget=1_000_000, seed=SEARCH_SEED)
    hits = search_binary(cfg)
    elapsed = time.perf_counter() - t0
    by_id = {r.id: r for r in binary_records()}
    injected_ok = all(verify_record(rec, by_id) == [] for rec in by_id.values())
    ok = len(hits) >= 1 and injected_ok
    _line(9, f"seed {SEARCH_SEED} budget 1e6 search emits verified records",
          ok, f"{len(hits)} hits, {elapsed:.1f}s")


def test_criterion_10_determinism_across_shards():
    s_cfg = dict(construction="omega2", target_d=6, budget=30_000, seed=77)
    hits = search_binary(SearchConfig(**s_cfg, shards=1))
    search_a = recmod.dumps(hits)
    search_b = recmod.dumps(search_binary(SearchConfig(**s_cfg, shards=4)))
    base = binary_records()[0]
    l_cfg = dict(base=base, mode="sampled", sample_count=500, seed=5)
    lift_a = recmod.dumps(lift_code(LiftConfig(**l_cfg, shards=1)))
    lift_b = recmod.dumps(lift_code(LiftConfig(**l_cfg, shards=3)))
    ok = hits and search_a == search_b and lift_a == lift_b
    _line(10, "identical seeds give byte-identical outputs across shard counts",
          bool(ok), f"{len(hits)} search hits compared")
