"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are written
straight to the terminal even when output capture is on.
"""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from stretchfactor import cli
from stretchfactor.graphspec import check_spectral_bounds
from stretchfactor.homology import TwistWord, action, curve_classes_chain, xtrain_curve_classes
from stretchfactor.intpoly import (
    IntPoly,
    cyclotomic_factors,
    is_palindromic,
    largest_real_root,
    power_min_poly,
    reciprocal,
    salem_family_poly,
    unit_circle_location,
)
from stretchfactor.verify import (
    LAMBDA_TOLERANCE,
    Outcome,
    check_table_row,
    load_tables,
    long_obstruction_ok,
    verify_cover_degrees,
    verify_theorem_A,
    verify_theorem_B,
)

SEED = 20240611


@pytest.fixture
def emit(capsys):
    def _emit(name: str, ok: bool, detail: str = "") -> bool:
        with capsys.disabled():
            print(f"\n[{name}] {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        return ok

    return _emit


def printed_rows():
    return [r for r in load_tables() if r.table in (1, 2) and r.minpoly is not None]


# 1 -------------------------------------------------------------------------------


def test_ac1_irreducibility_up_to_genus_25(emit):
    start = time.perf_counter()
    report = verify_theorem_B(25)
    elapsed = time.perf_counter() - start
    bad = []
    for row in report.witness["rows"]:
        g, cert = row["g"], row["certificate"]
        ok = (
            cert["verdict"] == "Proven"
            and cert["location"]["outside"] == 1
            and abs(cert["constant"]) == 1
            and cert["cyclotomic_factors"] == []
            and cert["search_bound"] >= 2 * (2 * g) ** 2
            and cert["degree"] == 2 * g
        )
        if not ok:
            bad.append(g)
    ok = report.verdict is Outcome.PASS and not bad and len(report.witness["rows"]) == 24 and elapsed < 300
    assert emit("AC1", ok, f"g=2..25 proven, bad={bad}, {elapsed:.2f}s (limit 300s)")


# 2 -------------------------------------------------------------------------------


def test_ac2_three_routes_agree(emit):
    start = time.perf_counter()
    bad = []
    for g in range(2, 11):
        for k in range(3, 7):
            r = verify_theorem_A(g, k)
            c = r.witness["checks"]
            exact = c["thurston_poly"] and c["tree_poly"] and c["homology_poly"] and c["salem"]
            if r.verdict is not Outcome.PASS or not exact:
                bad.append((g, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    assert emit("AC2", ok, f"36 (g,k) pairs, identical p_gk on all three routes, bad={bad}, {elapsed:.2f}s (limit 120s)")


# 3 -------------------------------------------------------------------------------


def test_ac3_limit_and_monotonicity(emit, capsys, tmp_path):
    start = time.perf_counter()
    code = cli.main(
        ["verify", "limit", "--k", "4", "--delta", "1e-3", "--g", "10", "--json", "--cache-dir", str(tmp_path)]
    )
    capsys.readouterr()
    lams = [largest_real_root(salem_family_poly(g, 4)) for g in range(2, 11)]
    increasing = all(a.compare(b) < 0 for a, b in zip(lams, lams[1:]))
    top = lams[-1]
    inside = top.compare_rational(3) < 0 and top.compare_rational(Fraction(2999, 1000)) > 0
    elapsed = time.perf_counter() - start
    ok = code == 0 and increasing and inside
    assert emit("AC3", ok, f"exit={code}, lambda(f_10,4) in (2.999, 3)={inside}, increasing g=2..10={increasing}, {elapsed:.2f}s")


# 4 -------------------------------------------------------------------------------


def test_ac4_i_degrees(emit):
    bad = [r.label for r in printed_rows() if not check_table_row(r)["degree"]]
    assert emit("AC4(i)", not bad, f"degree column, failing rows={bad}")


def test_ac4_ii_lambda_column(emit):
    bad = []
    for r in printed_rows():
        if r.lambda3 is None:
            continue
        lam = largest_real_root(r.minpoly)
        target = Fraction(r.lambda3)
        if not (lam.compare_rational(target - LAMBDA_TOLERANCE) >= 0 and lam.compare_rational(target + LAMBDA_TOLERANCE) <= 0):
            bad.append(f"{r.label} printed {r.lambda3} computed {lam.decimal(6)}")
    assert emit("AC4(ii)", not bad, f"lambda within 5e-4, failing rows={bad}")


def test_ac4_iii_no_cyclotomic_factors(emit):
    bad = [f"{r.label} has Phi_{cyclotomic_factors(r.minpoly)}" for r in printed_rows() if cyclotomic_factors(r.minpoly)]
    assert emit("AC4(iii)", not bad, f"cyclotomic-free, failing rows={bad}")


def test_ac4_iv_cubics_are_pisot(emit):
    cubics = [r for r in printed_rows() if r.degree == 3]
    bad = [r.label for r in cubics if not check_table_row(r)["pisot"]]
    assert emit("AC4(iv)", bool(cubics) and not bad, f"{len(cubics)} degree-3 rows, failing rows={bad}")


def test_ac4_v_long_obstruction(emit):
    rows = load_tables()
    bad = [r.label for r in rows if not long_obstruction_ok(r)]
    assert emit("AC4(v)", not bad and {r.table for r in rows} == {1, 2, 3, 4}, f"{len(rows)} rows of tables 1-4, failing rows={bad}")


# 5 -------------------------------------------------------------------------------


def test_ac5_cover_degrees(emit):
    start = time.perf_counter()
    bad = []
    for g in (4, 5, 8, 10):
        r = verify_cover_degrees(g, 6)
        hs = {row["h"] for row in r.witness["rows"]}
        ks = {row["k"] for row in r.witness["rows"]}
        if r.verdict is not Outcome.PASS or hs != set(range(1, g // 2 + 1)) or ks != set(range(1, 7)):
            bad.append(g)
        for row in r.witness["rows"]:
            if row["degree"] != 2 * row["h"] or row["certificate"] != "Proven":
                bad.append((g, row["h"], row["k"]))
            if row["h"] >= 2 and row["class"] != "Salem":
                bad.append((g, row["h"], row["k"], row["class"]))
    elapsed = time.perf_counter() - start
    assert emit("AC5", not bad, f"g in (4,5,8,10), k=1..6, bad={bad}, {elapsed:.2f}s")


# 6 -------------------------------------------------------------------------------


def test_ac6_spectral_bounds(emit):
    start = time.perf_counter()
    bad = [(n, k) for n in range(1, 31) for k in range(3, 11) if not check_spectral_bounds(n, k).ok]
    elapsed = time.perf_counter() - start
    assert emit("AC6", not bad and elapsed < 60, f"240 trees, bad={bad}, {elapsed:.2f}s (limit 60s)")


# 7 -------------------------------------------------------------------------------


def _random_poly(rng, max_degree, monic=False, nonzero_constant=True, bound=9):
    n = rng.randint(1, max_degree)
    cs = [rng.randint(-bound, bound) for _ in range(n)]
    if nonzero_constant and cs[0] == 0:
        cs[0] = rng.choice([-1, 1])
    lead = 1 if monic else rng.choice([c for c in range(-bound, bound + 1) if c])
    return IntPoly(cs + [lead])


def test_ac7a_symplectic_words(emit):
    rng = random.Random(SEED)
    bad = 0
    for _ in range(500):
        g = rng.randint(2, 6)
        table = dict(xtrain_curve_classes(g))
        table.update({f"ch{k}": v for k, v in curve_classes_chain(g).items()})
        labels = sorted(table)
        word = TwistWord.of((rng.choice(labels), rng.choice([1, -1])) for _ in range(rng.randint(0, 50)))
        m = action(word, table, g)
        if not (m.is_symplectic() and m.det() == 1):
            bad += 1
    assert emit("AC7(a)", bad == 0, f"500 words, g<=6, length<=50, violations={bad}")


def test_ac7b_reciprocal_identities(emit):
    rng = random.Random(SEED + 1)
    bad = 0
    for _ in range(500):
        p, q = _random_poly(rng, 10), _random_poly(rng, 6)
        pal = p * reciprocal(p)
        checks = (
            reciprocal(reciprocal(p)) == p,
            reciprocal(p * q) == reciprocal(p) * reciprocal(q),
            is_palindromic(pal) and reciprocal(pal) == pal,
            is_palindromic(p) == (reciprocal(p) == p),
        )
        bad += not all(checks)
    assert emit("AC7(b)", bad == 0, f"500 polynomials, violations={bad}")


def test_ac7c_unit_circle_against_float_solver(emit):
    rng = random.Random(SEED + 2)
    done, skipped, bad = 0, 0, []
    while done < 200:
        p = _random_poly(rng, 10)
        roots = np.roots(list(reversed(p.coeffs)))
        mods = np.abs(roots)
        if np.any(np.abs(mods - 1) <= 1e-6):
            skipped += 1
            continue
        expected = (int(np.sum(mods < 1)), 0, int(np.sum(mods > 1)))
        loc = unit_circle_location(p)
        if (loc.inside, loc.on, loc.outside) != expected:
            bad.append(p.coeffs)
        done += 1
    assert emit("AC7(c)", not bad, f"200 degree<=10 polynomials ({skipped} near-circle draws skipped), mismatches={bad}")


def test_ac7d_power_composition(emit):
    rng = random.Random(SEED + 3)
    bad = 0
    for _ in range(100):
        p = _random_poly(rng, 6, monic=True, bound=5)
        a, b = rng.randint(1, 4), rng.randint(1, 4)
        bad += power_min_poly(power_min_poly(p, a), b) != power_min_poly(p, a * b)
    assert emit("AC7(d)", bad == 0, f"100 random (p, a, b), violations={bad}")
