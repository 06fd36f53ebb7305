"""Acceptance gate: the nine headline checks, each with its time budget.

Every test prints one PASS/FAIL line (visible on failure or with -s) and
asserts the same condition, so `pytest -v` shows one verdict per
criterion.  Budgets are wall-clock upper bounds, deliberately generous;
the identity checks themselves are exact, with no numeric tolerance.
"""

import json
import random
import shutil
import time

import pytest

from hallverify.cli import RunConfig, run_suite
from hallverify.formal import E2, E3, FormalSum, serre_reduce
from hallverify.groebner import (
    EMPTY,
    GREVLEX,
    LEX,
    buchberger,
    is_groebner,
    krull_dim,
    singular_locus_dim,
)
from hallverify.report import strip_timings
from hallverify.rings import LaurentPoly
from hallverify.schemes import (
    aggregate_pass,
    build_scheme,
    default_fixture_dir,
    run_all,
    verify_chart_reducedness,
)
from hallverify.shuffle import ShuffleEngine


def verdict(n, ok, detail):
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def eng():
    return ShuffleEngine(max_arity=3)


def test_criterion_1_cubic_relation_sweep(eng):
    t0 = time.perf_counter()
    zeros = {k: eng.serre_defect(k).is_zero for k in range(-2, 4)}
    dt = time.perf_counter() - t0
    ok = all(zeros.values()) and dt < 10.0
    verdict(1, ok, f"[[e(k+1),e(k-1)],e(k)] = 0 for k in -2..3, {dt:.2f}s (< 10s)")


def test_criterion_2_exchange_relation_grid(eng):
    t0 = time.perf_counter()
    reflect = eng.kernel_reflection_check()
    zeros = {(k, l): eng.relation21_defect(k, l).is_zero
             for k in range(-2, 3) for l in range(-2, 3)}
    dt = time.perf_counter() - t0
    ok = reflect and all(zeros.values()) and dt < 10.0
    verdict(2, ok, f"reflection check and 25 grid cells zero, {dt:.2f}s (< 10s)")


def test_criterion_3_shift_covariance(eng):
    ok = True
    for k in range(-2, 3):
        lhs = eng.serre_defect(k + 1)
        rhs = eng.scale_shift(eng.serre_defect(k))
        ok = ok and lhs == rhs
    verdict(3, ok, "serre_defect(k+1) = z1*z2*z3 * serre_defect(k), k in -2..2")


def test_criterion_4_formal_reduction():
    timings = []
    for _ in range(5):
        t0 = time.perf_counter()
        result, trace = serre_reduce()
        timings.append(time.perf_counter() - t0)
    best_ms = min(timings) * 1000.0
    stage1 = trace.stages[0].output == FormalSum.from_terms(
        [(E2(-1, 1), 1), (E2(0, 0), 1)])
    pair = (E3(-1, 0, 1), 1) in trace.cancellation_pairs()
    ok = (result.is_zero and trace.replay() and stage1 and pair
          and best_ms < 1.0)
    verdict(4, ok, f"symbolic reduction to 0 with +/-E3(k-1,k,k+1) pair, "
                   f"best {best_ms:.3f}ms (< 1ms)")


def test_criterion_5_catalog_dimensions():
    expected = {"flag_xy": 5, "flag_xx": 4, "flag_xyz": 9, "flag_xxy": 8,
                "flag_yxx": 8, "flag_xyx": 8, "minors_core": 4}
    t0 = time.perf_counter()
    ok = True
    for name, dim in expected.items():
        ideal = build_scheme(name).essential_ideal()
        ok = ok and krull_dim(ideal, GREVLEX) == dim \
            and krull_dim(ideal, LEX) == dim
    dt = time.perf_counter() - t0
    verdict(5, ok, f"dimensions (5,4,9,8,8,8) and 4, grevlex = lex, "
                   f"{dt:.2f}s (< 60s)")
    assert dt < 60.0


def test_criterion_6_singular_locus_codimensions():
    t0 = time.perf_counter()
    sing = {}
    for name in ("flag_xy", "flag_xx", "flag_xyz", "flag_xxy", "flag_yxx",
                 "flag_xyx", "minors_core"):
        spec = build_scheme(name)
        assert spec.normal_flagged
        sing[name] = singular_locus_dim(spec.essential_ideal(), spec.codim())
    dt = time.perf_counter() - t0
    ok = sing["flag_xy"] == 2 and sing["minors_core"] == 0
    for name, s in sing.items():
        dim = build_scheme(name).expected_dim
        codim_in_locus = float("inf") if s is EMPTY else dim - s
        ok = ok and codim_in_locus >= 2
    verdict(6, ok, f"singular loci: flag_xy dim 2, minors_core dim 0, "
                   f"all entries codim >= 2, {dt:.1f}s")


def test_criterion_7_chart_reducedness():
    t0 = time.perf_counter()
    results = [verify_chart_reducedness(build_scheme(n))
               for n in ("Yprime_chart_h11", "Yprime_chart_h12",
                         "Yplus_chart_g23", "Yplus_chart_g22g33")]
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in results) and dt < 60.0
    verdict(7, ok, f"2 smooth charts + 2 residual hypersurfaces certified, "
                   f"{dt:.1f}s (< 60s)")


def test_criterion_8_property_suites(eng, tmp_path):
    rng = random.Random(814)
    assoc = True
    symmetric = True
    triples = [tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(20)]
    for a, b, c in triples:
        ea, eb, ec = eng.make_e(a), eng.make_e(b), eng.make_e(c)
        ab = eng.shuffle_mul(ea, eb)
        bc = eng.shuffle_mul(eb, ec)
        assoc = assoc and eng.shuffle_mul(ab, ec) == eng.shuffle_mul(ea, bc)
        symmetric = symmetric and eng.is_symmetric(ab) and eng.is_symmetric(bc)
    anti = all(
        eng.commutator(eng.make_e(k), eng.make_e(l))
        == -eng.commutator(eng.make_e(l), eng.make_e(k))
        for k, l in {t[:2] for t in triples})
    bases_ok = True
    for name in ("flag_xy", "flag_xx", "flag_xyz", "flag_xxy", "flag_yxx",
                 "flag_xyx", "minors_core", "Yprime_chart_h11",
                 "Yprime_chart_h12", "Yplus_chart_g23", "Yplus_chart_g22g33"):
        ideal = build_scheme(name).essential_ideal()
        gb = buchberger(ideal)
        bases_ok = bases_ok and is_groebner(gb.basis)
        for g in ideal.generators:
            bases_ok = bases_ok and gb.reduce(g).is_zero
        if gb.basis:
            probe = gb.basis[0] * gb.basis[-1] \
                + LaurentPoly.variable(ideal.ring, ideal.ring.variables[0])
            r = gb.reduce(probe)
            bases_ok = bases_ok and gb.reduce(r) == r
    work = tmp_path / "fixtures"
    shutil.copytree(default_fixture_dir(), work)
    path = work / "minors_core.ideal"
    path.write_text(path.read_text().replace("x1*y2 - x2*y1",
                                             "x1*y2 + x2*y1"))
    mutated_fails = not aggregate_pass(run_all(["minors_core"],
                                               fixtures_dir=work))
    ok = assoc and symmetric and anti and bases_ok and mutated_fails
    verdict(8, ok, "20 associativity triples, antisymmetry, product symmetry, "
                   "catalog bases verified, mutation detected")


def test_criterion_9_report_determinism():
    config = RunConfig(suites=("shuffle", "formal", "schemes"),
                       k_min=0, k_max=1, grid=1, only=("minors_core",),
                       output_format="json")
    first = json.loads(run_suite(config).to_json())
    second = json.loads(run_suite(config).to_json())
    ok = strip_timings(first) == strip_timings(second)
    verdict(9, ok, "identical config gives identical JSON modulo timings")
