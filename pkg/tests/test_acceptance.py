"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line in ``RESULTS``; the conftest prints them
at the end of the session.  Run this file directly for the same report
without pytest.
"""

import time

import numpy as np
import pytest

from doodlekit import load_kishino
from doodlekit.gauss import parse, virtualize
from doodlekit.homology import pairing_table, tilde_table
from doodlekit.skewmat import (
    AugSkewMatrix,
    Verdict,
    canonical_key,
    classify,
    find_type1,
    find_type2,
    matrix_of,
    reduce,
    s_equivalent,
)
from doodlekit.suite import UNIQUENESS_LIMIT, make_corpus, run_checks
from doodlekit.surface import is_planar, minimal_genus
from doodlekit.virtualize import check_prediction, corollary_shape_check

RESULTS: list[str] = []

LABELS = ("a1", "a2", "a3", "a4")
LAMBDA = np.array([
    [0, -1, -2, 0, -1],
    [1, 0, 0, 2, 1],
    [2, 0, 0, 1, 1],
    [0, -2, -1, 0, -1],
])
TILDE = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


def record(number, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def corpus():
    return make_corpus(seed=1, count=100, max_crossings=6, moves=5)


def codes_of(corpus, kinds=None):
    return [e.code for e in corpus if kinds is None or e.kind in kinds]


def test_criterion_1_kishino_golden():
    t0 = time.perf_counter()
    code = load_kishino()
    lam = pairing_table(code, LABELS).P[:4, :]
    tilde = tilde_table(code, LABELS)
    golden = AugSkewMatrix(LAMBDA[:, :4], LAMBDA[:, 4])
    verdict = classify(code)
    elapsed = time.perf_counter() - t0
    checks = {
        "alpha": list(lam[:, 4]) == [-1, 1, 1, -1],
        "lambda": np.array_equal(lam, LAMBDA),
        "lambda up to permutation": canonical_key(matrix_of(code)) == canonical_key(golden),
        "tilde": np.array_equal(tilde, TILDE),
        "classify": verdict is Verdict.NON_CLASSICAL_OBSTRUCTION,
        "time": elapsed < 1.0,
    }
    failed = [k for k, v in checks.items() if not v]
    assert record(1, not failed, f"{elapsed:.3f}s" + (f" failed: {failed}" if failed else ""))


def test_criterion_2_irreducible():
    M = matrix_of(load_kishino(), LABELS)
    t1, t2 = find_type1(M), find_type2(M)
    assert record(2, not t1 and not t2, f"type1={t1} type2={t2}")


def test_criterion_3_genus():
    t0 = time.perf_counter()
    torus = minimal_genus(parse("a b a b | +1 +1"))
    curl = minimal_genus(parse("a a | +1"))
    kish = minimal_genus(load_kishino())
    elapsed = time.perf_counter() - t0
    checks = {
        "torus boundary": torus.boundary_components == 2,
        "torus genus": torus.genus == 1,
        "monogon genus": curl.genus == 0,
        "kishino genus": kish.genus == 1,
        "time": elapsed < 1.0,
    }
    failed = [k for k, v in checks.items() if not v]
    detail = f"kishino genus={kish.genus} boundary={kish.boundary_components}"
    assert record(3, not failed, detail + (f" failed: {failed}" if failed else ""))


def test_criterion_4_move_invariance(corpus):
    base = codes_of(corpus, {"base"})
    assert len(base) >= 100 and max(c.n for c in base) <= 6
    t0 = time.perf_counter()
    rep = run_checks(base, seed=1, names=["moves"])
    # each inflated corpus entry must also share its base's irreducible form
    inflated_bad = 0
    for prev, nxt in zip(corpus, corpus[1:]):
        if prev.kind == "base" and nxt.kind == "inflated":
            assert len(nxt.trace) >= 5
            if canonical_key(reduce(matrix_of(prev.code))[0]) != canonical_key(reduce(matrix_of(nxt.code))[0]):
                inflated_bad += 1
    elapsed = time.perf_counter() - t0
    bad = len(rep.violations) + inflated_bad
    assert record(4, bad == 0 and elapsed < 60, f"{bad} violations, {elapsed:.1f}s")


def test_criterion_5_pairing_identities(corpus):
    rep = run_checks(codes_of(corpus), seed=1, names=["identities"])
    assert record(5, rep.ok, f"{len(rep.violations)} violations over {len(corpus)} codes")


def test_criterion_6_reduction_uniqueness(corpus):
    small = [c for c in codes_of(corpus) if c.n <= UNIQUENESS_LIMIT]
    t0 = time.perf_counter()
    rep = run_checks(small, seed=1, names=["uniqueness"])
    elapsed = time.perf_counter() - t0
    ok = rep.ok and rep.counts.get("uniqueness", 0) == len(small) and elapsed < 120
    assert record(6, ok, f"{len(rep.violations)} violations over {len(small)} matrices, {elapsed:.1f}s")


def test_criterion_7_virtualization(corpus):
    bad = 0
    cells = 0
    for c in codes_of(corpus):
        for a in c.labels():
            chk = check_prediction(c, a)
            cells += 1
            bad += not chk.match
    assert record(7, bad == 0, f"{bad} mismatches over {cells} virtualizations")


def test_criterion_8_corollary(corpus):
    planar = [c for c in codes_of(corpus) if is_planar(c)]
    bad = 0
    balanced = 0
    for c in planar:
        for e in corollary_shape_check(c).entries:
            if not (e.template_match and e.avoiding_rows_zero and e.s_equivalent_to_template):
                bad += 1
            if e.k == e.m:
                balanced += 1
                if not s_equivalent(matrix_of(virtualize(c, e.crossing)), AugSkewMatrix.empty()):
                    bad += 1
    assert record(8, bad == 0 and len(planar) > 0,
                  f"{bad} violations over {len(planar)} planar codes, {balanced} balanced crossings")


def test_criterion_9_planarity(corpus):
    bad = sum(is_planar(c) != (not pairing_table(c).P.any()) for c in codes_of(corpus))
    assert record(9, bad == 0, f"{bad} disagreements over {len(corpus)} codes")


if __name__ == "__main__":
    shared = make_corpus(seed=1, count=100, max_crossings=6, moves=5)
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(shared) if fn.__code__.co_argcount else fn()
            except AssertionError:
                pass
