import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from doodlekit.gauss import parse, rotate, virtualize
from doodlekit.homology import (
    LoopWalk,
    full_loop,
    pairing_interval,
    pairing_pushoff,
    pairing_table,
    primitive_loops,
    tilde_table,
)
from doodlekit.skewmat import canonical_key, from_pairing_table, AugSkewMatrix
from doodlekit.surface import build_rotation_system, is_planar

from conftest import KISHINO_LABELS, codes

KISHINO_LAMBDA = np.array([
    [0, -1, -2, 0, -1],
    [1, 0, 0, 2, 1],
    [2, 0, 0, 1, 1],
    [0, -2, -1, 0, -1],
])
KISHINO_TILDE = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


def test_monogon_loops():
    c = parse("a a | a=+1")
    left, right = primitive_loops(c, "a")
    # each smoothing is one lobe of the curl
    assert (left.arcs, right.arcs) == ((0,), (1,))
    assert not pairing_table(c).P.any()


def test_torus_code_loops():
    c = parse("a b a b | a=+1 b=+1")
    left, right = primitive_loops(c, "a")
    assert left.arcs == (0, 1)
    assert right.arcs == (2, 3)
    # the interior of D_a is b's first occurrence
    assert [i for i, _ in left.passes(4)][:-1] == [1]


@given(codes(min_n=1))
def test_sign_swaps_loops(c):
    a = c.labels()[-1]
    left, right = primitive_loops(c, a)
    vl, vr = primitive_loops(virtualize(c, a), a)
    assert (vl.arcs, vr.arcs) == (right.arcs, left.arcs)


@given(codes(min_n=1))
def test_loops_split_the_curve(c):
    for a in c.labels():
        left, right = primitive_loops(c, a)
        left.check(c)
        right.check(c)
        assert sorted(left.arcs + right.arcs) == list(range(len(c)))


def test_walk_check_rejects_open_walks():
    c = parse("a b a b | a=+1 b=+1")
    with pytest.raises(ValueError):
        LoopWalk((0,)).check(c)
    with pytest.raises(ValueError):
        LoopWalk((0, 0)).check(c)


def test_interval_examples(kishino):
    assert pairing_interval(parse("a a | a=+1"), "a") == 0
    assert [pairing_interval(kishino, a) for a in KISHINO_LABELS] == [-1, 1, 1, -1]
    c = parse("a b c a b c | a=+1 b=+1 c=+1")
    rs = build_rotation_system(c)
    assert pairing_pushoff(rs, primitive_loops(c, "a")[0], full_loop(c)) == 2
    assert pairing_interval(c, "a") == 2


def test_kishino_tables(kishino):
    t = pairing_table(kishino, KISHINO_LABELS)
    assert np.array_equal(t.P[:4, :], KISHINO_LAMBDA)
    assert np.array_equal(tilde_table(kishino, KISHINO_LABELS), KISHINO_TILDE)
    # and in first-appearance order, up to simultaneous permutation
    M = from_pairing_table(pairing_table(kishino))
    golden = AugSkewMatrix(KISHINO_LAMBDA[:, :4], KISHINO_LAMBDA[:, 4])
    assert canonical_key(M) == canonical_key(golden)


@given(codes())
def test_table_skew(c):
    P = pairing_table(c).P
    assert np.array_equal(P, -P.T)
    assert not np.diag(P).any()


@given(codes(min_n=1))
def test_self_pairing_zero(c):
    rs = build_rotation_system(c)
    for a in c.labels():
        for w in primitive_loops(c, a):
            assert pairing_pushoff(rs, w, w) == 0
    d = full_loop(c)
    assert pairing_pushoff(rs, d, d) == 0


@given(codes())
def test_interval_matches_pushoff(c):
    t = pairing_table(c)
    for a in c.labels():
        assert pairing_interval(c, a) == t[a, "D"]


@given(codes(min_n=1))
def test_additivity_and_tilde_relations(c):
    labels = c.labels()
    n = len(labels)
    rs = build_rotation_system(c)
    P = pairing_table(c).P
    T = tilde_table(c)
    D = full_loop(c)
    loops = [primitive_loops(c, a) for a in labels]
    for i in range(n):
        left, right = loops[i]
        assert P[i, n] == pairing_pushoff(rs, left, right) == -pairing_pushoff(rs, right, D)
        for j in range(n):
            x = loops[j][0]
            assert pairing_pushoff(rs, x, left) + pairing_pushoff(rs, x, right) == P[j, n]
            assert P[i, j] == T[i, j] + P[i, n] - P[j, n]


@given(codes(min_n=1), st.data())
def test_start_point_free(c, data):
    rs = build_rotation_system(c)
    a, b = data.draw(st.permutations(c.labels()))[:2] if c.n > 1 else (c.labels()[0],) * 2
    u = primitive_loops(c, a)[0]
    v = primitive_loops(c, b)[1]
    k = data.draw(st.integers(0, 10))
    ur = LoopWalk(u.arcs[k % max(len(u.arcs), 1):] + u.arcs[:k % max(len(u.arcs), 1)])
    assert pairing_pushoff(rs, ur, v) == pairing_pushoff(rs, u, v)


@given(codes(min_n=1), st.integers(0, 20))
def test_basepoint_free_table(c, k):
    labels = c.labels()
    assert np.array_equal(pairing_table(rotate(c, k), labels).P, pairing_table(c, labels).P)


@given(codes(max_n=7))
def test_planar_iff_zero_table(c):
    assert is_planar(c) == (not pairing_table(c).P.any())
