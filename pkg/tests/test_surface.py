import pytest
from hypothesis import given
import hypothesis.strategies as st

from doodlekit.gauss import normalize, parse, rotate, virtualize
from doodlekit.surface import (
    boundary_components,
    build_rotation_system,
    faces,
    is_planar,
    minimal_genus,
)

from conftest import codes


def test_empty_code():
    rs = build_rotation_system(parse(""))
    assert rs.n_vertices == 0 and rs.d_walk() == []
    s = minimal_genus(parse(""))
    assert (s.n_crossings, s.boundary_components, s.genus) == (0, 2, 0)


def test_monogon_code():
    c = parse("a a | a=+1")
    rs = build_rotation_system(c)
    assert (rs.n_vertices, rs.n_edges, len(rs.d_walk())) == (1, 2, 2)
    assert boundary_components(rs) == 3
    assert minimal_genus(c).genus == 0
    assert is_planar(c)


def test_two_crossing_torus_code():
    c = parse("a b a b | a=+1 b=+1")
    rs = build_rotation_system(c)
    assert (rs.n_vertices, rs.n_edges) == (2, 4)
    assert rs.d_walk() == [0, 1, 2, 3]
    s = minimal_genus(c)
    assert (s.boundary_components, s.genus) == (2, 1)
    assert not is_planar(c)


def test_kishino_not_planar(kishino):
    assert not is_planar(kishino)


@given(codes(max_n=8))
def test_rotation_system_structure(c):
    rs = build_rotation_system(c)
    H = 2 * len(c)
    # succ is a permutation made of 4-cycles, one per vertex
    assert sorted(rs.succ) == list(range(H))
    for a, cyc in rs.rotation.items():
        assert len(set(cyc)) == 4
        assert all(rs.vertex_of[h] == a for h in cyc)
    assert all(rs.partner(rs.partner(h)) == h and rs.partner(h) != h for h in range(H))
    assert rs.d_walk() == list(range(len(c)))


@given(codes(max_n=8))
def test_faces_partition_and_euler(c):
    rs = build_rotation_system(c)
    sides = sorted(h for f in faces(rs) for h in f)
    assert sides == list(range(2 * len(c)))
    s = minimal_genus(c)
    assert s.genus >= 0
    if c.n:
        assert s.n_crossings - 2 * s.n_crossings + s.boundary_components == 2 - 2 * s.genus


@given(codes(), st.integers(0, 20))
def test_genus_invariant_under_rotation_and_normalize(c, k):
    g = minimal_genus(c).genus
    assert minimal_genus(rotate(c, k)).genus == g
    assert minimal_genus(normalize(c)).genus == g


@given(codes(min_n=1))
def test_flipping_a_sign_reverses_its_rotation(c):
    a = c.labels()[0]
    cyc = build_rotation_system(c).rotation[a]
    flipped = build_rotation_system(virtualize(c, a)).rotation[a]
    rev = tuple(reversed(cyc))
    assert flipped in {rev[i:] + rev[:i] for i in range(4)}


def test_parity_guard():
    # genus (m + 2 - |boundary|) / 2 is always integral for valid codes
    for text in ["a a | +1", "a b a b | +1 -1", "a b c a b c | +1 +1 +1"]:
        minimal_genus(parse(text))
