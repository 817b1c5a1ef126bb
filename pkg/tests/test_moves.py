"""Growth operations, their inverses, and replayable records."""

import random

import pytest

from fanweaver.errors import (
    NoSuchEdge,
    NoSuchFace,
    NotUnimodular,
    PatternMismatch,
    WrongDegree,
)
from fanweaver.fans import FanAssignment, verify
from fanweaver.moves import (
    apply_ck,
    apply_i,
    apply_ii,
    apply_inverse_ck,
    apply_inverse_i,
    apply_inverse_ii,
    ck_reducible_at,
    find_ck_reducible,
    find_inverse_i,
    format_script,
    parse_script,
    star_ring,
)
from fanweaver.spheres import (
    canonical_form,
    degree_profile,
    icosahedron,
    isomorphic,
    octahedron,
    stacked_sphere,
    tetrahedron,
    validate,
)


def cp3():
    return FanAssignment(
        tetrahedron(), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    )


def test_apply_i_vectors_and_verify():
    fa, rec = apply_i(cp3(), (0, 1, 2))
    assert fa.vectors[rec.new_vertices[0]] == (1, 1, 1)
    rep = verify(fa)
    assert rep.nonsingular and rep.complete


def test_apply_i_combinatorial():
    K, rec = apply_i(tetrahedron(), (1, 2, 3))
    assert K.m == 5
    assert sorted(K.degrees) == [3, 3, 4, 4, 4]
    assert isomorphic(K, stacked_sphere(5))


def test_apply_i_twice_verifies():
    fa, rec = apply_i(cp3(), (0, 1, 2))
    fa2, _ = apply_i(fa, (0, 1, rec.new_vertices[0]))
    rep = verify(fa2)
    assert rep.nonsingular and rep.complete and fa2.K.m == 6


def test_apply_i_errors():
    with pytest.raises(NoSuchFace):
        apply_i(tetrahedron(), (0, 1, 9))
    bad = FanAssignment(tetrahedron(), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1)))
    with pytest.raises(NotUnimodular):
        apply_i(bad, (0, 2, 3))


def test_apply_ii_vectors_and_verify():
    fa, rec = apply_ii(cp3(), (0, 1))
    assert fa.vectors[rec.new_vertices[0]] == (1, 1, 0)
    rep = verify(fa)
    assert rep.nonsingular and rep.complete
    assert fa.K.degrees[rec.new_vertices[0]] == 4


def test_apply_ii_octahedron():
    fo = FanAssignment(
        octahedron(), ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
    )
    fa, _ = apply_ii(fo, fo.K.edges()[0])
    assert fa.K.m == 7
    rep = verify(fa)
    assert rep.nonsingular and rep.complete


def test_apply_ii_flank_mismatch():
    K = tetrahedron()
    with pytest.raises(NoSuchEdge):
        apply_ii(K, (0, 1), flanks=(3, 2))  # swapped


def test_apply_ck_cp3():
    fa, rec = apply_ck(cp3(), 0)
    assert fa.K.m == 7
    new_vecs = {fa.vectors[w] for w in rec.new_vertices}
    assert new_vecs == {(1, 1, 0), (1, 0, 1), (0, -1, -1)}
    rep = verify(fa)
    assert rep.nonsingular and rep.complete


def test_apply_ck_euler_bookkeeping():
    K = icosahedron()
    K2, rec = apply_ck(K, 4)
    k = len(rec.ring)
    assert k == 5
    assert K2.m - K.m == k
    assert len(K2.edges()) - len(K.edges()) == 3 * k
    assert K2.face_count - K.face_count == 2 * k
    assert K2.degrees[4] == k
    assert all(K2.degrees[w] == 5 for w in rec.new_vertices)


def test_apply_ck_small_k_allowed():
    K, _ = apply_ck(tetrahedron(), 0)  # k = 3
    assert K.m == 7
    K2, _ = apply_ck(octahedron(), 0)  # k = 4
    assert K2.m == 10


def test_icosahedron_from_ck_on_cp3_chain():
    # growing the icosahedron by operations keeps fans verifiable
    fa, _ = apply_ck(cp3(), 0)
    fa2, _ = apply_ck(fa, 1)
    rep = verify(fa2)
    assert rep.nonsingular and rep.complete


def test_find_inverse_i():
    assert find_inverse_i(stacked_sphere(5)) is not None
    assert find_inverse_i(icosahedron()) is None
    assert find_inverse_i(tetrahedron()) is None  # m = 4 excluded


def test_find_inverse_i_smallest():
    K, _ = apply_i(tetrahedron(), (1, 2, 3))  # creates vertex 4 of degree 3
    v = find_inverse_i(K)
    assert v == min(u for u in range(K.m) if K.degrees[u] == 3)


def test_inverse_i_round_trip():
    K5 = stacked_sphere(5)
    K4, rec = apply_inverse_i(K5, find_inverse_i(K5))
    assert isomorphic(K4, tetrahedron())
    K5b, _ = apply_i(K4, rec.face, _new_ids=rec.new_vertices)
    assert K5b.faces == K5.faces


def test_inverse_i_six_to_five():
    K6 = stacked_sphere(6)
    K5, _ = apply_inverse_i(K6, find_inverse_i(K6))
    assert isomorphic(K5, stacked_sphere(5))


def test_inverse_i_errors():
    with pytest.raises(WrongDegree):
        apply_inverse_i(tetrahedron(), 0)
    with pytest.raises(WrongDegree):
        apply_inverse_i(octahedron(), 0)


def test_inverse_i_degree_bound(small_spheres):
    """After deleting a degree-3 vertex, p(3)+p(4) drops by at most one."""
    rng = random.Random(11)
    cases = []
    for m in (7, 8, 9):
        for K in small_spheres[m]:
            for v in range(K.m):
                if K.degrees[v] == 3:
                    cases.append((K, v))
    assert len(cases) > 100
    for K, v in rng.sample(cases, min(1000, len(cases))):
        before = degree_profile(K)
        K2, _ = apply_inverse_i(K, v)
        after = degree_profile(K2)
        assert after.count(3) + after.count(4) >= before.count(3) + before.count(4) - 1


def test_inverse_ii_octahedron():
    K5, rec = apply_inverse_ii(octahedron(), 0)
    assert K5.m == 5
    assert isomorphic(K5, stacked_sphere(5))
    K6b, _ = apply_ii(K5, rec.edge, flanks=rec.flanks, _new_ids=rec.new_vertices)
    assert K6b.faces == octahedron().faces


def test_inverse_ii_requires_no_degree3():
    K = stacked_sphere(5)  # has degree-3 and degree-4 vertices
    v4 = next(v for v in range(5) if K.degrees[v] == 4)
    with pytest.raises(WrongDegree):
        apply_inverse_ii(K, v4)


def _one_diagonal_present_sphere():
    """11-vertex sphere, minimum degree 4, with a degree-4 vertex 0 whose
    link (1,2,3,4) already carries the diagonal {1,3}: the separating
    triangle {1,0,3} bounds two discs, each filled with three interior
    vertices so that no vertex drops to degree 3."""
    star = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1)]
    q_disc = [(2, 3, 5), (3, 1, 6), (1, 2, 7), (5, 3, 6), (6, 1, 7), (7, 2, 5), (5, 6, 7)]
    s_disc = [(4, 1, 8), (1, 3, 9), (3, 4, 10), (8, 1, 9), (9, 3, 10), (10, 4, 8), (8, 9, 10)]
    return validate(star + q_disc + s_disc)


def test_inverse_ii_avoids_present_diagonal():
    K = _one_diagonal_present_sphere()
    assert K.degrees[0] == 4 and min(K.degrees) == 4
    p, q, r, s = star_ring(K, 0)
    assert {p, r} == {1, 3} and K.has_edge(1, 3)
    assert {q, s} == {2, 4} and not K.has_edge(2, 4)
    K2, rec = apply_inverse_ii(K, 0)
    # vertex 0 removed, labels shift down: the free diagonal {2,4} -> {1,3}
    assert set(rec.edge) == {1, 3}
    degree_profile(K2)


def test_find_ck_reducible_icosahedron():
    K = icosahedron()
    hit = find_ck_reducible(K)
    assert hit == (0, 5)
    for v in range(K.m):
        assert ck_reducible_at(K, v) == 5


def test_find_ck_reducible_needs_min_degree5():
    assert find_ck_reducible(stacked_sphere(8)) is None


def test_ck_star_on_16_8_2(atlas):
    e = atlas.by_label("5^16 8^2")
    assert ck_reducible_at(e.K, e.star_vertex) == 8
    v, k = find_ck_reducible(e.K)
    assert k == 8


def test_inverse_ck_icosahedron(small_spheres):
    K7, rec = apply_inverse_ck(icosahedron(), 0)
    assert K7.m == 7
    assert any(isomorphic(K7, K) for K in small_spheres[7])
    K12, _ = apply_ck(K7, rec.center, ring=rec.ring, _new_ids=rec.new_vertices)
    assert K12.faces == icosahedron().faces


def test_inverse_ck_16_8_2(atlas):
    e = atlas.by_label("5^16 8^2")
    K10, _ = apply_inverse_ck(e.K, e.star_vertex)
    assert K10.m == 10


def test_inverse_ck_pattern_mismatch():
    with pytest.raises(PatternMismatch):
        apply_inverse_ck(stacked_sphere(9), 0)


def test_forward_round_trips_canonical():
    rng = random.Random(4)
    K = icosahedron()
    code = canonical_form(K)
    # i
    K2, rec = apply_i(K, K.faces[rng.randrange(len(K.faces))])
    v3 = rec.new_vertices[0]
    K3, _ = apply_inverse_i(K2, v3)
    assert canonical_form(K3) == code
    # ck
    K2, rec = apply_ck(K, 7)
    K3, _ = apply_inverse_ck(K2, 7)
    assert canonical_form(K3) == code


def test_script_round_trip():
    fa = cp3()
    recs = []
    fa, r1 = apply_i(fa, (0, 1, 2))
    recs.append(r1)
    fa, r2 = apply_ii(fa, (0, 1))
    recs.append(r2)
    fa, r3 = apply_ck(fa, 2)
    recs.append(r3)
    text = format_script(recs)
    assert parse_script(text) == recs
    assert len(text.splitlines()) == 3
