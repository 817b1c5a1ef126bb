"""Core triangulation model: validation, canonical forms, flips."""

import random
from itertools import combinations, permutations

import pytest

from fanweaver.errors import FlipBlocked, NoSuchEdge, NotClosed, NotSimplicial, NotSphere
from fanweaver.spheres import (
    canonical_form,
    degree_profile,
    find_isomorphism,
    flip,
    graphs_isomorphic,
    high_degree_subcomplex,
    icosahedron,
    isomorphic,
    octahedron,
    relabel,
    stacked_sphere,
    tetrahedron,
    triangulation_from_code,
    validate,
)

TETRA_FACES = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

# the complete 7-vertex triangulation of the torus: faces {i,i+1,i+3} and
# {i,i+2,i+3} mod 7, every pair of vertices adjacent, Euler characteristic 0
K7_TORUS = [((i, (i + 1) % 7, (i + 3) % 7)) for i in range(7)] + [
    ((i, (i + 2) % 7, (i + 3) % 7)) for i in range(7)
]


def test_tetrahedron():
    K = validate(TETRA_FACES)
    assert K.m == 4 and K.edge_count == 6 and K.face_count == 4
    assert K.degrees == (3, 3, 3, 3)


def test_icosahedron_explicit():
    K = icosahedron()
    assert K.m == 12
    assert len(K.edges()) == 30 and K.face_count == 20
    assert set(K.degrees) == {5}


def test_torus_rejected():
    with pytest.raises(NotSphere):
        validate(K7_TORUS)


def test_not_closed():
    with pytest.raises(NotClosed):
        validate(TETRA_FACES[:3])


def test_repeated_vertex():
    with pytest.raises(NotSimplicial):
        validate([(0, 0, 1), (0, 1, 2), (0, 2, 1)])


def test_duplicate_face():
    with pytest.raises(NotSimplicial):
        validate(TETRA_FACES + [(2, 1, 3)])


def test_disconnected_rejected():
    far = [(a + 4, b + 4, c + 4) for a, b, c in TETRA_FACES]
    with pytest.raises(NotSphere):
        validate(TETRA_FACES + far)


def test_vertex_gap_rejected():
    with pytest.raises(NotSphere):
        validate([(0, 1, 2), (0, 1, 4), (0, 2, 4), (1, 2, 4)])


def test_orientation_is_coherent(small_spheres):
    for K in small_spheres[9][:10]:
        used = {}
        for a, b, c in K.faces:
            for e in ((a, b), (b, c), (c, a)):
                assert e not in used
                used[e] = True
        for u, v in list(used)[:50]:
            assert (v, u) in used


def test_degree_profile_examples(atlas):
    assert degree_profile(tetrahedron()).counts == ((3, 4),)
    assert degree_profile(icosahedron()).counts == ((5, 12),)
    big = atlas.by_label("5^16 8^2").K
    prof = degree_profile(big)
    assert prof.count(5) == 16 and prof.count(8) == 2
    assert sum((6 - d) * c for d, c in prof) == 12


def test_canonical_relabeling_invariance(small_spheres):
    rng = random.Random(42)
    samples = [tetrahedron(), octahedron(), icosahedron(), stacked_sphere(8)]
    samples += small_spheres[9][:2]
    for K in samples:
        code = canonical_form(K)
        for _ in range(100):
            perm = list(range(K.m))
            rng.shuffle(perm)
            assert canonical_form(relabel(K, perm)) == code


def test_canonical_mirror_invariance(small_spheres):
    for K in [icosahedron()] + small_spheres[8]:
        mirror = validate([(a, c, b) for a, b, c in K.faces])
        assert canonical_form(mirror) == canonical_form(K)


def test_two_six_vertex_classes():
    octa = octahedron()
    stack = stacked_sphere(6)
    assert not isomorphic(octa, stack)
    assert canonical_form(octa) != canonical_form(stack)


def brute_force_m6_classes():
    """Independent oracle: all 6-vertex sphere triangulations by exhausting
    8-subsets of the 20 possible faces, deduplicated by label permutation."""
    triples = list(combinations(range(6), 3))
    classes = []  # list of frozensets of frozensets
    for subset in combinations(triples, 8):
        edge_count = {}
        for f in subset:
            for e in combinations(f, 2):
                edge_count[e] = edge_count.get(e, 0) + 1
        if len(edge_count) != 12 or any(c != 2 for c in edge_count.values()):
            continue
        try:
            validate(subset)
        except Exception:
            continue
        fs = frozenset(frozenset(f) for f in subset)
        if any(
            any(
                frozenset(frozenset(perm[x] for x in f) for f in fs) == rep
                for perm in permutations(range(6))
            )
            for rep in classes
        ):
            continue
        classes.append(fs)
    return classes


def test_six_vertex_census_oracle(small_spheres):
    oracle = brute_force_m6_classes()
    assert len(oracle) == 2
    enumerated = small_spheres[6]
    assert len(enumerated) == 2
    oracle_reps = [validate([tuple(f) for f in fs]) for fs in oracle]
    codes_oracle = {canonical_form(K) for K in oracle_reps}
    codes_enum = {canonical_form(K) for K in enumerated}
    assert codes_oracle == codes_enum


def test_flip_involution():
    o = octahedron()
    K2 = flip(o, o.edges()[0])
    new_edge = next(iter(set(K2.edges()) - set(o.edges())))
    assert isomorphic(flip(K2, new_edge), o)


def test_flip_preserves_validity_and_m(small_spheres):
    for K in small_spheres[8]:
        for e in K.edges():
            try:
                K2 = flip(K, e)
            except FlipBlocked:
                continue
            assert K2.m == K.m
            degree_profile(K2)  # asserts the Euler identity internally


def test_flip_blocked_on_tetrahedron():
    t = tetrahedron()
    for e in t.edges():
        with pytest.raises(FlipBlocked):
            flip(t, e)


def test_flip_missing_edge():
    with pytest.raises(NoSuchEdge):
        flip(octahedron(), (0, 1))  # antipodal, not adjacent


def test_flip_octahedron_gives_other_class(small_spheres):
    o = octahedron()
    K2 = flip(o, o.edges()[0])
    others = [K for K in small_spheres[6] if not isomorphic(K, o)]
    assert len(others) == 1
    assert isomorphic(K2, others[0])


def test_high_degree_subcomplex(atlas):
    assert high_degree_subcomplex(icosahedron()) == (frozenset(), frozenset())
    e = atlas.by_label("5^12 6^6 (ii)")
    verts, edges = high_degree_subcomplex(e.K)
    assert len(verts) == 6 and len(edges) == 6
    deg = {v: 0 for v in verts}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    assert set(deg.values()) == {2}  # a single 6-cycle


def test_graphs_isomorphic():
    c6 = (frozenset(range(6)), frozenset((i, (i + 1) % 6) for i in range(6)))
    c6b = (
        frozenset(range(10, 16)),
        frozenset((10 + i, 10 + (i + 1) % 6) for i in range(6)),
    )
    two_triangles = (
        frozenset(range(6)),
        frozenset([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
    )
    assert graphs_isomorphic(c6, c6b)
    assert not graphs_isomorphic(c6, two_triangles)


def test_code_decode_roundtrip(small_spheres):
    for K in small_spheres[8]:
        code = canonical_form(K)
        K2 = triangulation_from_code(code)
        assert canonical_form(K2) == code


def test_find_isomorphism_transfers_faces():
    K = icosahedron()
    perm = list(range(12))
    random.Random(3).shuffle(perm)
    K2 = relabel(K, perm)
    iso = find_isomorphism(K, K2)
    mapped = {frozenset((iso[a], iso[b], iso[c])) for a, b, c in K.faces}
    assert mapped == {frozenset(f) for f in K2.faces}
