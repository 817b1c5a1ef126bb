"""Reduction pipeline, replay exactness, and the fallback search."""

import pytest

from fanweaver.errors import BudgetExhausted
from fanweaver.fans import verify
from fanweaver.moves import apply_ck, apply_i
from fanweaver.realize import SearchConfig, cp3_fan, realize, replay, search_assignment
from fanweaver.spheres import (
    icosahedron,
    octahedron,
    stacked_sphere,
    tetrahedron,
)


def test_tetrahedron_base_case():
    r = realize(tetrahedron())
    assert r.base == "BASE-CP3"
    assert r.log == ()
    assert r.report.nonsingular and r.report.complete
    assert sorted(r.fan.vectors) == sorted(
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    )


def test_octahedron():
    r = realize(octahedron())
    assert r.base == "BASE-CP3"
    assert r.report.nonsingular and r.report.complete


def test_icosahedron_via_atlas():
    r = realize(icosahedron())
    assert r.base == "ATLAS(5^12)"
    assert r.log == ()
    assert r.report.complete


def test_icosahedron_without_atlas():
    r = realize(icosahedron(), use_atlas=False)
    assert r.base == "BASE-CP3"
    assert any(rec.kind == "ck" for rec in r.log)
    assert r.report.nonsingular and r.report.complete


def test_all_small_spheres(small_spheres):
    for m, Ks in small_spheres.items():
        for K in Ks:
            r = realize(K)
            assert r.base == "BASE-CP3"
            assert r.report.nonsingular and r.report.complete
            assert r.fan.K.faces == K.faces


def _reduce_to_base(K):
    """The same reduction realize performs, yielding its base fan."""
    from fanweaver.moves import (
        apply_inverse_ck,
        apply_inverse_i,
        apply_inverse_ii,
        find_ck_reducible,
        find_inverse_i,
    )

    cur = K
    while cur.m > 4:
        v = find_inverse_i(cur)
        if v is not None:
            cur, _ = apply_inverse_i(cur, v)
            continue
        v4 = next((u for u in range(cur.m) if cur.degrees[u] == 4), None)
        if v4 is not None:
            cur, _ = apply_inverse_ii(cur, v4)
            continue
        cur, _ = apply_inverse_ck(cur, find_ck_reducible(cur)[0])
    return cp3_fan(cur)


def test_replay_reproduces_fan(small_spheres):
    for K in small_spheres[9][:20]:
        r = realize(K)
        assert realize(K).fan == r.fan  # deterministic
        fan = replay(_reduce_to_base(K), r.log)
        assert fan == r.fan
        assert fan.K.faces == K.faces


def test_grown_spheres_reduce_back(atlas):
    K = atlas.by_label("5^14 7^2").K
    K2, _ = apply_i(K, K.faces[3])
    K3, _ = apply_ck(K2, 5)
    r = realize(K3)
    assert r.report.nonsingular and r.report.complete
    assert r.fan.K.faces == K3.faces


def test_search_tetrahedron_bound1():
    fa = search_assignment(tetrahedron(), SearchConfig(coordinate_bound=1))
    assert fa is not None
    assert verify(fa).complete
    assert max(abs(x) for v in fa.vectors for x in v) == 1


def test_search_octahedron_bound1():
    fa = search_assignment(octahedron(), SearchConfig(coordinate_bound=1))
    assert fa is not None
    assert verify(fa).complete


def test_search_budget_exhausted():
    with pytest.raises(BudgetExhausted):
        search_assignment(icosahedron(), SearchConfig(coordinate_bound=2, node_budget=5))


def test_search_16_vertex_type_bound2(atlas):
    K = atlas.by_label("5^12 6^4 (ii)").K
    fa = search_assignment(K, SearchConfig(coordinate_bound=2))
    assert fa is not None
    rep = verify(fa)
    assert rep.nonsingular and rep.complete
    assert max(abs(x) for v in fa.vectors for x in v) <= 2


def test_search_is_deterministic():
    a = search_assignment(octahedron(), SearchConfig(coordinate_bound=1))
    b = search_assignment(octahedron(), SearchConfig(coordinate_bound=1))
    assert a == b


def test_realize_rejects_raw_faces():
    with pytest.raises(TypeError):
        realize([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def test_stacked_spheres_fast():
    for m in (5, 8, 13, 20, 40):
        r = realize(stacked_sphere(m))
        assert r.report.nonsingular and r.report.complete
        assert len(r.log) == m - 4
