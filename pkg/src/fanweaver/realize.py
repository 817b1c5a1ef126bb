"""Realizing a sphere triangulation as a non-singular complete fan.

The pipeline reduces the input step by step: delete a degree-3 vertex when
one exists, else a degree-4 vertex, else consult the atlas of minimum-
degree-5 spheres, else collapse a degree-5 ring, else fall back to a
bounded backtracking search.  The 4-vertex base case carries the standard
projective-space fan e1, e2, e3, -(e1+e2+e3).  The recorded reduction log is
then replayed forward with the vector rules of the growth operations, which
preserve non-singularity and completeness, and the resulting fan (on the
original labeling, exactly) is verified before being returned.

Whenever p(3) + p(4) + 18 >= m the reduction provably reaches a base case
without the search, so realization cannot fail there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExhausted,
    CertificateInvalid,
    RealizationFailed,
    ReplayMismatch,
)
from .fans import FanAssignment, VerificationReport, det3, is_complete, verify
from .moves import (
    apply_ck,
    apply_i,
    apply_ii,
    apply_inverse_ck,
    apply_inverse_i,
    apply_inverse_ii,
    find_ck_reducible,
    find_inverse_i,
)
from .spheres import Triangulation, find_isomorphism

__all__ = ["SearchConfig", "RealizationResult", "realize", "replay", "search_assignment", "cp3_fan"]


@dataclass(frozen=True)
class SearchConfig:
    coordinate_bound: int = 3
    node_budget: int = 10_000_000
    seed: int = 0


@dataclass(frozen=True)
class RealizationResult:
    fan: FanAssignment
    log: tuple  # forward-replayable OpRecords, base to input
    base: str  # "BASE-CP3" | "ATLAS(<label>)" | "SEARCH"
    report: VerificationReport


def cp3_fan(K):
    """The projective-space fan on a 4-vertex sphere.

    The first stored face receives e1, e2, e3 and the remaining vertex
    -(e1+e2+e3); with the stored coherent orientation every determinant
    is then +1.
    """
    if K.m != 4:
        raise ValueError("base fan requires the 4-vertex sphere")
    a, b, c = K.faces[0]
    d = next(v for v in range(4) if v not in (a, b, c))
    vecs = [None] * 4
    vecs[a] = (1, 0, 0)
    vecs[b] = (0, 1, 0)
    vecs[c] = (0, 0, 1)
    vecs[d] = (-1, -1, -1)
    return FanAssignment(K, tuple(vecs))


def _mirror_fix(fa):
    """Flip one coordinate axis when a transferred fan came out mirrored."""
    dets = [det3(fa.vectors[a], fa.vectors[b], fa.vectors[c]) for a, b, c in fa.K.faces]
    if all(d == 1 for d in dets):
        return fa
    if all(d == -1 for d in dets):
        return FanAssignment(fa.K, tuple((-x, y, z) for x, y, z in fa.vectors))
    raise CertificateInvalid("transferred certificate has mixed determinant signs")


def _transfer(entry_fan, K):
    """Move a certificate onto an isomorphic triangulation K."""
    iso = find_isomorphism(entry_fan.K, K)
    if iso is None:
        raise CertificateInvalid("certificate complex is not isomorphic to target")
    vecs = [None] * K.m
    for v in range(K.m):
        vecs[iso[v]] = entry_fan.vectors[v]
    return _mirror_fix(FanAssignment(K, tuple(vecs)))


def replay(base_fan, log):
    """Fold a forward operation log over a base fan."""
    fa = base_fan
    for rec in log:
        if rec.kind == "i":
            fa, _ = apply_i(fa, rec.face, _new_ids=rec.new_vertices)
        elif rec.kind == "ii":
            fa, _ = apply_ii(fa, rec.edge, flanks=rec.flanks, _new_ids=rec.new_vertices)
        elif rec.kind == "ck":
            fa, _ = apply_ck(fa, rec.center, ring=rec.ring, _new_ids=rec.new_vertices)
        else:
            raise ReplayMismatch(f"unknown record kind {rec.kind!r}")
    return fa


def realize(K, cfg=None, atlas=None, use_atlas=True):
    """Reduce, pick a base fan, replay forward, verify; see module docstring.

    `atlas` may inject a preloaded catalogue (any object with a `lookup`
    method returning entries with `.label` and `.fan()`); by default the
    built-in one is loaded lazily.  Raises RealizationFailed when the
    reduction gets stuck and the search finds nothing, and surfaces
    BothDiagonalsPresent untouched should it ever occur.
    """
    if not isinstance(K, Triangulation):
        raise TypeError("realize expects a validated Triangulation")
    cfg = cfg or SearchConfig()
    cur = K
    reductions = []
    base_fan = None
    base = None
    while base_fan is None:
        if cur.m == 4:
            base_fan = cp3_fan(cur)
            base = "BASE-CP3"
            break
        v = find_inverse_i(cur)
        if v is not None:
            cur, rec = apply_inverse_i(cur, v)
            reductions.append(rec)
            continue
        v4 = next((u for u in range(cur.m) if cur.degrees[u] == 4), None)
        if v4 is not None:
            cur, rec = apply_inverse_ii(cur, v4)  # may raise BothDiagonalsPresent
            reductions.append(rec)
            continue
        if use_atlas:
            entry = _atlas_lookup(cur, atlas)
            if entry is not None:
                base_fan = _transfer(entry.fan(), cur)
                base = f"ATLAS({entry.label})"
                break
        hit = find_ck_reducible(cur)
        if hit is not None:
            cur, rec = apply_inverse_ck(cur, hit[0])
            reductions.append(rec)
            continue
        try:
            found = search_assignment(cur, cfg)
        except BudgetExhausted as exc:
            raise RealizationFailed(
                f"search budget exhausted on an irreducible {cur.m}-vertex sphere",
                stuck=cur,
                log=list(reversed(reductions)),
            ) from exc
        if found is None:
            raise RealizationFailed(
                f"no assignment within coordinate bound {cfg.coordinate_bound} "
                f"for an irreducible {cur.m}-vertex sphere",
                stuck=cur,
                log=list(reversed(reductions)),
            )
        base_fan = found
        base = "SEARCH"
    log = tuple(reversed(reductions))
    fan = replay(base_fan, log)
    if fan.K.faces != K.faces:
        raise ReplayMismatch("forward replay did not rebuild the input labeling")
    report = verify(fan, seed=cfg.seed)
    if not (report.nonsingular and report.complete):
        raise RealizationFailed(
            "replayed fan failed verification (internal error)", stuck=K, log=list(log)
        )
    return RealizationResult(fan, log, base, report)


def _atlas_lookup(K, atlas):
    if atlas is None:
        from . import atlas as atlas_mod

        try:
            atlas = atlas_mod.load_atlas()
        except FileNotFoundError:
            return None
    return atlas.lookup(K)


# -- fallback search ------------------------------------------------------------------


def search_assignment(K, cfg=None):
    """Bounded backtracking search for a verifying vector assignment.

    Vertices are assigned in a face-connected order seeded by the first
    stored face at e1, e2, e3 (any realizable assignment can be moved to
    this frame by a lattice automorphism, so the seeding loses nothing).
    Each later vertex closes at least one face with two assigned corners,
    and its candidates are the vectors within the coordinate bound that
    give determinant +1 on every closed face.  Complete assignments are
    kept only if the covering-degree probe passes.

    Returns the first solution in lexicographic candidate order, None when
    the bounded space holds none, and raises BudgetExhausted when the node
    budget runs out (which decides nothing).
    """
    cfg = cfg or SearchConfig()
    B = cfg.coordinate_bound
    m = K.m
    a, b, c = K.faces[0]

    # deterministic fill order: most-constrained next, ties by index
    order = [a, b, c]
    placed = set(order)
    while len(order) < m:
        best_v, best_n = None, -1
        for v in range(m):
            if v in placed:
                continue
            n = sum(1 for u in K.succ[v] if u in placed and K.apex(u, v) in placed)
            if n > best_n:
                best_v, best_n = v, n
        order.append(best_v)
        placed.add(best_v)

    # for each vertex, the faces it closes: (u, w) with face (u, v, w)
    pos = {v: i for i, v in enumerate(order)}
    closing = {v: [] for v in order}
    for (fa, fb, fc) in K.faces:
        last = max((fa, fb, fc), key=lambda t: pos[t])
        if last == fa:
            u, w = fc, fb
        elif last == fb:
            u, w = fa, fc
        else:
            u, w = fb, fa
        closing[last].append((u, w))

    span = range(-B, B + 1)
    candidates_all = [(x, y, z) for x in span for y in span for z in span]
    vecs = [None] * m
    vecs[a], vecs[b], vecs[c] = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    budget = cfg.node_budget

    def cands(v):
        out = []
        cons = closing[v]
        for p in candidates_all:
            ok = True
            for u, w in cons:
                # oriented face is (u, v, w): det(vec_u, p, vec_w) must be +1
                if det3(vecs[u], p, vecs[w]) != 1:
                    ok = False
                    break
            if ok:
                out.append(p)
        return out

    def dfs(i):
        nonlocal budget
        if i == m:
            fa_try = FanAssignment(K, tuple(vecs))
            complete, _, _ = is_complete(fa_try, seed=cfg.seed)
            return fa_try if complete else None
        v = order[i]
        for p in cands(v):
            budget -= 1
            if budget < 0:
                raise BudgetExhausted(f"node budget {cfg.node_budget} exhausted")
            vecs[v] = p
            hit = dfs(i + 1)
            if hit is not None:
                return hit
            vecs[v] = None
        return None

    if det3(vecs[a], vecs[b], vecs[c]) != 1:
        raise AssertionError("seed face must be positively oriented")
    return dfs(3)
