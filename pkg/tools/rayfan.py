"""Recover complete unimodular fan structures from a bare ray list.

Used by the atlas rebuild tool.  A complete fan on the given rays has
exactly one maximal cone containing a generic probe direction, and that
cone shows up among the probe's start candidates (det > 0, probe inside,
no other ray inside the closed cone).  Backtracking wall propagation from
every start candidate therefore enumerates every complete unimodular fan
structure the rays carry: the cone across a wall (i, j) must be (j, i, l)
with det(v_j, v_i, v_l) > 0 and no other ray inside, locally ambiguous
walls are branched (most-constrained first), and each completed cone set
is kept iff it validates as a sphere complex and verifies non-singular and
complete.
"""

from __future__ import annotations

from fanweaver.fans import FanAssignment, cone_contains, det3, verify
from fanweaver.spheres import validate


def _start_candidates(rays, probe):
    """Oriented det>0 triples containing the probe with no ray inside."""
    n = len(rays)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                tri = None
                if det3(rays[i], rays[j], rays[k]) > 0:
                    tri = (i, j, k)
                elif det3(rays[i], rays[k], rays[j]) > 0:
                    tri = (i, k, j)
                if tri is None:
                    continue
                u, v, w = (rays[t] for t in tri)
                if not cone_contains(u, v, w, probe):
                    continue
                if any(
                    r not in tri and cone_contains(u, v, w, rays[r])
                    for r in range(n)
                ):
                    continue
                out.append(tri)
    return out


class _Assembler:
    def __init__(self, rays, min_degree=None):
        self.rays = rays
        self.n = len(rays)
        self.target = 2 * self.n - 4
        self.min_degree = min_degree
        self._wall_cache = {}
        self.found = {}
        self.nodes = 0

    def wall_candidates(self, b, a):
        """Apexes l such that cone (b, a, l) could be a fan cone."""
        key = (b, a)
        hit = self._wall_cache.get(key)
        if hit is not None:
            return hit
        rays = self.rays
        u, v = rays[b], rays[a]
        picks = []
        for l in range(self.n):
            if l in (a, b) or det3(u, v, rays[l]) <= 0:
                continue
            w = rays[l]
            if any(
                r not in (a, b, l) and cone_contains(u, v, w, rays[r])
                for r in range(self.n)
            ):
                continue
            picks.append(l)
        self._wall_cache[key] = picks
        return picks

    def _feasible(self, cones, walls, a, b):
        out = []
        for l in self.wall_candidates(b, a):
            if frozenset((b, a, l)) in cones:
                continue
            if (a, l) in walls or (l, b) in walls:
                continue
            out.append(l)
        return out

    def run(self, start):
        i, j, k = start
        cone_count = {x: 1 for x in start}
        open_count = {x: 2 for x in start}
        self._rec(
            {frozenset(start): start},
            {(i, j): k, (j, k): i, (k, i): j},
            cone_count,
            open_count,
        )

    def _add_cone(self, cones, walls, cone_count, open_count, cone):
        """Extended state after adding `cone`, or None when the min-degree
        prune kills it (a closed vertex star below the degree floor)."""
        b, a, l = cone
        cones2 = dict(cones)
        cones2[frozenset(cone)] = cone
        walls2 = dict(walls)
        cc = dict(cone_count)
        oc = dict(open_count)
        for x in cone:
            cc[x] = cc.get(x, 0) + 1
        for (x, y), apex in (((b, a), l), ((a, l), b), ((l, b), a)):
            walls2[(x, y)] = apex
            delta = -1 if (y, x) in walls2 else 1
            oc[x] = oc.get(x, 0) + delta
            oc[y] = oc.get(y, 0) + delta
        if self.min_degree is not None:
            for x in cone:
                if oc[x] == 0 and cc[x] < self.min_degree:
                    return None
        return cones2, walls2, cc, oc

    def _rec(self, cones, walls, cone_count, open_count):
        self.nodes += 1
        open_walls = [(a, b) for (a, b) in walls if (b, a) not in walls]
        if not open_walls:
            if len(cones) != self.target:
                return
            faces = tuple(sorted(cones.values()))
            if faces in self.found:
                return
            try:
                fa = FanAssignment(validate(list(faces)), tuple(self.rays))
            except Exception:
                return
            rep = verify(fa)
            if rep.nonsingular and rep.complete:
                self.found[fa.K.faces] = fa
            return
        if len(cones) == self.target:
            return
        best = None
        for (a, b) in open_walls:
            feas = self._feasible(cones, walls, a, b)
            if not feas:
                return
            if best is None or len(feas) < len(best[2]):
                best = (a, b, feas)
                if len(feas) == 1:
                    break
        a, b, feas = best
        for l in feas:
            nxt = self._add_cone(cones, walls, cone_count, open_count, (b, a, l))
            if nxt is not None:
                self._rec(*nxt)


def assemble_structures(rays, probe=(911, 541, 337), min_degree=None):
    """Every complete unimodular fan structure on the rays.

    Returns a dict faces -> verified FanAssignment.  Exhaustive: any fan on
    the rays has exactly one maximal cone containing the probe, and that
    cone is among the probe's start candidates.  With `min_degree` set,
    branches in which some closed vertex star falls below the floor are
    pruned, which restricts the output to complexes of at least that
    minimum degree (and makes 18-ray inputs tractable).
    """
    rays = [tuple(int(x) for x in v) for v in rays]
    asm = _Assembler(rays, min_degree=min_degree)
    for start in _start_candidates(rays, probe):
        asm.run(start)
    return asm.found


def min_degree5_fans(rays, probe=(911, 541, 337)):
    """The minimum-degree-5 fan structures carried by the rays."""
    return {
        faces: fa
        for faces, fa in assemble_structures(rays, probe, min_degree=5).items()
        if min(fa.K.degrees) >= 5
    }
