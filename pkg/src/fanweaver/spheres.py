"""Oriented simplicial 2-spheres.

A sphere triangulation is stored as a coherently oriented face list: every
directed edge (u, v) appears in exactly one face, and the two faces sharing
an undirected edge traverse it in opposite directions.  From the oriented
faces we derive, per vertex, the cyclic order of its neighbors (the rotation
system): for a face (u, v, w) the rotation at v sends u to w.  Face tracing
is the inverse operation: starting from a directed edge (u, v) the face to
its left is (u, v, rot_v(u)).

Canonical forms are breadth-first codes over the rotation system, minimized
over all starting directed edges and both senses of rotation, so mirror
images receive equal codes.  Two triangulations are isomorphic as simplicial
complexes iff their codes are equal (sphere triangulations are 3-connected
planar graphs, so graph isomorphism, embedding isomorphism up to reflection,
and complex isomorphism all coincide).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FlipBlocked, NoSuchEdge, NotClosed, NotSimplicial, NotSphere

__all__ = [
    "Triangulation",
    "DegreeProfile",
    "validate",
    "degree_profile",
    "canonical_form",
    "canonical_labeling",
    "isomorphic",
    "find_isomorphism",
    "high_degree_subcomplex",
    "graphs_isomorphic",
    "flip",
    "relabel",
    "triangulation_from_code",
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "stacked_sphere",
]


def _cyc_min(a, b, c):
    """Rotate an oriented triple so its smallest vertex comes first."""
    if a < b and a < c:
        return (a, b, c)
    if b < c:
        return (b, c, a)
    return (c, a, b)


class Triangulation:
    """A validated, coherently oriented sphere triangulation.

    Instances are immutable values; construct them through :func:`validate`.
    ``succ[v]`` maps each neighbor of ``v`` to the next one in the rotation
    at ``v``; ``pred`` is its inverse.
    """

    __slots__ = ("m", "faces", "succ", "pred", "degrees", "_code")

    def __init__(self, m, faces, succ, pred, degrees):
        self.m = m
        self.faces = faces
        self.succ = succ
        self.pred = pred
        self.degrees = degrees
        self._code = None

    @property
    def edge_count(self):
        return 3 * self.m - 6

    @property
    def face_count(self):
        return len(self.faces)

    def edges(self):
        """Undirected edges as sorted pairs, in sorted order."""
        out = []
        for v in range(self.m):
            for u in self.succ[v]:
                if u > v:
                    out.append((v, u))
        out.sort()
        return out

    def link(self, v):
        """Neighbors of v in rotation order, starting at the smallest one."""
        s = self.succ[v]
        start = min(s)
        cyc = [start]
        u = s[start]
        while u != start:
            cyc.append(u)
            u = s[u]
        return tuple(cyc)

    def has_edge(self, a, b):
        return b in self.succ[a]

    def apex(self, a, b):
        """Third vertex of the face to the left of the directed edge a->b."""
        return self.succ[b][a]

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return f"Triangulation(m={self.m}, faces={self.face_count})"


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex-degree census of a triangulation."""

    counts: tuple  # ((degree, count), ...) sorted by degree
    m: int

    def count(self, k):
        for d, c in self.counts:
            if d == k:
                return c
        return 0

    @property
    def min_degree(self):
        return self.counts[0][0]

    def label(self):
        """Compact exponent notation, e.g. '5^12 6^4'."""
        return " ".join(f"{d}^{c}" for d, c in self.counts)

    def __iter__(self):
        return iter(self.counts)


def validate(faces):
    """Build a :class:`Triangulation` from arbitrary face triples.

    Re-orients the input coherently (the first face keeps its given
    orientation).  Raises NotSimplicial, NotClosed, or NotSphere.
    """
    faces = [tuple(int(x) for x in f) for f in faces]
    for f in faces:
        if len(f) != 3 or len(set(f)) != 3:
            raise NotSimplicial(f"face {f} does not have 3 distinct vertices")
        if min(f) < 0:
            raise NotSimplicial(f"negative vertex id in face {f}")
    sets = set()
    for f in faces:
        key = frozenset(f)
        if key in sets:
            raise NotSimplicial(f"duplicate face {sorted(f)}")
        sets.add(key)
    if not faces:
        raise NotClosed("no faces")

    m = max(max(f) for f in faces) + 1
    used = set()
    for f in faces:
        used.update(f)
    if len(used) != m:
        raise NotSphere("vertex indices are not contiguous from 0")
    if m < 4:
        raise NotSphere(f"m={m} < 4")

    # undirected edge -> incident face indices
    edge_faces = {}
    for i, (a, b, c) in enumerate(faces):
        for u, v in ((a, b), (b, c), (c, a)):
            key = (u, v) if u < v else (v, u)
            edge_faces.setdefault(key, []).append(i)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise NotClosed(f"edge {e} lies in {len(fs)} faces")

    E = len(edge_faces)
    F = len(faces)
    if m - E + F != 2:
        raise NotSphere(f"Euler characteristic {m - E + F} != 2")

    # orient coherently by propagation over face adjacency
    oriented = [None] * F
    oriented[0] = _cyc_min(*faces[0])
    stack = [0]
    while stack:
        i = stack.pop()
        a, b, c = oriented[i]
        for u, v in ((a, b), (b, c), (c, a)):
            key = (u, v) if u < v else (v, u)
            f1, f2 = edge_faces[key]
            j = f2 if f1 == i else f1
            w = next(x for x in faces[j] if x != u and x != v)
            want = _cyc_min(v, u, w)
            if oriented[j] is None:
                oriented[j] = want
                stack.append(j)
            elif oriented[j] != want:
                raise NotSphere("complex is not coherently orientable")
    if any(f is None for f in oriented):
        raise NotSphere("face-adjacency graph is disconnected")

    # rotation maps; a collision here means a directed edge used twice
    succ = [dict() for _ in range(m)]
    for a, b, c in oriented:
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            if u in succ[v]:
                raise NotSphere(f"directed edge ({u},{v}) used twice")
            succ[v][u] = w
    pred = [dict() for _ in range(m)]
    for v in range(m):
        for u, w in succ[v].items():
            pred[v][w] = u

    # every link must be a single cycle
    degrees = []
    for v in range(m):
        s = succ[v]
        d = len(s)
        if d < 3:
            raise NotSphere(f"vertex {v} has degree {d} < 3")
        start = next(iter(s))
        u, steps = s[start], 1
        while u != start:
            u = s[u]
            steps += 1
        if steps != d:
            raise NotSphere(f"link of vertex {v} is not a single cycle")
        degrees.append(d)

    oriented = tuple(sorted(_cyc_min(*f) for f in oriented))
    return Triangulation(m, oriented, tuple(succ), tuple(pred), tuple(degrees))


def degree_profile(K):
    """Exact degree counts; asserts the Euler-consistency identities."""
    counts = {}
    for d in K.degrees:
        counts[d] = counts.get(d, 0) + 1
    prof = DegreeProfile(tuple(sorted(counts.items())), K.m)
    assert sum(c for _, c in prof.counts) == K.m
    assert sum(d * c for d, c in prof.counts) == 6 * K.m - 12
    assert sum((6 - d) * c for d, c in prof.counts) == 12
    return prof


# -- canonical form -------------------------------------------------------------


def _scan(rotmap, s, t, m, best):
    """One breadth-first code pass from directed edge (s, t).

    Neighbor labels are 1-based with 0 closing each vertex chunk, so codes
    of lower-degree start vertices compare smaller.  Returns the code (as a
    list) if strictly smaller than `best`, else None.  Aborts early on the
    first position that exceeds `best`.
    """
    label = [0] * m
    label[s] = 1
    entry = [0] * m
    entry[s] = t
    order = [s]
    out = []
    nxt = 2
    ahead = best is None
    pos = 0
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        rm = rotmap[x]
        u = entry[x]
        for _ in range(len(rm)):
            lu = label[u]
            if not lu:
                label[u] = lu = nxt
                nxt += 1
                order.append(u)
                entry[u] = x
            if not ahead:
                b = best[pos]
                if lu > b:
                    return None
                if lu < b:
                    ahead = True
            out.append(lu)
            pos += 1
            u = rm[u]
        if not ahead:
            if best[pos]:
                ahead = True
            # equal separators: still tied
        out.append(0)
        pos += 1
    return out if ahead else None


def _scan_match(rotmap, s, t, m, target):
    """Replay a scan; return 0-based canonical labels iff code == target."""
    label = [0] * m
    entry = [0] * m
    label[s] = 1
    entry[s] = t
    order = [s]
    nxt = 2
    pos = 0
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        rm = rotmap[x]
        u = entry[x]
        for _ in range(len(rm)):
            lu = label[u]
            if not lu:
                label[u] = lu = nxt
                nxt += 1
                order.append(u)
                entry[u] = x
            if target[pos] != lu:
                return None
            pos += 1
            u = rm[u]
        if target[pos] != 0:
            return None
        pos += 1
    return [x - 1 for x in label]


def min_code(m, succ, pred, degrees):
    """Minimal BFS code over all starts and both rotation senses.

    Only directed edges out of minimum-degree vertices can realize the
    minimum (their first chunk is shortest), so others are skipped.
    """
    dmin = min(degrees)
    best = None
    for rotmap in (succ, pred):
        for s in range(m):
            if degrees[s] != dmin:
                continue
            for t in succ[s]:
                res = _scan(rotmap, s, t, m, best)
                if res is not None:
                    best = res
    if m <= 255:
        return bytes(best)
    return tuple(best)


def canonical_form(K):
    """Canonical code of K, equal for isomorphic (or mirror) triangulations."""
    if K._code is None:
        K._code = min_code(K.m, K.succ, K.pred, K.degrees)
    return K._code


def canonical_labeling(K):
    """(code, labels) where labels[v] is v's 0-based canonical label.

    The labeling is the one produced by the first scan, in a fixed start
    order, that achieves the canonical code; deterministic for equal inputs.
    """
    code = canonical_form(K)
    target = list(code)
    dmin = min(K.degrees)
    for rotmap in (K.succ, K.pred):
        for s in range(K.m):
            if K.degrees[s] != dmin:
                continue
            for t in K.succ[s]:
                res = _scan_match(rotmap, s, t, K.m, target)
                if res is not None:
                    return code, res
    raise AssertionError("canonical code not reproduced by any scan")


def isomorphic(K1, K2):
    """True iff K1 and K2 are isomorphic simplicial complexes."""
    if K1.m != K2.m or len(K1.faces) != len(K2.faces):
        return False
    return canonical_form(K1) == canonical_form(K2)


def find_isomorphism(K1, K2):
    """A vertex bijection K1 -> K2 realizing an isomorphism, or None.

    Composes the two canonical labelings, so the result maps rotation
    systems onto each other (possibly reversing the global orientation).
    """
    if not isomorphic(K1, K2):
        return None
    _, lab1 = canonical_labeling(K1)
    _, lab2 = canonical_labeling(K2)
    inv2 = [0] * K2.m
    for v, c in enumerate(lab2):
        inv2[c] = v
    return [inv2[lab1[v]] for v in range(K1.m)]


def high_degree_subcomplex(K, threshold=6):
    """Subgraph on vertices of degree >= threshold.

    Returns (vertices, edges) as frozensets; edges are sorted pairs.
    """
    verts = frozenset(v for v in range(K.m) if K.degrees[v] >= threshold)
    edges = frozenset(
        (v, u) for v in verts for u in K.succ[v] if u in verts and v < u
    )
    return verts, edges


def graphs_isomorphic(g1, g2):
    """Brute-force isomorphism test for small graphs ((verts, edges) pairs).

    Intended for degree >= 6 subcomplexes, which have at most a handful of
    vertices; do not use on anything large.
    """
    from itertools import permutations

    v1, e1 = sorted(g1[0]), {frozenset(e) for e in g1[1]}
    v2, e2 = sorted(g2[0]), {frozenset(e) for e in g2[1]}
    if len(v1) != len(v2) or len(e1) != len(e2):
        return False
    deg1 = sorted(sum(1 for e in e1 if v in e) for v in v1)
    deg2 = sorted(sum(1 for e in e2 if v in e) for v in v2)
    if deg1 != deg2:
        return False
    for perm in permutations(v2):
        phi = dict(zip(v1, perm))
        if all(frozenset((phi[a], phi[b])) in e2 for a, b in (tuple(e) for e in e1)):
            return True
    return False


# -- local modification ----------------------------------------------------------


def flip(K, edge):
    """Diagonal flip of an edge.

    The two faces (a,b,c) and (b,a,d) on the edge become (c,d,b) and
    (d,c,a).  Raises FlipBlocked when {c,d} is already an edge (the flip
    would create a multi-edge), NoSuchEdge when the edge is absent.
    """
    a, b = edge
    if not (0 <= a < K.m and 0 <= b < K.m) or a not in K.succ[b]:
        raise NoSuchEdge(f"({a},{b}) is not an edge")
    c = K.succ[b][a]
    d = K.succ[a][b]
    if d in K.succ[c]:
        raise FlipBlocked(f"diagonal ({c},{d}) already present")
    drop = {_cyc_min(a, b, c), _cyc_min(b, a, d)}
    new_faces = [f for f in K.faces if f not in drop]
    new_faces.append((c, d, b))
    new_faces.append((d, c, a))
    return validate(new_faces)


def relabel(K, perm):
    """Permute vertex labels; perm[v] is the new label of v."""
    return validate([(perm[a], perm[b], perm[c]) for a, b, c in K.faces])


# -- code decoding -----------------------------------------------------------------


def triangulation_from_code(code):
    """Rebuild the canonical representative from a canonical code."""
    vals = list(code)
    chunks = []
    cur = []
    for x in vals:
        if x == 0:
            chunks.append(cur)
            cur = []
        else:
            cur.append(x - 1)
    if cur:
        raise ValueError("code does not end with a separator")
    m = len(chunks)
    succ = [dict() for _ in range(m)]
    for v, rot in enumerate(chunks):
        for i, u in enumerate(rot):
            succ[v][u] = rot[(i + 1) % len(rot)]
    faces = []
    seen = set()
    for v in range(m):
        for u in succ[v]:
            if (u, v) in seen:
                continue
            w = succ[v][u]
            faces.append((u, v, w))
            seen.update(((u, v), (v, w), (w, u)))
    return validate(faces)


# -- stock triangulations ------------------------------------------------------------


def tetrahedron():
    return validate([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def octahedron():
    return validate(
        [
            (0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
            (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5),
        ]
    )


def icosahedron():
    """Built as a pentagonal antiprism capped by two apexes."""
    top = [(0, i, i % 5 + 1) for i in range(1, 6)]
    band = []
    for i in range(5):
        a = 1 + i
        b = 1 + (i + 1) % 5
        c = 6 + i
        d = 6 + (i + 1) % 5
        band.append((a, c, b))
        band.append((b, c, d))
    bottom = [(6 + i, 11, 6 + (i + 1) % 5) for i in range(5)]
    return validate(top + band + bottom)


def stacked_sphere(m, variant=0):
    """Stacked sphere on m vertices: repeated face subdivision of a tetrahedron.

    variant 0 always splits the first face in sorted order, variant 1 the
    last; both are valid enumeration seeds.
    """
    if m < 4:
        raise ValueError("m must be >= 4")
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for w in range(4, m):
        faces.sort()
        a, b, c = faces.pop(0 if variant == 0 else -1)
        faces.extend([(a, b, w), (b, c, w), (c, a, w)])
    return validate(faces)
