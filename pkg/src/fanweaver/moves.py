"""Vertex-adding operations on spheres and fans, and their inverses.

Three forward operations grow a triangulation while preserving the property
of carrying a non-singular complete fan:

* face split: a face (v1,v2,v3) becomes three faces through a new vertex,
  which receives the vector v1+v2+v3;
* edge split: the two faces on an edge (v2,v3) become four through a new
  vertex on the edge, which receives v2+v3;
* ring insertion C_k: the star of a degree-k vertex v is subdivided by a
  ring of k new degree-5 vertices, the one paired with neighbor v_i
  receiving v+v_i.

Each application returns an OpRecord that can be replayed later.  A record's
locations refer to the complex immediately before the forward operation and
its `new_vertices` say which indices the created vertices take, so replaying
a reduction log rebuilds the original labeling exactly.

Rotation convention: `star_ring(K, v)` lists the neighbors of v so that
(v, r_i, r_i+1) are the star faces in stored orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BothDiagonalsPresent,
    NoSuchEdge,
    NoSuchFace,
    NoSuchVertex,
    NotUnimodular,
    PatternMismatch,
    WrongDegree,
)
from .fans import FanAssignment, add3, det3
from .spheres import Triangulation, validate

__all__ = [
    "OpRecord",
    "star_ring",
    "apply_i",
    "apply_ii",
    "apply_ck",
    "find_inverse_i",
    "apply_inverse_i",
    "apply_inverse_ii",
    "find_ck_reducible",
    "ck_reducible_at",
    "apply_inverse_ck",
    "format_record",
    "parse_record",
    "format_script",
    "parse_script",
]


@dataclass(frozen=True)
class OpRecord:
    """Replayable description of one forward operation.

    kind 'i':  face (a, b, c), one new vertex.
    kind 'ii': edge (v2, v3) with flanking apexes (v1, v4), one new vertex.
    kind 'ck': center plus outer ring (x_1..x_k), k new vertices, the i-th
               sitting between center and x_i.
    """

    kind: str
    face: tuple = None
    edge: tuple = None
    flanks: tuple = None
    center: int = None
    ring: tuple = None
    new_vertices: tuple = ()


def star_ring(K, v):
    """Neighbors of v ordered so (v, r_i, r_{i+1}) are faces; starts at min."""
    p = K.pred[v]
    start = min(p)
    out = [start]
    u = p[start]
    while u != start:
        out.append(u)
        u = p[u]
    return tuple(out)


def _split(x):
    """(K, vectors) with vectors None for a bare triangulation."""
    if isinstance(x, FanAssignment):
        return x.K, x.vectors
    if isinstance(x, Triangulation):
        return x, None
    raise TypeError(f"expected Triangulation or FanAssignment, got {type(x)!r}")


def _insert_mapping(m_old, new_ids):
    """Old-label relabeling when the new vertices take the ids `new_ids`."""
    newset = set(new_ids)
    mapping = []
    slot = 0
    for _ in range(m_old):
        while slot in newset:
            slot += 1
        mapping.append(slot)
        slot += 1
    return mapping


def _assemble(K, vectors, kept_faces, new_faces, new_vecs, new_ids):
    """Build the result complex; new vertex j is temporarily m+j in new_faces."""
    m_old = K.m
    k = len(new_vecs)
    if new_ids is None:
        new_ids = tuple(range(m_old, m_old + k))
    else:
        new_ids = tuple(new_ids)
        if sorted(new_ids) != sorted(set(new_ids)) or any(
            not 0 <= w < m_old + len(new_ids) for w in new_ids
        ):
            raise ValueError(f"bad replacement ids {new_ids}")
    mapping = _insert_mapping(m_old, new_ids)
    trans = mapping + [0] * len(new_ids)
    for j, w in enumerate(new_ids):
        trans[m_old + j] = w
    faces = [(trans[a], trans[b], trans[c]) for a, b, c in kept_faces + new_faces]
    K2 = validate(faces)
    if vectors is None:
        return K2, None, new_ids
    vecs = [None] * K2.m
    for v in range(m_old):
        vecs[trans[v]] = vectors[v]
    for j, w in enumerate(new_ids):
        vecs[w] = new_vecs[j]
    return K2, tuple(vecs), new_ids


def _wrap(K2, vecs):
    return FanAssignment(K2, vecs) if vecs is not None else K2


def _require_face(K, face):
    """Locate the stored orientation of a face given by any vertex order."""
    a, b, c = face
    for x in face:
        if not 0 <= x < K.m:
            raise NoSuchFace(f"vertex {x} out of range")
    if K.has_edge(a, b) and K.apex(a, b) == c:
        return (a, b, c)
    if K.has_edge(b, a) and K.apex(b, a) == c:
        return (b, a, c)
    raise NoSuchFace(f"{face} is not a face")


def apply_i(x, face, _new_ids=None):
    """Split a face with one new vertex (vector: sum of the three corners)."""
    K, vectors = _split(x)
    a, b, c = _require_face(K, face)
    if vectors is not None:
        if det3(vectors[a], vectors[b], vectors[c]) != 1:
            raise NotUnimodular(f"det at face ({a},{b},{c}) is not +1")
    w = K.m  # temporary id
    kept = [f for f in K.faces if set(f) != {a, b, c}]
    new = [(a, b, w), (b, c, w), (c, a, w)]
    nv = [add3(add3(vectors[a], vectors[b]), vectors[c])] if vectors is not None else [None]
    K2, vecs, ids = _assemble(K, vectors, kept, new, nv, _new_ids)
    rec = OpRecord(kind="i", face=(a, b, c), new_vertices=ids)
    return _wrap(K2, vecs), rec


def apply_ii(x, edge, flanks=None, _new_ids=None):
    """Split an edge with one new vertex (vector: sum of the endpoints)."""
    K, vectors = _split(x)
    v2, v3 = edge
    if not (0 <= v2 < K.m and 0 <= v3 < K.m) or not K.has_edge(v2, v3):
        raise NoSuchEdge(f"({v2},{v3}) is not an edge")
    v1 = K.apex(v2, v3)
    v4 = K.apex(v3, v2)
    if flanks is not None and tuple(flanks) != (v1, v4):
        raise NoSuchEdge(
            f"edge ({v2},{v3}) is flanked by ({v1},{v4}), not {tuple(flanks)}"
        )
    if vectors is not None:
        if det3(vectors[v1], vectors[v2], vectors[v3]) != 1:
            raise NotUnimodular(f"det at face ({v1},{v2},{v3}) is not +1")
        if det3(vectors[v4], vectors[v3], vectors[v2]) != 1:
            raise NotUnimodular(f"det at face ({v4},{v3},{v2}) is not +1")
    w = K.m
    kept = [f for f in K.faces if set(f) != {v1, v2, v3} and set(f) != {v2, v3, v4}]
    new = [(v1, v2, w), (v1, w, v3), (v4, v3, w), (v4, w, v2)]
    nv = [add3(vectors[v2], vectors[v3])] if vectors is not None else [None]
    K2, vecs, ids = _assemble(K, vectors, kept, new, nv, _new_ids)
    rec = OpRecord(kind="ii", edge=(v2, v3), flanks=(v1, v4), new_vertices=ids)
    return _wrap(K2, vecs), rec


def apply_ck(x, center, ring=None, _new_ids=None):
    """Subdivide the whole star of `center` with a ring of k new vertices.

    The new vertex between center and ring[i] receives vector
    center + ring[i].  Works for any degree k >= 3.
    """
    K, vectors = _split(x)
    v = center
    if not 0 <= v < K.m:
        raise NoSuchVertex(f"vertex {v} out of range")
    if ring is None:
        ring = star_ring(K, v)
    else:
        ring = tuple(ring)
        if sorted(ring) != sorted(K.succ[v]):
            raise NoSuchVertex(f"{ring} is not the neighbor set of {v}")
        k = len(ring)
        for i in range(k):
            a, b = ring[i], ring[(i + 1) % k]
            if not K.has_edge(a, b) or K.apex(a, b) != v:
                raise NoSuchVertex(f"{ring} is not in star rotation order at {v}")
    k = len(ring)
    if vectors is not None:
        for i in range(k):
            a, b = ring[i], ring[(i + 1) % k]
            if det3(vectors[v], vectors[a], vectors[b]) != 1:
                raise NotUnimodular(f"det at star face ({v},{a},{b}) is not +1")
    star = {frozenset((v, ring[i], ring[(i + 1) % k])) for i in range(k)}
    kept = [f for f in K.faces if frozenset(f) not in star]
    new = []
    m = K.m
    for i in range(k):
        xi, xj = ring[i], ring[(i + 1) % k]
        wi, wj = m + i, m + (i + 1) % k
        new.extend([(v, wi, wj), (xi, wj, wi), (xi, xj, wj)])
    nv = (
        [add3(vectors[v], vectors[ring[i]]) for i in range(k)]
        if vectors is not None
        else [None] * k
    )
    K2, vecs, ids = _assemble(K, vectors, kept, new, nv, _new_ids)
    rec = OpRecord(kind="ck", center=v, ring=ring, new_vertices=ids)
    return _wrap(K2, vecs), rec


# -- inverses ---------------------------------------------------------------------


def _compact_map(m, removed):
    """Old -> new labels after deleting `removed`, order preserving."""
    removed = set(removed)
    mapping = {}
    nxt = 0
    for v in range(m):
        if v not in removed:
            mapping[v] = nxt
            nxt += 1
    return mapping


def find_inverse_i(K):
    """Smallest degree-3 vertex, or None.  Meaningful only for m >= 5."""
    if K.m < 5:
        return None
    for v in range(K.m):
        if K.degrees[v] == 3:
            return v
    return None


def apply_inverse_i(K, v):
    """Delete a degree-3 vertex; its link triangle becomes a face.

    Returns (K', record) where the record replays the deletion forward.
    """
    if K.m < 5:
        raise WrongDegree("cannot reduce below the 4-vertex sphere")
    if not 0 <= v < K.m or K.degrees[v] != 3:
        raise WrongDegree(f"vertex {v} does not have degree 3")
    a, b, c = star_ring(K, v)
    kept = [f for f in K.faces if v not in f]
    kept.append((a, b, c))
    mp = _compact_map(K.m, (v,))
    K2 = validate([(mp[p], mp[q], mp[r]) for p, q, r in kept])
    rec = OpRecord(kind="i", face=(mp[a], mp[b], mp[c]), new_vertices=(v,))
    return K2, rec


def apply_inverse_ii(K, v):
    """Delete a degree-4 vertex, re-triangulating its link quadrilateral.

    Of the two diagonals the first in sorted order that is not already an
    edge is used; if both are edges the deletion is impossible without
    creating a multi-edge and BothDiagonalsPresent is raised.  Requires
    that K has no degree-3 vertex.
    """
    if not 0 <= v < K.m or K.degrees[v] != 4:
        raise WrongDegree(f"vertex {v} does not have degree 4")
    if any(d == 3 for d in K.degrees):
        raise WrongDegree("a degree-3 vertex is present; reduce it first")
    p, q, r, s = star_ring(K, v)
    choices = [
        ((min(p, r), max(p, r)), ((p, q, r), (p, r, s))),
        ((min(q, s), max(q, s)), ((q, r, s), (q, s, p))),
    ]
    choices.sort()
    new2 = None
    for (d1, d2), fcs in choices:
        if not K.has_edge(d1, d2):
            new2 = fcs
            break
    if new2 is None:
        raise BothDiagonalsPresent(
            f"both diagonals of the link of {v} are already edges"
        )
    kept = [f for f in K.faces if v not in f]
    kept.extend(new2)
    mp = _compact_map(K.m, (v,))
    K2 = validate([(mp[a], mp[b], mp[c]) for a, b, c in kept])
    # the subdivided edge of the forward replay is the chosen diagonal
    e1, e2 = mp[new2[0][0]], mp[new2[0][2]]
    va = K2.apex(e1, e2)
    vb = K2.apex(e2, e1)
    rec = OpRecord(kind="ii", edge=(e1, e2), flanks=(va, vb), new_vertices=(v,))
    return K2, rec


def ck_reducible_at(K, v):
    """Degree k if vertex v matches the ring-collapse pattern, else None."""
    if not 0 <= v < K.m:
        return None
    ring = star_ring(K, v)
    if _ck_outer(K, v, ring) is None:
        return None
    return len(ring)


def find_ck_reducible(K):
    """Smallest (v, k) matching the ring-collapse pattern, or None.

    v has degree k, every neighbor has degree exactly 5, and the neighbors'
    outer contacts form a simple k-cycle disjoint from the closed star of v.
    Intended for complexes of minimum degree 5.
    """
    if min(K.degrees) < 5:
        return None
    for v in range(K.m):
        ring = star_ring(K, v)
        outer = _ck_outer(K, v, ring)
        if outer is not None:
            return v, len(ring)
    return None


def _ck_outer(K, v, ring):
    """Outer cycle (x_1..x_k) of the ring-collapse pattern at v, or None."""
    k = len(ring)
    if k < 5:
        return None
    if any(K.degrees[w] != 5 for w in ring):
        return None
    xs = []
    for i in range(k):
        wi = ring[i]
        wj = ring[(i + 1) % k]
        xs.append(K.succ[wi][wj])
    ringset = set(ring)
    seen = set()
    for x in xs:
        if x == v or x in ringset or x in seen:
            return None
        seen.add(x)
    for i in range(k):
        wi = ring[i]
        if K.succ[wi][xs[i]] != xs[i - 1]:
            return None
    return tuple(xs)


def apply_inverse_ck(K, v):
    """Collapse the degree-5 ring around v, reconnecting v to the outer cycle."""
    if not 0 <= v < K.m:
        raise NoSuchVertex(f"vertex {v} out of range")
    ring = star_ring(K, v)
    xs = _ck_outer(K, v, ring)
    if xs is None:
        raise PatternMismatch(f"vertex {v} does not match the ring pattern")
    k = len(ring)
    ringset = set(ring)
    kept = [f for f in K.faces if not (set(f) & ringset)]
    for i in range(k):
        kept.append((v, xs[i], xs[(i + 1) % k]))
    mp = _compact_map(K.m, ring)
    K2 = validate([(mp[a], mp[b], mp[c]) for a, b, c in kept])
    rec = OpRecord(
        kind="ck",
        center=mp[v],
        ring=tuple(mp[x] for x in xs),
        new_vertices=ring,
    )
    return K2, rec


# -- record scripts -----------------------------------------------------------------


def format_record(rec):
    if rec.kind == "i":
        a, b, c = rec.face
        return f"i {a} {b} {c} -> {rec.new_vertices[0]}"
    if rec.kind == "ii":
        v2, v3 = rec.edge
        v1, v4 = rec.flanks
        return f"ii {v2} {v3} / {v1} {v4} -> {rec.new_vertices[0]}"
    if rec.kind == "ck":
        ring = " ".join(str(x) for x in rec.ring)
        ws = " ".join(str(w) for w in rec.new_vertices)
        return f"ck {rec.center} / {ring} -> {ws}"
    raise ValueError(f"unknown record kind {rec.kind!r}")


def parse_record(line):
    head, _, tail = line.partition("->")
    new_ids = tuple(int(t) for t in tail.split())
    toks = head.split()
    if toks[0] == "i":
        return OpRecord(kind="i", face=tuple(int(t) for t in toks[1:4]), new_vertices=new_ids)
    if toks[0] == "ii":
        sep = toks.index("/")
        return OpRecord(
            kind="ii",
            edge=tuple(int(t) for t in toks[1:sep]),
            flanks=tuple(int(t) for t in toks[sep + 1 :]),
            new_vertices=new_ids,
        )
    if toks[0] == "ck":
        sep = toks.index("/")
        return OpRecord(
            kind="ck",
            center=int(toks[1]),
            ring=tuple(int(t) for t in toks[sep + 1 :]),
            new_vertices=new_ids,
        )
    raise ValueError(f"unparseable operation line {line!r}")


def format_script(records):
    return "".join(format_record(r) + "\n" for r in records)


def parse_script(text):
    return [parse_record(line) for line in text.splitlines() if line.strip()]
