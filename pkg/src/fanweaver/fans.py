"""Integer vector assignments over a triangulation and exact fan checks.

A fan assignment attaches one integer 3-vector to each vertex; every
oriented face (a, b, c) spans the candidate cone on (v_a, v_b, v_c).  All
verification is exact integer arithmetic; no floating point anywhere.

Non-singularity: every face determinant must be +1 once the global
orientation is normalized (a mirror assignment, all determinants -1, is
read with reversed faces).

Completeness: with all determinants positive, radial projection maps the
face triangles onto spherical triangles preserving orientation, so the
number of maximal cones containing a generic ray equals the covering degree
of that map.  The cones tile R^3 exactly once iff that degree is 1, which
is what a probe measures.  Probes are drawn from a seeded generator and
re-drawn whenever they touch any cone boundary, so the count is always
taken at a generic ray; several independent probes must agree.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import DegenerateCone, NoGenericProbe
from .spheres import Triangulation, validate

__all__ = [
    "FanAssignment",
    "VerificationReport",
    "det3",
    "face_det",
    "is_nonsingular",
    "cone_contains",
    "is_complete",
    "verify",
    "certificate_to_json",
    "certificate_from_json",
]

PROBE_COORD_BOUND = 10**6
PROBE_REDRAW_CAP = 100
PROBE_COUNT = 3


def det3(u, v, w):
    """Determinant of the 3x3 matrix with columns u, v, w (exact)."""
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
    )


def add3(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


@dataclass(frozen=True)
class FanAssignment:
    """A triangulation together with one lattice vector per vertex."""

    K: Triangulation
    vectors: tuple

    def __post_init__(self):
        if len(self.vectors) != self.K.m:
            raise ValueError("one vector per vertex required")
        object.__setattr__(
            self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors)
        )
        for v in self.vectors:
            if len(v) != 3:
                raise ValueError("vectors must have 3 coordinates")


@dataclass(frozen=True)
class VerificationReport:
    nonsingular: bool
    complete: bool
    bad_faces: tuple  # ((face, det), ...) for faces with det != +1
    covering_count: int  # cones containing the probe ray (-1 if not probed)
    probes_used: int


def face_det(fa, face):
    """Determinant of a face's vectors in the face's orientation order."""
    a, b, c = face
    key = min(face)
    if key == b:
        a, b, c = b, c, a
    elif key == c:
        a, b, c = c, a, b
    if (a, b, c) not in fa.K.faces:
        raise ValueError(f"face {face} not in triangulation")
    return det3(fa.vectors[a], fa.vectors[b], fa.vectors[c])


def _oriented_dets(fa):
    """(faces, dets) after orientation normalization.

    If every determinant is -1 under the stored orientation the mirror
    reading (all faces reversed) is returned instead.
    """
    vec = fa.vectors
    faces = fa.K.faces
    dets = [det3(vec[a], vec[b], vec[c]) for a, b, c in faces]
    if all(d == -1 for d in dets):
        faces = tuple((a, c, b) for a, b, c in faces)
        dets = [-d for d in dets]
    return faces, dets


def is_nonsingular(fa):
    """(ok, bad_faces): ok iff every oriented face determinant is +1."""
    faces, dets = _oriented_dets(fa)
    bad = tuple(
        (faces[i], dets[i]) for i in range(len(faces)) if dets[i] != 1
    )
    return not bad, bad


def cone_contains(u, v, w, p, strict=False):
    """Whether p lies in the cone spanned by u, v, w (Cramer sign test).

    With strict=True boundary points report False; a zero Cramer
    determinant then means the query ray is non-generic for this cone.
    """
    d = det3(u, v, w)
    if d == 0:
        raise DegenerateCone("generators are linearly dependent")
    s = 1 if d > 0 else -1
    d1 = s * det3(p, v, w)
    d2 = s * det3(u, p, w)
    d3 = s * det3(u, v, p)
    if strict:
        return d1 > 0 and d2 > 0 and d3 > 0
    return d1 >= 0 and d2 >= 0 and d3 >= 0


def _count_at_probe(faces, vectors, p):
    """Number of cones strictly containing p, or None if p hits a boundary."""
    count = 0
    for a, b, c in faces:
        u, v, w = vectors[a], vectors[b], vectors[c]
        d1 = det3(p, v, w)
        d2 = det3(u, p, w)
        d3 = det3(u, v, p)
        if d1 == 0 or d2 == 0 or d3 == 0:
            neg = d1 < 0 or d2 < 0 or d3 < 0
            if not neg:
                return None  # on the boundary of this cone: non-generic
            # a zero with a negative is safely outside; still re-draw to
            # keep the genericity contract simple and the count exact
            return None
        if d1 > 0 and d2 > 0 and d3 > 0:
            count += 1
    return count


def is_complete(fa, seed=0, probes=PROBE_COUNT):
    """(complete, covering_count, probes_used).

    Requires all determinants positive first (returns False otherwise);
    then `probes` generic rays must each lie in exactly one maximal cone.
    """
    faces, dets = _oriented_dets(fa)
    if any(d <= 0 for d in dets):
        return False, -1, 0
    rng = random.Random(seed)
    vec = fa.vectors
    counts = []
    used = 0
    redraws = 0
    while len(counts) < probes:
        p = (
            rng.randint(-PROBE_COORD_BOUND, PROBE_COORD_BOUND),
            rng.randint(-PROBE_COORD_BOUND, PROBE_COORD_BOUND),
            rng.randint(-PROBE_COORD_BOUND, PROBE_COORD_BOUND),
        )
        if p == (0, 0, 0):
            continue
        used += 1
        c = _count_at_probe(faces, vec, p)
        if c is None:
            redraws += 1
            if redraws > PROBE_REDRAW_CAP:
                raise NoGenericProbe(
                    f"no generic probe after {PROBE_REDRAW_CAP} redraws"
                )
            continue
        counts.append(c)
    complete = all(c == 1 for c in counts)
    return complete, counts[0], used


def verify(fa, seed=0, probes=PROBE_COUNT):
    """Full verification report: non-singularity plus completeness.

    The two checks are independent (a fan can be complete yet singular);
    the report is always fully populated.
    """
    nonsing, bad = is_nonsingular(fa)
    complete, count, used = is_complete(fa, seed=seed, probes=probes)
    return VerificationReport(nonsing, complete, bad, count, used)


# -- certificate files -----------------------------------------------------------


def certificate_to_json(fa):
    """Serialize as the certificate document (sorted keys, one line)."""
    doc = {
        "faces": [list(f) for f in fa.K.faces],
        "m": fa.K.m,
        "vectors": [list(v) for v in fa.vectors],
    }
    return json.dumps(doc, sort_keys=True, separators=(", ", ": "))


def certificate_from_json(text):
    """Parse and validate a certificate document."""
    doc = json.loads(text)
    for key in ("m", "faces", "vectors"):
        if key not in doc:
            raise ValueError(f"certificate missing key {key!r}")
    K = validate(doc["faces"])
    if K.m != doc["m"]:
        raise ValueError("certificate m does not match its face list")
    if len(doc["vectors"]) != K.m:
        raise ValueError("certificate must carry one vector per vertex")
    return FanAssignment(K, tuple(tuple(v) for v in doc["vectors"]))
