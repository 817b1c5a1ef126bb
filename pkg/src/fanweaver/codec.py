"""Reading and writing triangulations: binary planar_code and plain text.

planar_code (the classic generator interchange format): the ASCII header
">>planar_code<<" followed by records; each record is one byte n (vertex
count), then for every vertex its rotation as 1-based neighbor bytes closed
by a zero byte.  Only the 1-byte variant (n <= 255) is supported.  Faces
are recovered by tracing the rotation system; records whose embedding is
not a sphere triangulation are rejected.

Text format: first line m, then one face per line as three 0-based vertex
indices; orientation of the input is free, the reader re-validates.
"""

from __future__ import annotations

from .errors import (
    BadHeader,
    NeighborOutOfRange,
    NotTriangulation,
    ParseError,
    TooManyVertices,
    TruncatedRecord,
)
from .spheres import validate

__all__ = [
    "PLANAR_CODE_HEADER",
    "read_planar_code",
    "write_planar_code",
    "read_text",
    "write_text",
]

PLANAR_CODE_HEADER = b">>planar_code<<"


def read_planar_code(data):
    """Parse a planar_code byte stream into triangulations."""
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("missing planar_code header")
    pos = len(PLANAR_CODE_HEADER)
    out = []
    n_total = len(data)
    while pos < n_total:
        n = data[pos]
        pos += 1
        if n == 0:
            raise NotTriangulation("empty record (n = 0)")
        rotations = []
        for v in range(n):
            rot = []
            while True:
                if pos >= n_total:
                    raise TruncatedRecord(
                        f"record {len(out)}: stream ended inside vertex {v}"
                    )
                byte = data[pos]
                pos += 1
                if byte == 0:
                    break
                if byte > n:
                    raise NeighborOutOfRange(
                        f"record {len(out)}: neighbor {byte} > n = {n}"
                    )
                rot.append(byte - 1)
            rotations.append(rot)
        out.append(_from_rotations(rotations, len(out)))
    return out


def _from_rotations(rotations, index):
    """Triangulation from rotation lists by tracing face orbits.

    From a directed edge (u, v) the face continues with the rotation
    successor of u at v; every orbit must close after three steps.
    """
    n = len(rotations)
    nxt = []
    for v, rot in enumerate(rotations):
        if len(set(rot)) != len(rot) or v in rot or len(rot) < 3:
            raise NotTriangulation(f"record {index}: bad rotation at vertex {v}")
        nxt.append({rot[i]: rot[(i + 1) % len(rot)] for i in range(len(rot))})
    faces = []
    seen = set()
    for u in range(n):
        for v in rotations[u]:
            if (u, v) in seen:
                continue
            if u not in nxt[v]:
                raise NotTriangulation(
                    f"record {index}: edge ({u},{v}) lacks its reverse"
                )
            w = nxt[v][u]
            if w == u or nxt[w].get(v) != u:
                raise NotTriangulation(f"record {index}: non-triangular face")
            faces.append((u, v, w))
            seen.update(((u, v), (v, w), (w, u)))
    try:
        return validate(faces)
    except Exception as exc:
        raise NotTriangulation(f"record {index}: {exc}") from exc


def write_planar_code(Ks):
    """Serialize triangulations as a planar_code byte stream."""
    chunks = [PLANAR_CODE_HEADER]
    for K in Ks:
        if K.m > 255:
            raise TooManyVertices(f"m = {K.m} exceeds the 1-byte format")
        rec = bytearray([K.m])
        for v in range(K.m):
            rec.extend(u + 1 for u in K.link(v))
            rec.append(0)
        chunks.append(bytes(rec))
    return b"".join(chunks)


def read_text(text):
    """Parse the text format (m, then one face per line)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty input")
    try:
        m = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count: {lines[0]!r}") from exc
    faces = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"face line needs 3 indices: {ln!r}")
        try:
            faces.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ParseError(f"non-integer index: {ln!r}") from exc
    K = validate(faces)
    if K.m != m:
        raise ParseError(f"declared m = {m} but faces span {K.m} vertices")
    return K


def write_text(K):
    lines = [str(K.m)]
    lines.extend(f"{a} {b} {c}" for a, b, c in K.faces)
    return "\n".join(lines) + "\n"
