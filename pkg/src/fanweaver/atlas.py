"""The embedded catalogue of minimum-degree-5 spheres with at most 18 vertices.

There are exactly 22 isomorphism classes (1, 1, 1, 3, 4, 12 at m = 12, 14,
15, 16, 17, 18); each entry ships its triangulation, a verified vector
certificate, a provenance tag, and, for the twelve ring-collapse types, the
witness vertex whose star collapse the realization proof uses.

The data file is a sequence of certificate documents, each preceded by a
"# {json header}" line carrying label, star vertex and provenance; see
tools/build_atlas.py for how it is produced and cross-checked.  The
FANWEAVER_ATLAS environment variable overrides the bundled file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import CertificateInvalid, CorruptAtlas
from .fans import FanAssignment, verify
from .spheres import Triangulation, canonical_form, degree_profile, validate

__all__ = ["AtlasEntry", "Atlas", "load_atlas", "atlas_path"]

_DEFAULT = Path(__file__).parent / "data" / "atlas.fwa"
_cache = {}


@dataclass(frozen=True)
class AtlasEntry:
    label: str
    K: Triangulation
    vectors: tuple
    star_vertex: int  # None for types without a ring-collapse witness
    star_k: int
    provenance: str

    @property
    def m(self):
        return self.K.m

    def fan(self):
        """The certificate as a fan assignment, verified before return."""
        fa = FanAssignment(self.K, self.vectors)
        rep = verify(fa)
        if not (rep.nonsingular and rep.complete):
            raise CertificateInvalid(f"certificate for {self.label!r} fails")
        return fa


class Atlas:
    def __init__(self, entries):
        self.entries = list(entries)
        self._by_code = {canonical_form(e.K): e for e in self.entries}
        self._by_label = {e.label: e for e in self.entries}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def lookup(self, K):
        """The entry isomorphic to K, or None."""
        if K.m not in (12, 14, 15, 16, 17, 18):
            return None
        return self._by_code.get(canonical_form(K))

    def by_label(self, label):
        return self._by_label.get(label)


def atlas_path():
    return Path(os.environ.get("FANWEAVER_ATLAS", _DEFAULT))


def load_atlas(path=None, verify_certificates=False):
    """Load (and optionally fully re-verify) the catalogue.

    Parsed atlases are cached per resolved path; requesting verification
    bypasses the cache.
    """
    p = Path(path) if path is not None else atlas_path()
    key = str(p)
    if not verify_certificates and key in _cache:
        return _cache[key]
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileNotFoundError(f"atlas data file not found: {p}") from exc
    entries = []
    header = None
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is not None:
                raise CorruptAtlas(f"line {ln}: two headers in a row")
            try:
                header = json.loads(line[1:])
            except json.JSONDecodeError as exc:
                raise CorruptAtlas(f"line {ln}: bad header") from exc
            continue
        if header is None:
            raise CorruptAtlas(f"line {ln}: certificate without a header")
        try:
            doc = json.loads(line)
            K = validate(doc["faces"])
            entry = AtlasEntry(
                label=header["label"],
                K=K,
                vectors=tuple(tuple(v) for v in doc["vectors"]),
                star_vertex=header.get("star_vertex"),
                star_k=header.get("star_k"),
                provenance=header.get("provenance", "?"),
            )
        except CorruptAtlas:
            raise
        except Exception as exc:
            raise CorruptAtlas(f"line {ln}: {exc}") from exc
        if K.m != doc["m"] or len(entry.vectors) != K.m:
            raise CorruptAtlas(f"line {ln}: inconsistent sizes")
        if degree_profile(K).min_degree < 5 or K.m > 18:
            raise CorruptAtlas(f"{entry.label}: not a minimum-degree-5 type")
        entries.append(entry)
        header = None
    if header is not None:
        raise CorruptAtlas("trailing header without certificate")
    if len(entries) != 22:
        raise CorruptAtlas(f"expected 22 entries, found {len(entries)}")
    atlas = Atlas(entries)
    if verify_certificates:
        for e in atlas:
            e.fan()  # raises CertificateInvalid on failure
    else:
        _cache[key] = atlas
    return atlas


def certificate_for(entry):
    """Verified fan assignment for an entry (spec'd convenience alias)."""
    return entry.fan()
