"""fanweaver: simplicial 2-spheres as underlying complexes of smooth complete fans.

The package realizes sphere triangulations as non-singular complete fans in
three-dimensional lattice space: it validates and enumerates triangulations,
applies the vertex-adding operations whose vector rules preserve the fan
properties, reduces arbitrary inputs to certified base cases (or to entries
of the built-in 22-type catalogue of minimum-degree-5 spheres), and checks
every certificate with exact integer arithmetic.
"""

from . import errors
from .atlas import AtlasEntry, load_atlas
from .census import CensusRow, census, enumerate_spheres
from .codec import read_planar_code, read_text, write_planar_code, write_text
from .fans import (
    FanAssignment,
    VerificationReport,
    certificate_from_json,
    certificate_to_json,
    cone_contains,
    det3,
    face_det,
    is_complete,
    is_nonsingular,
    verify,
)
from .moves import (
    OpRecord,
    apply_ck,
    apply_i,
    apply_ii,
    apply_inverse_ck,
    apply_inverse_i,
    apply_inverse_ii,
    ck_reducible_at,
    find_ck_reducible,
    find_inverse_i,
)
from .realize import RealizationResult, SearchConfig, realize, replay, search_assignment
from .spheres import (
    DegreeProfile,
    Triangulation,
    canonical_form,
    degree_profile,
    flip,
    high_degree_subcomplex,
    icosahedron,
    isomorphic,
    octahedron,
    stacked_sphere,
    tetrahedron,
    validate,
)

__version__ = "0.1.0"
