"""Exception hierarchy shared across the package."""


class FanweaverError(Exception):
    """Base class for all package errors."""


# -- triangulation validation ------------------------------------------------

class NotSimplicial(FanweaverError):
    """Repeated vertex in a face, duplicate face, or multi-edge."""


class NotClosed(FanweaverError):
    """Some edge lies in a number of faces different from two."""


class NotSphere(FanweaverError):
    """Closed complex that is not a 2-sphere (wrong Euler characteristic,
    disconnected, non-orientable, or pinched vertex link)."""


class FlipBlocked(FanweaverError):
    """Diagonal flip would create a multi-edge."""


# -- file formats --------------------------------------------------------------

class BadHeader(FanweaverError):
    """planar_code stream does not start with the expected header."""


class TruncatedRecord(FanweaverError):
    """planar_code record ended before all rotation lists were read."""


class NeighborOutOfRange(FanweaverError):
    """planar_code neighbor byte outside [1, n]."""


class NotTriangulation(FanweaverError):
    """planar_code record whose embedding has a non-triangular face."""


class TooManyVertices(FanweaverError):
    """planar_code writer supports at most 255 vertices per record."""


class ParseError(FanweaverError):
    """Malformed text input."""


# -- enumeration ---------------------------------------------------------------

class ResourceLimit(FanweaverError):
    """Enumeration exceeded its configured memory/state budget."""


# -- fans ----------------------------------------------------------------------

class DegenerateCone(FanweaverError):
    """Cone membership query against linearly dependent generators."""


class NoGenericProbe(FanweaverError):
    """Could not draw a probe ray off all cone boundaries within the retry cap."""


# -- operations ----------------------------------------------------------------

class NoSuchFace(FanweaverError):
    pass


class NoSuchEdge(FanweaverError):
    pass


class NoSuchVertex(FanweaverError):
    pass


class NotUnimodular(FanweaverError):
    """Operation precondition det = +1 violated on an input fan."""


class WrongDegree(FanweaverError):
    """Inverse operation applied at a vertex of the wrong degree."""


class BothDiagonalsPresent(FanweaverError):
    """Inverse edge-subdivision blocked: both diagonals of the link
    quadrilateral are already edges."""


class PatternMismatch(FanweaverError):
    """Vertex does not match the ring-collapse pattern."""


# -- atlas ---------------------------------------------------------------------

class CorruptAtlas(FanweaverError):
    """Atlas data file failed structural validation."""


class CertificateInvalid(FanweaverError):
    """Stored or derived vector certificate failed verification."""


# -- realization ---------------------------------------------------------------

class RealizationFailed(FanweaverError):
    """Reduction got stuck on an irreducible sphere and the fallback search
    found no assignment.  Carries the stuck sphere for inspection."""

    def __init__(self, message, stuck=None, log=None):
        super().__init__(message)
        self.stuck = stuck
        self.log = log or []


class ReplayMismatch(FanweaverError):
    """Forward replay did not reproduce the expected triangulation."""


class BudgetExhausted(FanweaverError):
    """Backtracking search ran out of node budget (existence undecided)."""
