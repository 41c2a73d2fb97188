"""Domain errors.

Everything raised on purpose by this package derives from LuneFreeError,
so callers (and the CLI) can distinguish domain failures from bugs.
"""


class LuneFreeError(Exception):
    """Base class for all errors raised by lunefree."""


# ---------------------------------------------------------------- maps

class EmptyInput(LuneFreeError):
    """No vertices were supplied."""


class DuplicateEdgeUse(LuneFreeError):
    """An edge identifier was used a number of times other than two."""


class Disconnected(LuneFreeError):
    """The operation needs a connected map."""


class PositiveGenus(LuneFreeError):
    """The operation needs a sphere embedding."""


# ------------------------------------------------------------ shadows

class NotFourRegular(LuneFreeError):
    """The map is not 4-regular."""


class NotLuneFree(LuneFreeError):
    """The predicate is only defined for lune-free diagrams."""


class NotSimple(LuneFreeError):
    """Loops or parallel edges are present but not allowed here."""


class TooSmall(LuneFreeError):
    """The requested object does not exist below a size threshold."""


# ------------------------------------------------------- construction

class BadSite(LuneFreeError):
    """The rewrite site does not match the local pattern of the move."""


class InadmissibleSite(BadSite):
    """Both faces flanking the chosen edge must have at least 4 sides."""


class NotDegreeThree(BadSite):
    """The move must be anchored at a vertex of degree 3."""


class NotSpecial(LuneFreeError):
    """The move needs a special plane graph."""


class BadParams(LuneFreeError):
    """Parameters are outside the documented domain."""


class BadSize(BadParams):
    """A size parameter is outside the documented domain."""


class Unrealizable(LuneFreeError):
    """No graph with the requested properties exists; the reason says why."""

    def __init__(self, message: str, reason: str = ""):
        super().__init__(message)
        self.reason = reason or message


class DisconnectedClosure(LuneFreeError):
    """The braid closure fell apart into several components."""


class ConstructionError(LuneFreeError):
    """A constructor produced output that fails its own contract.

    This is a bug canary: it should never fire, and when it does the
    construction must not be silently accepted.
    """


# ------------------------------------------------------------- medial

class ImproperColoring(LuneFreeError):
    """The supplied face coloring is not a proper checkerboard coloring."""


# -------------------------------------------------------- enumeration

class CeilingExceeded(LuneFreeError):
    """The request is above the configured enumeration ceiling."""


class Mismatch(LuneFreeError):
    """The two enumeration pipelines disagree; carries the difference."""

    def __init__(self, message: str, only_direct=(), only_premedial=()):
        super().__init__(message)
        self.only_direct = tuple(only_direct)
        self.only_premedial = tuple(only_premedial)


# ----------------------------------------------------------------- io

class UniSyntaxError(LuneFreeError):
    """Malformed UniText input; carries line and column."""

    def __init__(self, message: str, line: int, col: int = 0):
        super().__init__("line %d: %s" % (line, message))
        self.line = line
        self.col = col


class EdgeCountError(LuneFreeError):
    """The declared edge count disagrees with the body."""


class NotThreeConnected(LuneFreeError):
    """The straight-line embedding needs a 3-connected simple graph."""


class SingularSystem(LuneFreeError):
    """The embedding system of equations could not be solved."""
