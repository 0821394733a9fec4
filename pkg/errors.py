"""
Exception hierarchy for the circular edge coloring toolkit
Input problems are ValueErrors, theorem-violation signals are RuntimeErrors
"""


class CircularIndexError(Exception):
    """Base class for every error raised by this project"""


# ============================================================================
# INPUT ERRORS
# ============================================================================

class LoopRejected(CircularIndexError, ValueError):
    """An edge joins a vertex to itself"""


class BadVertex(CircularIndexError, ValueError):
    """An edge endpoint is outside 0..n-1"""


class DuplicateEdge(CircularIndexError, ValueError):
    """Two edges share an identity"""


class NotCubic(CircularIndexError, ValueError):
    """A vertex does not have degree exactly 3"""


class NotPerfectMatching(CircularIndexError, ValueError):
    """A matching shares a vertex or misses one"""


class GirthTooSmall(CircularIndexError, ValueError):
    """The engine needs girth at least 4"""


class MaxDegreeExceeded(CircularIndexError, ValueError):
    """Some vertex has degree 4 or more"""


class Disconnected(CircularIndexError, ValueError):
    """The driver only accepts connected graphs"""


class TooLarge(CircularIndexError, ValueError):
    """The exact oracle refuses graphs above its node limit"""


class MissingColor(CircularIndexError, ValueError):
    """A node of the graph has no color"""


class ColorOutOfRange(CircularIndexError, ValueError):
    """A color is outside 0..p-1"""


class ImproperColoring(CircularIndexError, ValueError):
    """Two adjacent nodes share a color"""


class CyclicTightArcs(CircularIndexError, ValueError):
    """The tight-arc digraph has a directed cycle"""


class InvalidParameters(CircularIndexError, ValueError):
    """(p, q) does not satisfy p >= q >= 1, or a scale goes the wrong way"""


class PreconditionViolated(CircularIndexError, ValueError):
    """The doubling construction was given a graph it cannot double"""


class ExceptionalInput(CircularIndexError, ValueError):
    """H1 and H2 have no reduction"""


class NoPerfectMatching(CircularIndexError, ValueError):
    """A cubic graph handed to the engine has no perfect matching"""


class GraphFormatError(CircularIndexError, ValueError):
    """A graph document could not be parsed"""


class ColoringFormatError(CircularIndexError, ValueError):
    """A coloring document could not be parsed"""


# ============================================================================
# THEOREM-VIOLATION SIGNALS (never expected on legal input)
# ============================================================================

class InvalidColoring(CircularIndexError, RuntimeError):
    """A coloring lost one of the valid-coloring invariants"""


class NoImprovement(CircularIndexError, RuntimeError):
    """No recoloring of a cycle with an input and an output lowers the potential"""


class TerminalCheckFailed(CircularIndexError, RuntimeError):
    """The descent stopped on a coloring whose tight digraph is unusable"""


class ExtensionFailed(CircularIndexError, RuntimeError):
    """A reduced-graph coloring could not be lifted back"""


class VerificationFailed(CircularIndexError, RuntimeError):
    """A witness did not pass the verifier at the (p, q) it claims"""


__all__ = [
    'CircularIndexError',
    'LoopRejected',
    'BadVertex',
    'DuplicateEdge',
    'NotCubic',
    'NotPerfectMatching',
    'GirthTooSmall',
    'MaxDegreeExceeded',
    'Disconnected',
    'TooLarge',
    'MissingColor',
    'ColorOutOfRange',
    'ImproperColoring',
    'CyclicTightArcs',
    'InvalidParameters',
    'PreconditionViolated',
    'ExceptionalInput',
    'NoPerfectMatching',
    'GraphFormatError',
    'ColoringFormatError',
    'InvalidColoring',
    'NoImprovement',
    'TerminalCheckFailed',
    'ExtensionFailed',
    'VerificationFailed',
]
