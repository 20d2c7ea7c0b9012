"""Exception hierarchy shared by all rekern modules."""


class RekernError(Exception):
    """Base class for all toolkit errors."""


class ModificationInvalid(RekernError):
    """A local modification violates its preconditions on the given graph."""


class VertexOutOfRange(RekernError):
    """A vertex index does not exist in the graph."""


class SidesOverlap(RekernError):
    """The two sides handed to a bipartite routine share a vertex."""


class TargetUnmatched(RekernError):
    """rematch_to_expose was asked to expose a vertex that is not matched."""


class PreconditionViolated(RekernError):
    """An operation's documented precondition does not hold."""


class InternalInvariantBroken(RekernError):
    """A structural guarantee the construction relies on failed to hold.

    Raised instead of silently repairing: a failure here falsifies the
    construction and must surface in tests.
    """


class InvalidCrown(RekernError):
    """A crown decomposition failed validation where a valid one is required."""


class NotACover(RekernError):
    """The vertex set handed in as a cover does not cover every edge."""


class WitnessNotACover(NotACover):
    """A reoptimization witness fails to be a vertex cover of the original graph."""


class ModificationMismatch(RekernError):
    """The instance's modification kind is not the one the kernelizer supports."""


class SpecModificationMismatch(RekernError):
    """A problem's (compositionality, monotonicity) pair does not support
    the requested local modification."""


class DegreeTooHigh(RekernError):
    """A vertex deletion produced more environment components than the
    configured bound allows."""


class UnsupportedProblem(RekernError):
    """The requested problem kind is not handled by this operation."""


class UnsupportedCombination(RekernError):
    """The requested (problem, modification) combination has no construction."""


class InvalidSetCover(RekernError):
    """A set-cover instance violates its invariants."""


class SizeGuardExceeded(RekernError):
    """An exact oracle was invoked beyond its size guard."""


class OracleTooSlow(SizeGuardExceeded):
    """An extremality check would require oracle calls beyond the size guard."""


class ParseError(RekernError):
    """Instance text could not be parsed; the message carries diagnostics."""
