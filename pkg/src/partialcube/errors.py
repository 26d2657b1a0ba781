"""Exception hierarchy.

Every error raised by the package derives from :class:`PartialCubeError`,
which is itself a :class:`ValueError`, so callers can catch either.
"""


class PartialCubeError(ValueError):
    pass


# graph construction
class SelfLoopError(PartialCubeError):
    pass


class DuplicateEdgeError(PartialCubeError):
    pass


class EndpointOutOfRangeError(PartialCubeError):
    pass


class LabelWidthMismatchError(PartialCubeError):
    pass


class NonUnitHammingEdgeError(PartialCubeError):
    pass


class DuplicateLabelError(PartialCubeError):
    pass


class BaseOutOfRangeError(PartialCubeError):
    pass


# metric / structure
class UnreachableError(PartialCubeError):
    pass


class EmptySetError(PartialCubeError):
    pass


class DisconnectedError(PartialCubeError):
    pass


class NotBipartiteError(PartialCubeError):
    pass


class NotPartialCubeError(PartialCubeError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IsometryViolationError(PartialCubeError):
    pass


class SingletonGraphError(PartialCubeError):
    pass


class DimensionTooLargeError(PartialCubeError):
    pass


class TooLargeError(PartialCubeError):
    pass


# polynomials
class PolyOverflowError(PartialCubeError, OverflowError):
    pass


class NegativeCoefficientError(PartialCubeError):
    pass


class ArityMismatchError(PartialCubeError, TypeError):
    pass


# generators
class WidthMismatchError(PartialCubeError):
    pass


class EmptyXError(PartialCubeError):
    pass


class EmptyInputError(PartialCubeError):
    pass


class InvalidSpecError(PartialCubeError):
    pass


# G+ closure
class IntermediateNotPartialCubeError(PartialCubeError):
    def __init__(self, message, stage=None, labels=None):
        super().__init__(message)
        self.stage = stage
        self.labels = labels


class StageLimitExceededError(PartialCubeError):
    pass


# cli / files
class LimitExceededError(PartialCubeError):
    pass


class ParseError(PartialCubeError):
    pass
