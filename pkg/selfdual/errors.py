from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1  # a requested property does not hold
    BAD_ARGUMENTS = 2  # malformed command line or invalid construction parameters


class SelfDualError(Exception):
    pass


# planar_map
class NonPlanarEmbedding(SelfDualError):
    pass


class InconsistentRotation(SelfDualError):
    pass


class NotTwoConnected(SelfDualError):
    pass


class NotQuadrangulation(SelfDualError):
    pass


class NotAnEdge(SelfDualError):
    pass


class VertexNotOnFace(SelfDualError):
    pass


# constructions
class InvalidCursor(SelfDualError):
    pass


class InvalidTuple(SelfDualError):
    pass


class InvalidParameter(SelfDualError):
    pass


class PreconditionViolated(SelfDualError):
    pass


# verify
class NotPolyhedral(SelfDualError):
    pass


class MissingLabels(SelfDualError):
    pass


class LabelsUnavailable(SelfDualError):
    pass


class OrderCapExceeded(SelfDualError):
    pass


class OddDegreeSum(SelfDualError):
    pass
