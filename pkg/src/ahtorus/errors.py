"""Exception hierarchy.

Every error raised on bad input derives from :class:`AHError`.  The CLI maps
the three families (schema, precondition, undecided) to distinct exit codes.
"""


class AHError(Exception):
    """Base class for all errors raised by ahtorus."""


class PreconditionError(AHError, ValueError):
    """Input violates a documented precondition of an operation."""


class RankDeficient(PreconditionError):
    pass


class TorsionCokernel(PreconditionError):
    pass


class ZeroVector(PreconditionError):
    pass


class ZeroDirection(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NotPointed(PreconditionError):
    """A polyhedron or cone contains a line and has no vertex representation."""


class NotStronglyConvex(PreconditionError):
    pass


class FewerThanTwoRays(PreconditionError):
    pass


class NotFullyHyperbolic(PreconditionError):
    pass


class StructureMismatch(PreconditionError):
    pass


class UnboundedEvaluation(PreconditionError):
    pass


class NotIrreducible(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class UnsupportedShape(PreconditionError):
    pass


class NotHomogeneous(PreconditionError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = list(offending)


class ParametrizationMismatch(PreconditionError):
    pass


class NotAffineQuotient(PreconditionError):
    pass


class NotFound(PreconditionError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class SchemaError(AHError):
    """Job document does not match the published JSON schema."""

    def __init__(self, message, pointer=""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


class UndecidedError(AHError):
    """A decision procedure could not reach a verdict with exact data."""


class BoundTooSmall(UserWarning):
    """Enumeration bound is provably too small for a complete answer."""
