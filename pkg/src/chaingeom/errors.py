"""Exception types shared across the package."""


class ChainGeomError(Exception):
    """Base class for all domain errors raised by this package."""


class CapExceeded(ChainGeomError):
    """An enumeration would exceed its configured size cap.

    ``partial`` carries whatever was computed before the cap was hit, so
    callers that opted into partial results can resume or report honestly.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DescriptorError(ChainGeomError):
    """A field/ring/representation descriptor string could not be parsed."""


class MorphismConditionError(ChainGeomError):
    """A morphism construction violates its defining subfield condition."""


class VerificationError(ChainGeomError):
    """An internal cross-check failed; indicates a bug, not bad input."""
