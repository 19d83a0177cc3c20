"""Exception types shared across the package."""


class EvoAlgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(EvoAlgError, ValueError):
    """Malformed field descriptor, scalar string, family spec, or JSON document."""


class FieldMismatchError(EvoAlgError, ValueError):
    """Operands belong to different fields."""


class SingularMatrixError(EvoAlgError, ValueError):
    """A nonsingular structure matrix was required."""


class DimensionCapError(EvoAlgError, ValueError):
    """Input exceeds the hard size cap of an exhaustive search."""


class CapExceededError(EvoAlgError, RuntimeError):
    """A closure or enumeration grew past its configured cap."""


class UnclosedGroupError(EvoAlgError, ValueError):
    """An operation needed a group that is closed under composition."""
