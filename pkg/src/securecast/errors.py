"""Exception types shared across the package."""


class SecurecastError(Exception):
    """Base class for all package-specific errors."""


class UsageError(SecurecastError, ValueError):
    """Caller passed parameters that violate a documented precondition."""


class FieldMismatchError(UsageError):
    """Operands do not belong to the same finite field."""


class GenerationError(SecurecastError):
    """Decoding-matrix generation exhausted its retry budget."""


class NotDecodableError(SecurecastError):
    """A client is missing required packets and cannot decode yet."""


class InfeasibleInstanceError(SecurecastError):
    """A wanted packet is held by no cluster member; cooperation cannot finish."""


class RoundCapError(SecurecastError):
    """A recovery loop hit its round cap without draining the wants sets."""


class AuditError(SecurecastError):
    """An instant-decodability audit found an inconsistent round record."""
