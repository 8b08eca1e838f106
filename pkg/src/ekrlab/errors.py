"""Exception types shared across the library."""


class EkrLabError(Exception):
    """Base class for all library errors."""


class DomainError(EkrLabError, ValueError):
    """An argument violates an operation's precondition."""


class FormatError(EkrLabError, ValueError):
    """A family file or report payload is malformed."""


class ResourceLimitError(EkrLabError, RuntimeError):
    """An instance exceeds a configured size limit."""


class ContradictionError(EkrLabError, RuntimeError):
    """A complete search exhausted where theory guarantees a witness.

    Raising this means either the input violated an unchecked hypothesis
    or the implementation is wrong; tests treat it as a failure.
    """
