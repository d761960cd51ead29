"""Exception types shared across the package."""


class ClaimCheckError(Exception):
    """Base class for all domain errors."""


class InvalidInputError(ClaimCheckError, ValueError):
    """An argument violates an operation's preconditions."""


class InvalidConfigError(ClaimCheckError, ValueError):
    """A configuration value is out of its allowed range."""


class EmptyClaimError(InvalidInputError):
    """The claim is empty after normalization."""


class EmptyAfterScreeningError(InvalidInputError):
    """Screening left no training instances for the second phase.

    Raised separately from plain invalid input because it signals that the
    first-phase model failed to reproduce any gold label, which usually means
    the first phase needs more training rather than the data being malformed.
    """


class NotFoundError(ClaimCheckError, KeyError):
    """A referenced session, verdict, or record does not exist."""


class ContentNotFoundError(NotFoundError):
    """The provider has no page for the requested id."""


class NoMoreContentError(ClaimCheckError):
    """The document has no further windows to show."""


class ProviderError(ClaimCheckError):
    """A search or content provider failed.

    ``retryable`` distinguishes transient transport failures from permanent
    ones so callers can decide whether to retry.
    """

    def __init__(self, message: str, *, retryable: bool = True):
        super().__init__(message)
        self.retryable = retryable


class ExportError(ClaimCheckError, IOError):
    """Writing or reading an export stream failed."""
