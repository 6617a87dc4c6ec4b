class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class UndefinedSpanError(DomainError):
    """The requested overlap span is not a border length of the word."""


class NotRecurrentError(DomainError):
    """A word occurs only finitely often in one tail of a biinfinite word."""


class NeedsLongerDirectiveError(DomainError):
    """A truncated directive sequence cannot certify the requested data."""


class InvalidDirectiveError(DomainError):
    """A directive sequence produced a non-Sturmian factor count."""
