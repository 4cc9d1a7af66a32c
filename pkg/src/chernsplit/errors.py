"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text or JSON could not be turned into a domain object."""


class DomainError(ValueError):
    """Input parsed fine but lies outside an operation's domain."""
