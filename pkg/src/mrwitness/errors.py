class DomainError(ValueError):
    """An argument violates an operation's documented preconditions."""
