"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the validated parameter domain."""


class ConvergenceError(RuntimeError):
    """An iterative scheme exhausted its term or iteration budget."""


class BracketError(RuntimeError):
    """A root bracket with a sign change could not be established."""
