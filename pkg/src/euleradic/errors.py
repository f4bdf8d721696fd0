"""Exception types shared across the package."""


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds a configured resource budget."""


class PathValidationError(ValueError):
    """A step sequence does not describe a valid walk in the Euler graph."""


class DecodeError(ValueError):
    """An encoding sequence matches no path from the given base vertex."""


class MaximalPathError(Exception):
    """The successor map is undefined: the path is already maximal."""
