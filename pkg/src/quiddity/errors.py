"""Exception types shared across the package."""


class NotASolutionError(ValueError):
    """A word was required to solve M_n(a) = +/-M for some target and does not."""


class InvalidDissectionError(ValueError):
    """A dissection failed validation where a valid one was required."""
