"""Exception hierarchy for bfmle.

All library errors derive from :class:`BfmleError` so callers (and the CLI)
can distinguish domain failures from programming errors.
"""


class BfmleError(Exception):
    """Base class for all bfmle errors."""


class LengthError(BfmleError, ValueError):
    """A raw sample has fewer than two observations."""


class DegenerateVariance(BfmleError, ValueError):
    """A sample is constant, so its empirical variance is zero."""


class NotCubic(BfmleError, ValueError):
    """The leading coefficient of a cubic is zero."""


class DomainError(BfmleError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""
