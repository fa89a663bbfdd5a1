"""Exception types shared across the package."""


class MultfreeError(Exception):
    """Base class for domain errors raised by this package."""


class RatioNotGreaterThanOne(MultfreeError):
    """The multiplier reduces to a ratio <= 1."""


class NotAChainStart(MultfreeError):
    """A chain walk was asked to begin at an element that has a predecessor."""


class LevelOutOfRange(MultfreeError):
    """A valuation level i with b**i > n was requested."""


class TooLargeForOracle(MultfreeError):
    """An exhaustive enumeration oracle was given more input than it can enumerate."""


class LambdaOutOfRange(MultfreeError):
    """The two-sided tail bound only holds for deviations lambda <= 1."""


class DomainError(MultfreeError):
    """Input outside the mathematical domain of a formula (e.g. ln ln n <= 0)."""
