"""Exception hierarchy shared by every module."""


class WadgeLabError(Exception):
    """Base class for all library errors."""


class InvalidSequence(WadgeLabError, ValueError):
    pass


class OutOfWindow(WadgeLabError, ValueError):
    """A query needs information beyond what a finite prefix determines."""


class Infeasible(WadgeLabError):
    def __init__(self, message, maximum):
        super().__init__(message)
        self.maximum = maximum


class InvalidGraph(WadgeLabError, ValueError):
    pass


class OutOfRange(WadgeLabError, ValueError):
    pass


class PremiseNotSatisfied(WadgeLabError):
    pass


class TruncationTooSmall(WadgeLabError):
    pass


class SeedInvalid(WadgeLabError, ValueError):
    pass


class PreconditionViolated(WadgeLabError):
    pass


class OutOfLadder(WadgeLabError, ValueError):
    pass


class ConsistencyViolation(WadgeLabError):
    """A profile maps a D-point to an E-point (or conversely)."""

    def __init__(self, parameter, alpha_label, beta_label):
        self.parameter = parameter
        self.alpha_label = alpha_label
        self.beta_label = beta_label
        super().__init__(
            f"consistency broken at parameter {parameter}: "
            f"alpha-side {alpha_label} vs beta-side {beta_label}"
        )


class BoundsTooTight(WadgeLabError):
    pass


class FormatError(WadgeLabError, ValueError):
    """Malformed input in one of the plain-text file formats."""
