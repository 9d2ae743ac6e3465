"""Exception types raised by the library."""


class ParetoGofError(Exception):
    """Base class for all library errors."""


class DegenerateSampleError(ParetoGofError):
    """Sample carries no usable variation (e.g. all observations equal)."""


class SupportViolationError(ParetoGofError):
    """An observation lies below the known scale parameter."""


class ContractViolationError(ParetoGofError):
    """An operation was called with an incompatible fit or argument."""


class DegenerateSpacingError(ParetoGofError):
    """A spacing-based estimator hit a zero spacing (tied order statistics)."""


class BandwidthError(ParetoGofError):
    """Kernel bandwidth could not be formed (zero sample variance)."""


class WeightSingularityError(ParetoGofError):
    """A Mellin weight integral diverges for the given data/tuning parameter."""


class NonfiniteStatisticError(ParetoGofError):
    """A test statistic is undefined on the given inputs."""


class InsufficientResolutionError(ParetoGofError):
    """Too few replications to resolve the requested quantile."""
