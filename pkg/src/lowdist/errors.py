"""Exception types shared across the package."""


class LowdistError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(LowdistError, ValueError):
    """Malformed graph text input."""


class DisconnectedGraphError(LowdistError, ValueError):
    """An operation required a connected graph."""


class NonUnitWeightsError(LowdistError, ValueError):
    """An operation required all edge weights to equal 1."""


class NotATreeError(LowdistError, ValueError):
    """The host graph is not a tree."""


class NotNonContractingError(LowdistError, ValueError):
    """An embedding contracted some pair where non-contraction was required."""


class NotAProperColoringError(LowdistError, ValueError):
    """A claimed 3-coloring is not proper (or not a 3-coloring at all)."""


class DistortionBelowTwoError(LowdistError, ValueError):
    """Hardness instances are only defined for target distortion >= 2."""


class InstanceTooLargeError(LowdistError, ValueError):
    """A brute-force oracle was asked to exceed its configured size cap."""


class ResourceBudgetExceededError(LowdistError, RuntimeError):
    """A search exceeded its configured state budget instead of thrashing."""
