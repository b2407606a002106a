"""Exception types raised across the package."""


class DomainInterpError(ValueError):
    """Base class for all errors raised by dinterp."""


class ShapeMismatch(DomainInterpError):
    pass


class ZeroCoverage(DomainInterpError):
    """A grid node is not covered by any subdomain (all raw channels zero)."""


class OutOfExtent(DomainInterpError):
    pass


class DegenerateNeighborhood(DomainInterpError):
    """Both straddling similarity metrics vanish, so their ratio is undefined."""


class FactorIncompatible(DomainInterpError):
    pass


class MalformedInput(DomainInterpError):
    """An input file could not be parsed; the message names file and line."""


class IoFailure(DomainInterpError, OSError):
    pass
