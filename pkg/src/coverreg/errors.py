"""Exception hierarchy shared by every module."""


class CoverRegError(Exception):
    """Base class for all library errors."""


class Graph6Error(CoverRegError, ValueError):
    """Malformed graph6 record."""


class CapacityError(CoverRegError, ValueError):
    """A graph or construction exceeds the 32-vertex word size."""


class ResourceLimitError(CoverRegError):
    """An enumeration would exceed a configured resource cap."""


class UndefinedInputError(CoverRegError, ValueError):
    """The quantity is not defined for this input (e.g. edgeless graph)."""


class InvalidPartitionError(CoverRegError, ValueError):
    pass


class DimensionError(CoverRegError, ValueError):
    """Ideals over different ambient rings were combined."""


class DomainError(CoverRegError, ValueError):
    pass
