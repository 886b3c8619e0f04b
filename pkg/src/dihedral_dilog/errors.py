"""Exception types raised by the library."""


class DihedralDilogError(Exception):
    pass


class InvalidSizeError(DihedralDilogError, ValueError):
    """Polygon size too small (n < 4) or otherwise unusable."""


class TargetTooSmallError(InvalidSizeError):
    """Forgetting would leave fewer than four marked points."""


class InvalidArgumentError(DihedralDilogError, ValueError):
    pass


class DegenerateConfigurationError(DihedralDilogError, ValueError):
    """Repeated points, two points at infinity, or points out of cyclic order."""


class DomainError(DihedralDilogError, ValueError):
    """Argument outside [0, 1] for the real dilogarithms."""


class WrongCaseError(DihedralDilogError, ValueError):
    """Certificate builder called with the wrong parity or a too small n."""
