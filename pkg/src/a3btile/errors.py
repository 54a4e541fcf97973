"""Exception hierarchy shared by all modules."""


class A3bError(Exception):
    """Base class for every error raised by the package."""


class InvalidParameterError(A3bError, ValueError):
    """An argument violates a documented precondition (wrong parity, too small, ...)."""


class DomainError(A3bError, ValueError):
    """A parameter lies outside the admissible domain of a family."""

    def __init__(self, message: str, bound: str = ""):
        super().__init__(message)
        self.bound = bound


class DegenerateBetaError(DomainError):
    """beta coincides with gamma at f=6: the quadrilateral degenerates."""


class RhombusReductionError(DomainError):
    """beta = 1 - 2/f: the quadrilateral reduces to a rhombus (type a^4)."""


class SingularConfigurationError(A3bError, ArithmeticError):
    """A formula divides by sin(alpha) or sin(delta) which vanishes."""


class DegeneracyError(A3bError, ArithmeticError):
    """A residual vanishes identically on a family, so roots are meaningless."""


class PreconditionError(A3bError, ValueError):
    """Input vectors are linearly dependent where independence is required."""


class InconsistentQuadrilateralError(A3bError, ArithmeticError):
    """The boundary walk of a quadrilateral does not close."""


class GeometricInconsistencyError(A3bError, ArithmeticError):
    """Propagating placements around a tiling does not close up."""
