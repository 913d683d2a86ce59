"""Exception hierarchy shared by every module of the toolkit."""


class DualPolarError(ValueError):
    """Base class for all toolkit errors."""


class InvalidMatrix(DualPolarError):
    pass


class DimensionError(DualPolarError):
    pass


class FormNotDefinite(DualPolarError):
    pass


class NotInvolution(DualPolarError):
    pass


class DependentBasis(DualPolarError):
    pass


class NotClosed(DualPolarError):
    pass


class AmbientNotSemisimple(DualPolarError):
    pass


class NotStarClosed(DualPolarError):
    pass


class NotCartan(DualPolarError):
    pass


class NotInP(DualPolarError):
    pass


class NotThetaStable(DualPolarError):
    """Raised when a subalgebra is not invariant under the Cartan involution.

    ``defect`` is ``dim(h) - dim(h & k) - dim(h & p)``.
    """

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class DualityBroken(DualPolarError):
    pass


class NotCompactForm(DualPolarError):
    pass


class NotPolar(DualPolarError):
    pass


class SamplingFailed(DualPolarError):
    pass


class Unsupported(DualPolarError):
    pass


class NotCommuting(DualPolarError):
    pass


class InputError(DualPolarError):
    """Malformed or schema-violating input file."""
