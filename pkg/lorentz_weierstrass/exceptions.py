class LorentzWeierstrassError(Exception):
    """Base class for every error raised by lorentz_weierstrass."""


class ContractViolation(LorentzWeierstrassError, ValueError):
    pass


class NullDivisor(LorentzWeierstrassError, ZeroDivisionError):
    """Division by an element on the null cone (or by zero)."""


class DenominatorOnNullCone(NullDivisor):
    """The denominator of a Mobius transformation is not invertible."""


class PoleError(LorentzWeierstrassError, ValueError):
    pass


class LightConeError(LorentzWeierstrassError, ValueError):
    pass


class ConstraintViolation(ContractViolation):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SingularNode(LorentzWeierstrassError, ValueError):
    pass


class PathBlocked(LorentzWeierstrassError):
    pass


class PeriodDetected(LorentzWeierstrassError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DegenerateMetric(LorentzWeierstrassError):
    pass


class UmbilicOrInvalid(LorentzWeierstrassError):
    pass


class UnknownExample(LorentzWeierstrassError, LookupError):
    pass


class ParamConstraintViolation(ContractViolation):
    pass


class EmptyMesh(LorentzWeierstrassError):
    pass
