"""
Module providing the exceptions raised by the calculation components.

Two families are distinguished, the CLI maps them to different exit codes:
input problems (bad fixtures, out-of-domain arguments, unparsable quantities) and
numerical failures (thresholds, divergences, nonconvergent quadrature).
"""


class QedVacuumError(Exception):
    pass


class InputValidationError(QedVacuumError, ValueError):
    pass


class ConstantsSchemaError(InputValidationError):
    pass


class ConstantsIntegrityError(InputValidationError):
    pass


class ParticleTableError(InputValidationError):
    pass


class DomainError(InputValidationError):
    pass


class QuantityParseError(InputValidationError):
    pass


class NumericalError(QedVacuumError, ArithmeticError):
    pass


class ThresholdError(NumericalError):
    pass


class DivergenceError(NumericalError):
    pass


class ZeroPermittivityError(NumericalError):
    pass


class QuadratureError(NumericalError):
    def __init__(self, message: str, value: float, abserr: float):
        super().__init__(f"{message} (value={value:.6e}, estimated error={abserr:.3e})")
        self.value = value
        self.abserr = abserr
