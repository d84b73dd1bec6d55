"""Exception hierarchy shared by every module."""


class LucasError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(LucasError, ValueError):
    pass


class ZeroParameter(ParameterError):
    pass


class ZeroDiscriminant(ParameterError):
    pass


class DomainError(LucasError, ValueError):
    """An argument is outside the domain where values are exact integers."""


class NegativeIndexUnsupported(DomainError):
    pass


class UnitQRequired(DomainError):
    pass


class SumRequiresUnitQ(UnitQRequired):
    pass


class DomainViolation(DomainError):
    pass


class MissingContext(DomainError):
    pass


class UnknownIdentity(LucasError, KeyError):
    pass


class InexactDivision(LucasError, ArithmeticError):
    """A division that must be exact left a remainder.

    Never expected for valid input; raising it means a formula or an
    implementation is wrong.
    """

    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{numerator} is not divisible by {denominator}")


class CorrectnessAlarm(LucasError):
    """An identity assumed to be true produced a counterexample."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"{report.identity}: {len(report.counterexamples)} counterexample(s) "
            f"on an assumed-true identity"
        )
