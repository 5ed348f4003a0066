"""Exception hierarchy shared across the package."""


class KzratError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateScalar(KzratError):
    """A scalar was constructed with a zero denominator."""


class DivisionByZero(KzratError):
    """Division by the zero scalar."""


class EvaluationAtPole(KzratError):
    """The denominator vanishes at the requested evaluation point."""


class ScalarSyntaxError(KzratError):
    """Malformed scalar text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(ScalarSyntaxError):
    """An identifier other than z1/z2 appeared in scalar text."""


class DegenerateConfiguration(KzratError):
    """The two pole locations coincide."""


class UnsupportedSpectrum(KzratError):
    """The matrix does not have three distinct rational eigenvalues."""


class InvalidSeed(KzratError):
    """Seed vector is not an eigenvector matching its order."""


class UnsolvableResonance(KzratError):
    """At a resonant level the right-hand side has a component along the kernel."""

    def __init__(self, level: int, component):
        super().__init__(
            f"level {level} is resonant and the right-hand side has a nonzero "
            f"component {component} along the kernel eigenvector"
        )
        self.level = level
        self.component = component


class InvalidPath(KzratError):
    """A numeric integration path passes through a pole."""
