"""Exception hierarchy for hopfdepth."""


class HopfDepthError(Exception):
    """Base class for all errors raised by this package."""


class GroupError(HopfDepthError):
    """Invalid group data: bad Cayley table, closure cap exceeded, bad input file."""


class AxiomError(HopfDepthError):
    """A structure failed the Hopf algebra axiom check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SubalgebraError(HopfDepthError):
    """Candidate rows do not cut out a Hopf subalgebra (rank/closure failure)."""


class IntegralError(HopfDepthError):
    """Integral system is degenerate (wrong dimension, or counit vanishes on it)."""


class DecompositionError(HopfDepthError):
    """A multiplicity came out non-integral or negative: inconsistent inputs."""


class SplittingError(HopfDepthError):
    """Simultaneous eigenvector splitting of the class matrices failed."""


class NotNormalError(HopfDepthError):
    """Operation requires a normal subalgebra / normal subgroup."""


class UnsupportedAlgebraError(HopfDepthError):
    """Character computation is only implemented for the supported basis shapes."""
