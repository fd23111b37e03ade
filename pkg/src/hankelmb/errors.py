"""Typed errors shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleProximityError(DomainError):
    """Evaluation point within 1e-12 of a gamma-function pole."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to converge within its term cap."""


class AsymptoticDivergenceError(ConvergenceError):
    """Asymptotic series whose first term is already the smallest; the
    expansion parameter is outside the usable regime."""


class ContourError(RuntimeError):
    """Contour quadrature failure: non-finite node, non-decaying tail,
    or a tolerance that cannot be met within the truncation caps."""


class GrowthError(ContourError):
    """Coefficient growth along the imaginary direction is too fast for
    the contour representation to converge."""
