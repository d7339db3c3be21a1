"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so the hierarchy is kept flat
and explicit rather than funnelling everything through ValueError.
"""

__all__ = [
    "DomainError",
    "StencilError",
    "AdmissibilityError",
    "ParabolicPointError",
    "NonConvergenceError",
    "ProfileSpecError",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class StencilError(DomainError):
    """A finite-difference stencil would sample points outside the domain."""


class AdmissibilityError(DomainError):
    """The curve or surface violates an admissibility requirement (e.g. f' = 0)."""


class ParabolicPointError(ValueError):
    """The second fundamental form is degenerate (LN - M^2 = 0) where it must not be."""


class NonConvergenceError(ArithmeticError):
    """A truncated series hit its term budget before meeting its tolerance."""


class ProfileSpecError(ValueError):
    """A textual profile specification could not be parsed."""
