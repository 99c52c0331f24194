"""Exception types shared across the package."""


class CocircularError(Exception):
    """Base class for all package-specific errors."""


class CollisionError(CocircularError, ValueError):
    """Two bodies are closer than the collision threshold (chord < 1e-13)."""


class OrderingError(CocircularError, ValueError):
    """Indices or angles do not respect the required circular ordering."""


class InfeasibleStepError(CocircularError, ValueError):
    """A finite-difference perturbation broke the strict angle ordering."""


class NotApplicableError(CocircularError, ValueError):
    """A closed-form certificate was requested outside its hypotheses."""


class UnconvergedError(CocircularError, ValueError):
    """An operation requiring a converged minimizer received an unconverged one."""
