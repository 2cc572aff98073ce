"""Exception types shared across the package."""


class BracketError(ValueError):
    """Root bracket does not enclose a sign change."""


class ConvergenceError(RuntimeError):
    """Eigenvalue iteration exhausted its sweep budget."""


class SingularMatrixError(ArithmeticError):
    """Pivot fell below the breakdown threshold during factorization."""


class EnumerationError(RuntimeError):
    """Failed to bracket the requested number of characteristic roots."""


class PoleError(ValueError):
    """Evaluation point coincides with a pole of the reduced determinant."""


class BranchError(ValueError):
    """Shift equation has no root on the first branch for these inputs."""


class ConfinementError(RuntimeError):
    """Effective potential has no interior minimum in the scan range."""


class SaddleError(ValueError):
    """Curvature at the expansion point is not positive."""


class PencilError(ValueError):
    """Mass matrix of the linear eigenvalue pencil is singular."""
