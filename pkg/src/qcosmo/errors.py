"""Exception types shared across the package."""


class QcosmoError(Exception):
    """Base class for all package-specific errors."""


class InvalidTruncationError(QcosmoError, ValueError):
    """Truncation dimension too small or not usable for the request."""


class UnsupportedBasisError(QcosmoError, ValueError):
    """Requested operator is not defined in the chosen basis."""


class ShapeError(QcosmoError, ValueError):
    """Operator/state dimensions do not line up."""


class HermiticityError(QcosmoError, ValueError):
    """Input matrix failed a Hermiticity check."""


class InconsistentInitialDataError(QcosmoError, ValueError):
    """Initial data violates the Hamiltonian constraint."""


class DomainError(QcosmoError, ValueError):
    """Evaluation left the mathematically valid domain."""


class NonConvergenceError(QcosmoError, RuntimeError):
    """A quadrature or iteration failed to converge."""


class NoBracketedMinimumError(QcosmoError, ValueError):
    """No local minimum could be bracketed near the supplied guess."""


class NoBarrierError(QcosmoError, ValueError):
    """Cubic coefficient vanishes; there is no tunneling barrier."""


class DomainTruncationError(QcosmoError, ValueError):
    """Effective potential overflowed; reports the largest safe coordinate."""

    def __init__(self, message, safe_bound=None):
        super().__init__(message)
        self.safe_bound = safe_bound


class ConfigError(QcosmoError, ValueError):
    """Run configuration failed schema validation."""
