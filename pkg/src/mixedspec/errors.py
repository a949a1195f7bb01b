"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """Invalid domain, boundary partition, or other bad input."""


class UnsupportedDomain(DomainError):
    """No closed-form spectrum is known for this domain/partition."""


class NoSteklovBoundary(DomainError):
    """Steklov-type solve requested but the non-Dirichlet part F is empty."""


class BracketError(RuntimeError):
    """A root bracket could not be established (seed bound violated)."""


class NumericalError(RuntimeError):
    """An eigensolver or other numerical routine failed to converge."""


class WeylFitError(NumericalError):
    """The spectrum tail cannot support a growth-rate fit."""
