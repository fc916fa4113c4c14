"""Exception types shared across the package."""


class NchoZetaError(Exception):
    """Base class for all errors raised by nchozeta."""


class DomainError(NchoZetaError, ValueError):
    """An argument lies outside the domain an operation supports."""


class InvalidParams(NchoZetaError, ValueError):
    """Oscillator parameters violate alpha > 0, beta > 0, alpha*beta > 1."""


class NoConvergence(NchoZetaError, RuntimeError):
    """A series or quadrature failed to reach tolerance within its budget."""


class BranchInconsistency(NchoZetaError, ArithmeticError):
    """The two square-root branch choices of the elliptic integrand disagree."""


class EigensolveFailure(NchoZetaError, RuntimeError):
    """The dense symmetric eigensolver did not converge."""
