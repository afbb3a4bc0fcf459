"""Exceptions raised by heckedim."""

__all__ = [
    "HeckeDimError",
    "DomainError",
    "NotHyperbolicError",
    "ConvergenceError",
    "LadderError",
    "PriorError",
    "CertificationError",
]


class HeckeDimError(Exception):
    """Base class for every error raised by heckedim."""


class DomainError(HeckeDimError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotHyperbolicError(HeckeDimError, ValueError):
    """A group element has |trace| <= 2."""


class ConvergenceError(HeckeDimError, ArithmeticError):
    """A series, iteration or scan did not converge within its budget."""


class LadderError(ConvergenceError):
    """The zeros s_k(w) do not settle as k grows, or a rung has no zero."""


class PriorError(HeckeDimError):
    """The a-priori lower bound fed into a certification contradicts its result."""


class CertificationError(HeckeDimError):
    """The ladder estimate of delta(w) falls outside its certified interval."""
