"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class GapSetError(DomainError):
    """A proposed gap set does not have an additively closed complement."""


class CoefficientOverflowError(ArithmeticError):
    """A polynomial coefficient left the signed 64-bit range."""
