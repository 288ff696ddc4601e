"""Shared exception types.

``NoSolution`` is deliberately absent: routines that solve linear
systems return ``None`` when no solution exists, since an unsolvable
system is an answer rather than a failure.
"""


class WittlabError(Exception):
    """Base class for all wittlab errors."""


class NotDivisible(WittlabError):
    """An exact division had a nonzero remainder."""


class ParameterMismatch(WittlabError):
    """Operands built with incompatible parameters (p, length, ring, ...)."""


class ResourceLimit(WittlabError):
    """A computation would exceed the configured size bound."""


class NotPLocal(WittlabError):
    """The base ring does not have the required integers invertible."""


class InvalidAlgebra(WittlabError):
    """An algebra description fails associativity or unit checks."""
