"""Exception types shared by every module."""

from __future__ import annotations


class NotReal(ValueError):
    """A conjugation-fixed (real) field element or matrix was required."""


class Singular(ZeroDivisionError):
    """A matrix with zero determinant was inverted."""


class DomainMismatch(ValueError):
    """Two spans over different scalar domains were compared."""


class NotClosed(ValueError):
    """An invariant needing a Lie subalgebra got a span that is not closed."""


class NotACocycle(ValueError):
    pass


class NotInSL3(ValueError):
    pass


class OutOfRange(ValueError):
    """A parameter binding violates a family's printed constraints."""


class SingularSample(ValueError):
    """A parametrized family was sampled at a point where it is undefined."""


class UnknownCase(KeyError):
    pass


class IOFailure(OSError):
    """Reading or writing a serialized catalog failed."""


class SchemaMismatch(ValueError):
    """A serialized catalog carries an unexpected schema version or unknown names."""
