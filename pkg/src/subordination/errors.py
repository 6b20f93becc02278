"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the region where a quantity is defined."""


class NonConvergence(RuntimeError):
    """A series or iteration hit its budget before meeting its tolerance."""


class NoFiniteThreshold(RuntimeError):
    """A threshold constraint cannot be met for any beta up to the search ceiling."""


class DegenerateCurve(ValueError):
    """A closed curve encloses (numerically) zero area."""


class ZeroEncountered(ArithmeticError):
    """A function vanished at a sample where its reciprocal is needed."""


class InadmissibleSample(ValueError):
    """Requested admissibility data violates the admissibility constraints."""
