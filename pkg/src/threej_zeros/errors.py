"""Exception types. Everything a caller can trigger with bad input derives
from :class:`DomainError`; the CLI maps those to exit code 3."""


class DomainError(ValueError):
    pass


class NotPhysical(DomainError):
    """A Regge entry would be negative or non-integral."""


class NotOrderZeroShape(DomainError):
    pass


class OutOfRange(DomainError):
    """A contiguous symbol needed by a recurrence has a projection out of range."""


class NonTerminating(DomainError):
    pass


class DenominatorPole(DomainError):
    pass


class OutOfPhysicalDomain(DomainError):
    """A Gamma-function argument in a prefactor is a non-positive integer."""


class InconsistentLabeling(DomainError):
    pass


class PerfectSquare(DomainError):
    pass


class NotAZero(DomainError):
    pass


class FactorizationFailed(DomainError):
    pass


class NoUnitEntry(DomainError):
    pass


class OutOfDomain(DomainError):
    pass
