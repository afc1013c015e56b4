"""Exception types shared across the package."""


class DegeneracyError(ValueError):
    """A parameter specialization makes a factor vanish or share a root with a modulus."""


class ApplicabilityError(ValueError):
    """A statement was requested outside the range of n where it is asserted."""


class UnknownStatementError(KeyError):
    """No statement is registered under the requested id."""
