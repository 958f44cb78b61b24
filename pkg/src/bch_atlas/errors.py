"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class ParityError(DomainError):
    """A closed form was asked for an even designed distance."""


class OutOfTheoremRange(DomainError):
    """No closed form covers the requested input; fall back to brute force."""


class UnsupportedFamily(DomainError):
    """The length has m = 0 (mod 8) or t below the family floor."""


class CapacityError(DomainError):
    """The requested field is larger than the desk-scale cap."""


class DegenerateCodeError(DomainError):
    """The generator polynomial would have degree n (the zero code)."""
