"""Exception types shared across the package.

Budget exhaustion is never an exception: searches and solvers report it
through a status field so partial results stay usable.
"""


class TuranError(Exception):
    """Base class for all package-specific errors."""


class DomainNotSymmetricError(TuranError, ValueError):
    """A candidate domain is not symmetric about 0 or misses 0."""

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class InvalidHomomorphismError(TuranError, ValueError):
    """Generator images are incompatible with the generator orders."""


class WitnessRejectedError(TuranError):
    """A claimed lower-bound witness failed validation.

    `offender` carries the leaking support element or the character with a
    negative transform value.
    """

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class CertificateInvalidError(TuranError):
    """A claimed certificate failed its machine check."""


class MTooSmallError(TuranError):
    """A torus reduction modulus collapses two domain points.

    `collision` is a pair of lattice points with the same residue.
    """

    def __init__(self, message, collision=None):
        super().__init__(message)
        self.collision = collision


class NumericalInconsistencyError(TuranError):
    """Two equivalent characterizations disagreed beyond tolerance.

    Never silently resolved: the caller must see this.
    """
