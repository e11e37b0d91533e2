"""Exception hierarchy shared across the package.

The CLI maps ValidationError to exit code 2 and GuardExceeded to exit
code 3; everything else is a genuine bug.
"""


class ClusterLatticeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ClusterLatticeError):
    """Malformed or out-of-contract input."""


class GuardExceeded(ClusterLatticeError):
    """A desk-scale enumeration guard was exceeded."""


class NotCrossing(ValidationError):
    """The two arcs do not cross, so no extension triangle exists."""


class NoNonzeroMorphism(ValidationError):
    """There is no nonzero morphism between the given arcs."""


class PreconditionViolated(ValidationError):
    """Inputs violate the labelling premise of a triangle construction."""
