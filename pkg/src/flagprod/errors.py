"""Exception types shared across the package."""


class FlagprodError(Exception):
    pass


class InvalidC(FlagprodError):
    """c is not a positive integer."""


class UnsolvableC(FlagprodError):
    """The parameter equation has no solutions for this c (c = 2 mod 3)."""


class NonIntegralLambda(FlagprodError):
    """Orbit counting gave a non-integer pair multiplicity."""


class NotASolution(FlagprodError):
    """(c, m, omega) does not satisfy the parameter equation."""


class LabelsExceedOmega(FlagprodError):
    """The base block needs (c+1)m column labels but only omega are available."""


class OrbitCapExceeded(FlagprodError):
    """Orbit closure grew past the configured cap."""


class UnknownFamily(FlagprodError):
    """Audit case filter does not name a known group family."""


class DesignFileError(FlagprodError):
    """Malformed design file."""


class AuditError(FlagprodError):
    """A case audit produced a parameter the elimination cannot dispose of."""
