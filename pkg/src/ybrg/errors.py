"""Exception hierarchy.

Every error raised on purpose by the package derives from ``YbrgError`` so that
callers (the CLI in particular) can separate domain failures from bugs.
"""


class YbrgError(ValueError):
    pass


class InvalidSlots(YbrgError):
    pass


class DimMismatch(YbrgError):
    pass


class EmptyComposition(YbrgError):
    pass


class SingularSMatrix(YbrgError):
    """The denominator sinh(x + iu) is too close to a pole of the R-matrix."""


class InvalidAnisotropy(YbrgError):
    pass


class NonHyperbolicRegime(YbrgError):
    pass


class DomainError(YbrgError):
    pass


class InvalidTime(YbrgError):
    pass


class PathMismatch(YbrgError):
    pass


class DivergedFlow(YbrgError):
    """Raised when an RG trajectory leaves the finite numbers.

    The last finite sample is kept in ``last_sample`` as ``(t, j_par, j_perp)``.
    """

    def __init__(self, message, last_sample=None):
        super().__init__(message)
        self.last_sample = last_sample


class PropagationDefect(YbrgError):
    """A propagated amplitude field fails the independent difference-equation check."""
