"""Exception types shared across the package."""


class EOCurvesError(Exception):
    """Base class for all package errors."""


class NonzeroResidue(EOCurvesError):
    """An antiderivative would contain a logarithm (nonzero simple-pole residue)."""


class UnfactoredDenominator(EOCurvesError):
    """A denominator has a factor outside the declared linear factors."""


class SingularMatrix(EOCurvesError):
    """Exact linear solve hit a singular (or rank-deficient) matrix."""


class OverdeterminedMismatch(EOCurvesError):
    """Extra grid points disagree with the solved coefficient table."""


class DegenerateMap(EOCurvesError):
    """Moebius substitution with ad - bc = 0."""


class InvalidProfile(EOCurvesError):
    """A count was requested for an invalid (g, n, mu) key."""


class AsymmetricResult(EOCurvesError):
    """An integrated free energy failed its symmetry assertion."""


class PathMismatch(EOCurvesError):
    """Two independent constructions of the same object disagree."""


class InsufficientData(EOCurvesError):
    """An operator build was asked for more orders than the supplied data allows."""


class DivisionBySingularSymbol(EOCurvesError):
    """The first y-derivative of a curve symbol vanishes identically."""


class SeriesOrderError(EOCurvesError):
    """A truncated-series coefficient beyond the retained order was accessed."""


class SizeMismatch(EOCurvesError):
    """Character evaluation needs |mu| = |lambda|."""


class ExactDivisionError(EOCurvesError):
    """An exact polynomial division left a nonzero remainder."""


class CorruptCache(EOCurvesError):
    """A persisted cache entry failed validation."""
