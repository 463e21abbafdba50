"""
Stores all the Exceptions that can be raised while building or checking an algebra.

Errors fall in two families. :py:class:`QuiverHeckeError` subclasses signal bad input or an
arithmetic condition that makes a computation meaningless. :py:class:`CheckFailure` subclasses are
raised by the assertion helpers of :py:class:`CheckInterface <quiverhecke.CheckInterface.CheckInterface>`
when an identity that should hold does not.
"""


class QuiverHeckeError(Exception):
    """ Base class for every error raised by quiverhecke """


class InvalidRootDatum(QuiverHeckeError):
    """ Raised when root data violate the pairing, positivity or reflection invariants """


class NonCanonicalizable(QuiverHeckeError):
    """ Raised when coset canonicalisation does not converge within #Φ⁺ steps """


class DivisionByZeroDenominator(QuiverHeckeError):
    """ Raised when a rational function would get a zero denominator """


class InternalDivisibilityFailure(QuiverHeckeError):
    """ Raised when a division that must be exact leaves a remainder """


class NotLinearlyFactorable(QuiverHeckeError):
    """ Raised when inverting a polynomial that is not a product of linear forms """


class UnsuitableData(QuiverHeckeError):
    """ Raised in strict mode when the representation data fail the suitability checks """


class NonIntegralResult(QuiverHeckeError):
    """ Raised when applying an operator produces a non-polynomial component """


class ExtractionStuck(QuiverHeckeError):
    """ Raised when braid-defect extraction meets a support element outside the allowed range """


class NotHomogeneous(QuiverHeckeError):
    """ Raised when asking for the degree of an operator whose terms have different degrees """


class NotInSpan(QuiverHeckeError):
    """ Raised when normal-form elimination cannot clear an operator """


class NonPolynomialCoefficient(QuiverHeckeError):
    """ Raised when a normal-form coefficient is not a polynomial """


class ZeroWeight(QuiverHeckeError):
    """ Raised when an Euler class is requested for a multiset containing the zero weight """


class ZeroEulerClass(QuiverHeckeError):
    """ Raised when a localization formula would divide by a vanishing Euler class """


class UnsupportedDimension(QuiverHeckeError):
    """ Raised when a quiver dimension vector is outside the supported range """


class ParseError(QuiverHeckeError):
    """ Raised when an operator expression or config cannot be parsed

    :param str message: What went wrong.
    :param int location: Character offset of the problem, if known.
    """

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        if self.location is None:
            return super().__str__()
        return "{} (at char {})".format(super().__str__(), self.location)


class UnknownIndex(QuiverHeckeError):
    """ Raised when an expression refers to a coset, variable or simple reflection that does not exist """


class ConfigError(QuiverHeckeError):
    """ Raised when a configuration document is malformed """


class CheckFailure(QuiverHeckeError):
    """ Base class for the errors raised when an expected identity does not hold during a check """


class OperatorMismatch(CheckFailure):
    """ Raised when two twisted operators that should agree differ """


class IdentityMismatch(CheckFailure):
    """ Raised when two polynomials, rational functions or multisets that should agree differ """


class ReportViolation(CheckFailure):
    """ Raised when a report-producing computation lists violations """


class CheckSkipped(Exception):
    """ Raised inside a check that does not apply to, or is too large for, the current configuration

    :param bool over_bound: The check applies but ``#𝕎`` exceeds the configured bound, so the run is incomplete.
    """

    def __init__(self, message, over_bound=False):
        super().__init__(message)
        self.over_bound = over_bound
