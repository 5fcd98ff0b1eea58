from typing import Any


class CoxinvException(Exception):
    """General exception of the library, whenever a specific reason can't be determined."""

    extra: dict[str, Any] = {}

    def __init__(self, *args, **kwargs):
        self.extra = kwargs.pop('extra', self.extra)
        super().__init__(*args)

    def get_extra_details(self) -> dict:
        if self.extra:
            return self.extra
        return {}


class RingMismatchError(CoxinvException):
    pass


class ArityError(CoxinvException):
    pass


class UnknownVariableError(CoxinvException):
    pass


class ZeroDivisorError(CoxinvException, ZeroDivisionError):
    pass


class BadPointError(CoxinvException):
    """A denominator vanishes at the evaluation point; the caller is expected to resample."""


class NotInDenominatorBasisError(CoxinvException):
    """A division was requested by something that is not a product of declared denominators."""


class GoldenFileError(CoxinvException):
    pass


class InconsistentSystemError(CoxinvException):
    """The target does not lie in the span of the candidate monomials."""


class RankDeficientError(CoxinvException):
    """The evaluation system stayed rank deficient after drawing the maximum number of points."""


class GroupClosureError(CoxinvException):
    pass


class CLIException(CoxinvException):
    """General CLI Exception, whenever a specific reason can't be determined."""
