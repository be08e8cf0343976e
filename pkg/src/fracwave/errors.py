"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`FracwaveError`
and carries a short machine-readable ``code`` matching the failure kinds listed
in the API docs (``"moment-out-of-range"``, ``"series-not-applicable"``, ...).
"""


class FracwaveError(Exception):
    code = "fracwave-error"


class DomainError(FracwaveError, ValueError):
    """A parameter lies outside the domain where the formula is defined."""

    code = "domain-error"


class SeriesDomainExceeded(DomainError):
    code = "series-domain-exceeded"


class SeriesNotApplicable(DomainError):
    code = "series-not-applicable"


class MomentOutOfRange(DomainError):
    code = "moment-out-of-range"


class DivergentEndpoint(DomainError):
    code = "divergent-endpoint"


class UndefinedAtAlphaOne(DomainError):
    code = "undefined-at-alpha-1"


class DegenerateAtAlphaOne(DomainError):
    code = "degenerate-at-alpha-1"


class OutOfRange(DomainError):
    """The requested value is not attained for any admissible order."""

    code = "out-of-range"


class AccuracyUnattainable(FracwaveError, ArithmeticError):
    code = "accuracy-unattainable"


class SearchNoBracket(FracwaveError, ArithmeticError):
    code = "search-no-bracket"


class QuadratureError(FracwaveError, ArithmeticError):
    """Adaptive quadrature stopped before meeting its tolerance.

    The partial :class:`~fracwave.quadrature.QuadResult` is kept on ``result``.
    """

    code = "quadrature-no-convergence"

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
