"""Exception hierarchy shared by all numerical layers.

Domain violations and genuine divergences are kept distinct from accuracy
failures so that callers (and the CLI exit-code mapping) can tell "you asked
for something undefined" apart from "the requested tolerance was not met".
"""


class HallintError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HallintError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergenceError(DomainError):
    """The requested quantity diverges (e.g. K at unit parameter)."""


class EvaluationError(HallintError):
    """An integrand produced a non-finite value.

    Carries the offending abscissa in ``abscissa`` when known.
    """

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class AccuracyError(HallintError):
    """The requested tolerance could not be met within the evaluation budget.

    ``value`` and ``error_estimate`` hold the best estimate achieved.
    """

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
