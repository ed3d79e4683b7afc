"""Shared exception types raised across the lab modules."""


class ShimlabError(Exception):
    """Base class for all package-specific errors."""


class ZeroVectorError(ShimlabError, ValueError):
    pass


class NonPositiveError(ShimlabError, ValueError):
    pass


class NotPositiveError(ShimlabError, ValueError):
    pass


class IsotropicStepError(ShimlabError, ArithmeticError):
    pass


class PrecisionLossError(ShimlabError, ArithmeticError):
    pass


class DegenerateElementError(ShimlabError, ValueError):
    pass


class NotPositiveLineError(ShimlabError, ValueError):
    pass


class SearchBudgetExceededError(ShimlabError, RuntimeError):
    pass


class NotTotallyPositiveError(ShimlabError, ValueError):
    pass


class FoldBudgetExceededError(ShimlabError, RuntimeError):
    pass


class NotSampledError(ShimlabError, ValueError):
    pass


class InsufficientCurvesError(ShimlabError, ValueError):
    pass


class NoStabilizerError(ShimlabError, ValueError):
    pass


class SingularGramError(ShimlabError, ArithmeticError):
    pass


class NotNegativeDefiniteError(ShimlabError, ValueError):
    pass


class ZeroVolumeError(ShimlabError, ValueError):
    pass


class ShapeMismatchError(ShimlabError, ValueError):
    pass


class NotInAlgebraError(ShimlabError, ValueError):
    pass


class ZeroDirectionError(ShimlabError, ValueError):
    pass


class OutsideDomainError(ShimlabError, ValueError):
    pass


class ConfigError(ShimlabError, ValueError):
    pass
