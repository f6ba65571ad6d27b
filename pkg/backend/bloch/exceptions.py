from django.core.exceptions import ValidationError


class NormViolationError(ValidationError):
    pass


class HermiticityError(ValidationError):
    pass


class DegenerateRotationError(ValidationError):
    pass


class AngleExpressionError(ValidationError):
    pass


class PeriodEstimationError(RuntimeError):
    pass


class SearchFailedError(RuntimeError):
    pass
