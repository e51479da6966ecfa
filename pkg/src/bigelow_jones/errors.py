"""Exception hierarchy shared by the pipeline; each maps to a CLI exit status."""


class BigelowError(Exception):
    exit_code = 1


class InputError(BigelowError, ValueError):
    exit_code = 2


class GeometryFault(BigelowError):
    exit_code = 3


class OracleMismatch(BigelowError):
    exit_code = 4


class IdentityViolation(BigelowError):
    exit_code = 5


class ReducedConditionError(GeometryFault):
    """No clear path from the last even puncture to infinity."""
