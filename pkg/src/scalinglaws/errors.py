"""Exception hierarchy.

Two families matter to callers: :class:`DataError` for problems with the
input data (bad files, bad columns, bad values) and :class:`NumericError`
for problems that arise while evaluating or fitting a model. The CLI maps
them to exit codes 2 and 3.
"""


class ScalingLawError(ValueError):
    """Base class for every error raised by this package."""


class DataError(ScalingLawError):
    pass


class NumericError(ScalingLawError):
    pass


# -- data errors -------------------------------------------------------------

class MissingColumn(DataError):
    def __init__(self, column, available=()):
        self.column = column
        self.available = tuple(available)
        super().__init__(
            f"column {column!r} not found (have: {', '.join(self.available) or 'none'})"
        )


class ParseError(DataError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NonPositiveValue(DataError):
    def __init__(self, line, value):
        self.line = line
        self.value = value
        super().__init__(f"line {line}: value {value!r} is not positive")


class NonPositiveArea(DataError):
    def __init__(self, line, value):
        self.line = line
        self.value = value
        super().__init__(f"line {line}: area {value!r} is not positive")


class FewerThanTwoPoints(DataError):
    pass


class YearMismatch(DataError):
    def __init__(self, only_left, only_right):
        self.only_left = tuple(only_left)
        self.only_right = tuple(only_right)
        super().__init__(
            f"year sets differ: only in first {list(self.only_left)}, "
            f"only in second {list(self.only_right)}"
        )


class TooFewPointsForLabel(DataError):
    def __init__(self, label, count):
        self.label = label
        self.count = count
        super().__init__(f"label {label!r} has {count} point(s); at least 2 required")


# -- numeric errors ----------------------------------------------------------

class DomainError(NumericError):
    """An argument lies outside the admissible domain of a function."""


class DomainViolation(DomainError):
    """A data point maps below the minimum basis argument for a fit."""


class DegenerateDesign(NumericError):
    pass


class EmptySearchRange(NumericError):
    pass


class NonPositiveGrowth(NumericError):
    pass


class NonIncreasingModel(NumericError):
    pass


class AlreadyExceeded(NumericError):
    pass


class NonPositiveStep(NumericError):
    pass
