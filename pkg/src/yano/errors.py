"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code`` so the CLI can map
failures onto stable exit statuses.
"""


class YanoError(Exception):
    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidArgument(YanoError, ValueError):
    code = "invalid-argument"


class ParseError(InvalidArgument):
    code = "parse-error"


class NegativeCoefficientError(YanoError, ValueError):
    code = "negative-coefficient"


class CharSeqError(InvalidArgument):
    """Characteristic sequence or Newton pair data violates its invariants."""

    code = "invalid-charseq"


class InternalConsistencyError(YanoError, ArithmeticError):
    code = "internal-consistency"


class InconsistentGraphError(YanoError, ValueError):
    code = "inconsistent-graph"


class NotCommodeError(InvalidArgument):
    code = "not-commode"


class PoleLocationError(YanoError, ValueError):
    code = "pole-location"


class AccuracyError(YanoError, ArithmeticError):
    code = "accuracy"


class PositivityError(YanoError, ValueError):
    code = "positivity-violation"


class OrientationError(InvalidArgument):
    code = "orientation"
