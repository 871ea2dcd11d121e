"""Exception hierarchy.

Errors fall in three groups that the CLI maps onto exit codes: usage and
parse problems (1), unmet mathematical preconditions (2) and internal
consistency failures (3).
"""


class CocoverError(Exception):
    exit_code = 1


class UsageError(CocoverError):
    exit_code = 1


class ParseError(UsageError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DuplicateLabel(UsageError):
    pass


class DanglingEndpoint(UsageError):
    pass


class AmbientMismatch(UsageError):
    pass


class FieldMismatch(UsageError):
    pass


class SideMismatch(UsageError):
    pass


class AlgebraMismatch(UsageError):
    pass


class PreconditionError(CocoverError):
    """A mathematical precondition of an operation does not hold."""

    exit_code = 2


class CyclicWithoutBound(PreconditionError):
    pass


class CyclicQuiver(PreconditionError):
    pass


class NonSplit(PreconditionError):
    pass


class UnsupportedCharacteristic(PreconditionError):
    pass


class NotSurjective(PreconditionError):
    pass


class NotNonSingular(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class ConsistencyError(CocoverError):
    """An internal cross-check failed; this indicates a bug."""

    exit_code = 3


class BicommutantMismatch(ConsistencyError):
    pass


class CoalgebraMorphismFailure(ConsistencyError):
    pass
