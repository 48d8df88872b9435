"""Exception hierarchy shared by all strata modules."""


class StrataError(Exception):
    """Base class for every error raised by this package."""


class UnknownAtomError(StrataError):
    """A formula refers to an atom outside the world's atom set."""


class UnknownArgumentError(StrataError):
    """An operation names an argument the framework does not contain."""


class LabelingMismatchError(StrataError):
    """A labeling is not total over the framework's argument set."""


class ArgumentSetMismatchError(StrataError):
    """Two frameworks were expected to share one argument set but do not."""


class LimitExceededError(StrataError):
    """An enumeration would exceed a documented size limit."""


class BudgetExceededError(StrataError):
    """A bounded search or enumeration ran out of budget; results would be
    incomplete, so the operation refuses to return them silently."""


class InconsistentKnowledgeBaseError(StrataError):
    """No ranking function accepts every conditional of the knowledge base."""


class NotStratifiedError(StrataError):
    """A rank assignment admits no witnessing labeling chain."""


class ParseError(StrataError):
    """Input text does not conform to the declared format.

    Carries a 1-based line and column pointing at the offending text.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DuplicateArgumentError(ParseError):
    """The same argument identifier is declared twice."""


class UndeclaredArgumentError(ParseError):
    """An attack statement refers to an argument that was never declared."""


class AmbiguousBarError(ParseError):
    """A conditional line contains more than one separating bar."""
