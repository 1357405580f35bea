"""Exception hierarchy shared by every module of the package."""


class TournamentError(ValueError):
    """Base class for all errors raised by tourpaths."""


class DuplicatePair(TournamentError):
    pass


class MissingPair(TournamentError):
    pass


class SelfLoop(TournamentError):
    pass


class IndexOutOfRange(TournamentError):
    pass


class SameVertex(TournamentError):
    pass


class OrderTooLarge(TournamentError):
    pass


class SOutOfRange(TournamentError):
    pass


class SIsEverything(TournamentError):
    pass


class NoSuchArc(TournamentError):
    pass


class InvalidVariant(TournamentError):
    pass


class WindowInfeasible(TournamentError):
    pass


class PreconditionViolated(TournamentError):
    """A conditional statement was evaluated outside its hypotheses."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


class FactViolated(AssertionError):
    """An unconditional degree fact failed; indicates a representation bug."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"clause ({clause}) violated {detail}".rstrip())


class EmbedFailed(RuntimeError):
    pass


class ParseError(TournamentError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
