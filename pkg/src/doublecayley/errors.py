"""Exception hierarchy shared by all modules."""


class DoubleCayleyError(Exception):
    """Base class for every error raised by the toolkit."""


class ParityError(DoubleCayleyError):
    pass


class ZeroSpinorError(DoubleCayleyError):
    pass


class NotPureError(DoubleCayleyError):
    pass


class NotInDGError(DoubleCayleyError):
    pass


class DomainError(DoubleCayleyError, ValueError):
    pass


class GradeError(DoubleCayleyError, ValueError):
    pass


class OracleIntegrityError(DoubleCayleyError):
    """The symmetric-function oracle produced a value that cannot be right."""


class CheckFailure(DoubleCayleyError):
    """A verification check did not produce its expected value."""


class ParseError(DoubleCayleyError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
