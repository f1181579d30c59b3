"""Exception types shared across the package."""


class SuperBialgError(Exception):
    """Base class for all errors raised by this package."""


class ScalarParseError(SuperBialgError):
    pass


class DivisionByZeroError(SuperBialgError):
    pass


class DimensionMismatchError(SuperBialgError):
    pass


class SingularMatrixError(SuperBialgError):
    pass


class SdetUndefinedError(SuperBialgError):
    """Both diagonal blocks are singular, so neither superdeterminant formula applies."""


class InvalidTransformationError(SuperBialgError):
    """A matrix fails the reality-pattern / nonzero-superdeterminant requirements."""


class ValidationError(SuperBialgError):
    """An algebra or dual structure violates a structural invariant."""


class ConstraintViolationError(SuperBialgError):
    """A parameter assignment violates a family's residual constraints."""


class UnknownIdError(SuperBialgError):
    pass


class ParseError(SuperBialgError):
    """Definition-file syntax or semantic error, carrying a source location."""

    def __init__(self, message, line=None, column=None, filename=None):
        self.message = message
        self.line = line
        self.column = column
        self.filename = filename
        super().__init__(str(self))

    def __str__(self):
        where = self.filename or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {self.message}"
