"""Exception hierarchy.

Two top-level families matter for the CLI exit codes: InputError covers
everything a user can trigger with bad data (exit code 2), while
InternalInvariantError marks a broken internal identity, i.e. a bug in
this package rather than in the input (exit code 3).
"""


class InputError(Exception):
    """Invalid input data or an operation precondition violated by the caller."""


class InternalInvariantError(Exception):
    """An internal cross-check failed; indicates a bug, not a user error."""


# --- number field construction / arithmetic ---

class FieldConstructionError(InputError):
    """A defining polynomial or root interval was rejected."""


class NonMonic(FieldConstructionError):
    pass


class NonIntegerCoefficients(FieldConstructionError):
    pass


class NotIrreducible(FieldConstructionError):
    pass


class NoRootInInterval(FieldConstructionError):
    pass


class MultipleRootsInInterval(FieldConstructionError):
    pass


class FieldMismatch(InputError):
    """Operands belong to different number fields."""


class DivisionByZero(InputError, ZeroDivisionError):
    pass


# --- exact linear algebra ---

class DimensionMismatch(InputError):
    pass


class NotSquare(InputError):
    pass


class Singular(InputError):
    pass


class NotSymmetric(InputError):
    pass


# --- reflection tuples ---

class BadDiagonal(InputError):
    """A Cartan matrix diagonal entry differs from 2."""


class NotAReflection(InputError):
    """Matrix is not of the form identity minus a rank-one involution part."""


class InternalMismatch(InternalInvariantError):
    """Two independent computations of the same object disagreed."""


# --- braid moves ---

class IndexOutOfRange(InputError):
    pass


class BadSubsequence(InputError):
    pass


# --- problem file parsing ---

class ParseError(InputError):
    """Syntax error in a problem file, with line/column position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
