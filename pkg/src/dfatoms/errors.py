"""Exception types shared across the package."""


class DfatomsError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidDfaError(DfatomsError):
    """A DFA or transformation violates a structural invariant."""


class SizeMismatchError(DfatomsError):
    """Two transformations act on differently sized state sets."""


class UnknownLetterError(DfatomsError):
    """A word contains a letter outside the automaton's alphabet."""


class InvalidBasisError(DfatomsError):
    """An atom basis contains ids outside the automaton's state set."""


class NotAnAtomError(DfatomsError):
    """The requested basis names an empty atomic intersection."""


class EmptyLanguageError(DfatomsError):
    """The automaton recognizes the empty language; ideal predicates reject it."""


class NotAnIdealError(DfatomsError):
    """The automaton does not belong to the required ideal class."""


class LimitExceededError(DfatomsError):
    """The state count is too large for a subset-enumerating operation."""


class CapExceededError(DfatomsError):
    """An explicitly capped closure grew past its cap.

    ``partial`` holds the number of elements discovered before aborting.
    """

    def __init__(self, message: str, partial: int):
        super().__init__(message)
        self.partial = partial


class ParseError(DfatomsError):
    """A DFA document is malformed.  ``line`` is the 1-based source line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
