"""Exception types shared across the toolkit.

Every guard in the public API raises one of these rather than a bare
ValueError, so callers (and the CLI) can tell usage errors apart from
negative mathematical answers.
"""


class WordrepError(Exception):
    """Base class for all toolkit errors."""


class OutOfRangeError(WordrepError):
    """An edge endpoint or vertex label lies outside 1..n."""


class SelfLoopError(WordrepError):
    """An edge joins a vertex to itself."""


class TooLargeError(WordrepError):
    """Input exceeds the supported exhaustive-search range."""


class SameLetterError(WordrepError):
    """An alternation query was made with x == y."""


class NotInAlphabetError(WordrepError):
    """A queried letter does not occur in the word."""


class NonContiguousAlphabetError(WordrepError):
    """A word's alphabet is not {1, ..., n} for any n."""


class AlphabetMismatchError(WordrepError):
    """A word's alphabet differs from the graph's vertex set.

    Raised instead of returning False: a word over the wrong alphabet is a
    usage error, not evidence about the graph.
    """


class PartialOrientationError(WordrepError):
    """An operation requiring a total orientation got a partial one."""


class CyclicInputError(WordrepError):
    """An operation requiring an acyclic orientation got a cyclic one."""


class NotK4FreeError(WordrepError):
    """The four-cycle forcing rule was invoked on a graph containing K4."""


class TooManyEdgesError(WordrepError):
    """Exact orientation counting was requested beyond the edge cap."""


class ImproperColoringError(WordrepError):
    """A coloring assigns the same color to both ends of an edge."""


class TooManyColorsError(WordrepError):
    """The coloring-based construction needs at most three colors."""


class TooLargeToVerifyError(WordrepError):
    """A negative certificate is too large for independent re-checking."""


class ParseError(WordrepError):
    """A text input (edge list, word, orientation) failed to parse."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
