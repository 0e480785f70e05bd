"""Exception hierarchy shared by all lcsketch modules."""


class LcsketchError(ValueError):
    """Base class for every error raised by this package."""


class AlphabetError(LcsketchError):
    """Alphabet size outside the supported range 2..10."""


class SymbolError(LcsketchError):
    """A symbol does not belong to the alphabet."""


class ParseError(LcsketchError):
    """Malformed textual input."""


class MalformedLineError(ParseError):
    pass


class MissingSymbolError(ParseError):
    pass


class DuplicateSymbolError(ParseError):
    pass


class ZeroWeightError(ParseError):
    pass


class WeightRangeError(ParseError):
    pass


class NonCanonicalError(LcsketchError):
    """A run-length string has an empty run or two adjacent runs of one symbol."""


class MalformedSketchError(LcsketchError):
    """A serialized or in-memory sketch violates the sketch format."""


class OverflowBoundError(LcsketchError):
    """Scores could exceed the signed 64-bit range."""


class GuardExceededError(LcsketchError):
    """A brute-force oracle was asked for more work than it allows."""


class ParameterError(LcsketchError):
    """Invalid parameters for a string-family generator."""
