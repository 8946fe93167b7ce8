"""
Exception hierarchy shared by the library and the command-line surface
"""

from typing import Optional, Tuple


class KuttakaKitError(Exception):
    """Base class for every error raised by the toolkit"""

    kind = "error"

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def to_dict(self):
        """Error payload for the CLI envelope"""
        return {
            'kind': self.kind,
            'message': self.message,
            'position': self.position,
        }


class InvalidInputError(KuttakaKitError, ValueError):
    """An argument violates an operation precondition"""

    kind = "invalid_input"


class MagnitudeOverflowError(KuttakaKitError, OverflowError):
    """A value or intermediate left the checked arithmetic range"""

    kind = "overflow"


class NoSolutionError(KuttakaKitError):
    """The equation ax + c = by has no integer solution"""

    kind = "no_solution"

    def __init__(self, message: str, gcd: Optional[int] = None):
        super().__init__(message)
        self.gcd = gcd


class NotCoprimeError(NoSolutionError):
    """No modular inverse exists because gcd(a, m) > 1"""

    kind = "not_coprime"


class InconsistentSystemError(NoSolutionError):
    """Two congruences disagree modulo the gcd of their moduli"""

    kind = "inconsistent_system"

    def __init__(self, message: str, pair: Tuple[int, int], gcd: Optional[int] = None):
        super().__init__(message, gcd=gcd)
        self.pair = pair


class RangeError(KuttakaKitError, ValueError):
    """A number lies outside the range a code can represent"""

    kind = "range"


class ParseError(KuttakaKitError):
    """Text does not tokenize or parse; position is a 1-based token index"""

    kind = "parse"


class UnknownTokenError(ParseError):
    """A token outside the cipher alphabet was met in strict mode"""

    kind = "unknown_token"


class EmptyDecodeError(KuttakaKitError):
    """A word carried no mapped consonant"""

    kind = "empty_decode"


class CipherConfigError(KuttakaKitError, ValueError):
    """A reciprocal cipher was built with overlapping pairs"""

    kind = "cipher_config"


class FixtureError(KuttakaKitError):
    """The vector fixture file is missing, unreadable or empty"""

    kind = "fixture"
