"""Exception hierarchy shared by every pfinz module."""


class PfinzError(Exception):
    """Base class for all errors raised by pfinz."""


class EmptySetError(PfinzError, ValueError):
    """The empty set is not an element of the power monoid."""


class IntegerOverflow(PfinzError, OverflowError):
    """A result left the signed 64-bit range."""


class InvalidIntervalError(PfinzError, ValueError):
    pass


class NotReducedError(PfinzError, ValueError):
    pass


class InvalidWindowError(PfinzError, ValueError):
    pass


class NotRecognizedError(PfinzError):
    """A black-box map disagrees with every automorphism descriptor."""


class NotHomomorphismError(PfinzError):
    pass


class NotDecomposableError(PfinzError):
    pass


class ParseError(PfinzError, ValueError):
    """Malformed textual input; ``position`` is the 0-based offending column."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class OracleDisagreement(PfinzError, AssertionError):
    """An independent brute-force check contradicted a closed-form answer."""
