"""Exception hierarchy for Borel Jump.

Every error raised on purpose by the library derives from ``BorelJumpError``
and from the builtin it is closest to, so callers can catch either.
"""

from typing import Optional


class BorelJumpError(Exception):
    """Base class for all library errors."""


class ConfigError(BorelJumpError, ValueError):
    """Invalid configuration value."""


class AlphabetError(BorelJumpError, ValueError):
    """Bad symbol token, letter outside an alphabet, or alphabet mismatch."""


class WordError(BorelJumpError, ValueError):
    """Malformed word (empty period, bad literal)."""


class AutomatonValidationError(BorelJumpError, ValueError):
    """Automaton violates a structural invariant."""

    def __init__(self, message: str, state: Optional[int] = None, symbol: Optional[str] = None):
        super().__init__(message)
        self.state = state
        self.symbol = symbol


class StateGuardExceeded(BorelJumpError, RuntimeError):
    """A size guard tripped before an exponential construction."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"{what} has {size} states, above the configured guard of {cap} "
            f"(raise it with --max-states or BOREL_MAX_STATES)"
        )
        self.what = what
        self.size = size
        self.cap = cap


class ClassificationError(BorelJumpError, ValueError):
    """Classification precondition failed or memberships are inconsistent."""


class GameValidationError(BorelJumpError, ValueError):
    """Game graph or objective violates an invariant."""


class StrategyError(BorelJumpError, ValueError):
    """Strategy is undefined where it must be defined."""


class ParseError(BorelJumpError, ValueError):
    """Input text could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        location = ""
        if path:
            location = f"{path}:"
        if line is not None:
            location = f"{location}{line}: " if location else f"line {line}: "
        elif location:
            location = f"{location} "
        super().__init__(f"{location}{message}")
        self.line = line
        self.path = path
        self.detail = message


class InternalCheckError(BorelJumpError, RuntimeError):
    """A computed result failed its own re-verification."""


class HierarchyError(BorelJumpError, ValueError):
    """Malformed Borel level or class reference."""
