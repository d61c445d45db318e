# core/errors.py
from __future__ import annotations


class HVHomError(ValueError):
    """Base of every domain error; routers map it to 400, the cli to exit code 2."""


class DivisionByZero(HVHomError, ZeroDivisionError):
    pass


class InvalidParameters(HVHomError):
    pass


class ParseError(HVHomError):
    def __init__(self, position: int, expected: str, text: str = "") -> None:
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"parse error at position {position}: expected {expected}")


class SortError(HVHomError):
    pass


class CalibrationFailed(HVHomError):
    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"calibration failed: {reason}")


class ConstraintViolation(HVHomError):
    def __init__(self, name: str, expected: str, actual: str) -> None:
        self.name = name
        self.expected = expected
        self.actual = actual
        super().__init__(f"constraint {name} violated: expected {expected}, got {actual}")


class InducedAlgebraUnavailable(HVHomError):
    pass


class WindowTooSmall(HVHomError):
    def __init__(self, window: int, needed: int) -> None:
        self.window = window
        self.needed = needed
        super().__init__(f"window {window} too small (need at least {needed})")


class UnknownSuite(HVHomError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown suite: {name}")
