# core/scalar.py
"""Exact Gaussian rationals p/q + (r/s)·i.

Every coefficient in the package lives in ℚ(i). Real and imaginary parts are
``fractions.Fraction`` values, so lowest terms and a positive denominator hold
after every operation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from core.errors import DivisionByZero, ParseError

Number = Union["Scalar", int, Fraction]


class Scalar:
    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> None:
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    # canonical components
    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    @property
    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    # ──────────────────────────────────────────────
    # field operations
    # ──────────────────────────────────────────────

    def __add__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return Scalar(self.re * o.re)
        return Scalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __pos__(self) -> "Scalar":
        return self

    def inv(self) -> "Scalar":
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        if not self.im:
            return Scalar(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Number) -> "Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> "Scalar":
        return pow_int(self, n)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # ──────────────────────────────────────────────
    # comparisons / hashing
    # ──────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        # agrees with hash(int) / hash(Fraction) for real values
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def _coerce(value: Number) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I_UNIT = Scalar(0, 1)


def as_scalar(value: Number | str) -> Scalar:
    """Scalar from a Scalar, an int, a Fraction or text in the scalar grammar."""
    if isinstance(value, str):
        return parse_scalar(value)
    s = _coerce(value)
    if s is None:
        raise TypeError(f"cannot interpret {value!r} as a scalar")
    return s


def pow_int(x: Number, n: int) -> Scalar:
    """xⁿ for any integer n; x⁰ = 1 (also for x = 0)."""
    base = as_scalar(x)
    if n < 0:
        if base.is_zero:
            raise DivisionByZero("negative power of zero")
        base = base.inv()
        n = -n
    result = ONE
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


# field_ops as plain functions
def add(x: Number, y: Number) -> Scalar:
    return as_scalar(x) + as_scalar(y)


def sub(x: Number, y: Number) -> Scalar:
    return as_scalar(x) - as_scalar(y)


def mul(x: Number, y: Number) -> Scalar:
    return as_scalar(x) * as_scalar(y)


def neg(x: Number) -> Scalar:
    return -as_scalar(x)


def inv(x: Number) -> Scalar:
    return as_scalar(x).inv()


def eq(x: Number, y: Number) -> bool:
    return as_scalar(x) == as_scalar(y)


# ──────────────────────────────────────────────
# text form:  int | int/int, optionally followed by ±int/int i
# ──────────────────────────────────────────────

def _scan_uint(text: str, pos: int) -> tuple[int, int] | None:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        return None
    return int(text[pos:end]), end


def _scan_fraction(text: str, pos: int) -> tuple[Fraction, int] | None:
    head = _scan_uint(text, pos)
    if head is None:
        return None
    num, end = head
    if end < len(text) and text[end] == "/":
        tail = _scan_uint(text, end + 1)
        if tail is None:
            raise ParseError(end + 1, "denominator digits", text)
        den, den_end = tail
        if den == 0:
            raise ParseError(end + 1, "nonzero denominator", text)
        return Fraction(num, den), den_end
    return Fraction(num), end


def _is_imag_unit(text: str, pos: int) -> bool:
    if pos >= len(text) or text[pos] != "i":
        return False
    nxt = pos + 1
    return nxt >= len(text) or not (text[nxt].isalnum() or text[nxt] == "_")


def scan_scalar(
    text: str,
    pos: int = 0,
    *,
    signed: bool = True,
    complex_tail: bool = True,
) -> tuple[Scalar, int] | None:
    """Read one scalar literal starting at ``pos``.

    Returns ``(value, end)`` or ``None`` when no literal starts there. An
    imaginary tail ``±[q]i`` is consumed only when it follows the real part
    immediately, so ``1+2*L1`` still reads as the scalar ``1``. Inside
    expressions the tail is disabled and complex coefficients are written in
    parentheses: ``(1+i)*L1``.
    """
    i = pos
    sign = 1
    if signed and i < len(text) and text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1

    head = _scan_fraction(text, i)
    if head is None:
        if _is_imag_unit(text, i):
            return Scalar(0, sign), i + 1
        return None
    magnitude, i = head
    if _is_imag_unit(text, i):
        return Scalar(0, sign * magnitude), i + 1

    real = sign * magnitude
    if complex_tail and i < len(text) and text[i] in "+-":
        im_sign = -1 if text[i] == "-" else 1
        try:
            tail = _scan_fraction(text, i + 1)
        except ParseError:
            tail = None
        if tail is None:
            if _is_imag_unit(text, i + 1):
                return Scalar(real, im_sign), i + 2
        else:
            im_mag, j = tail
            if _is_imag_unit(text, j):
                return Scalar(real, im_sign * im_mag), j + 1
    return Scalar(real), i


def parse_scalar(text: str) -> Scalar:
    src = text.strip()
    found = scan_scalar(src, 0)
    if found is None:
        raise ParseError(0, "scalar literal", src)
    value, end = found
    if end != len(src):
        raise ParseError(end, "end of scalar", src)
    return value


def format_scalar(x: Number) -> str:
    s = as_scalar(x)
    if not s.im:
        return str(s.re)
    mag = abs(s.im)
    im_txt = "i" if mag == 1 else f"{mag}i"
    if not s.re:
        return ("-" if s.im < 0 else "") + im_txt
    return f"{s.re}{'-' if s.im < 0 else '+'}{im_txt}"
