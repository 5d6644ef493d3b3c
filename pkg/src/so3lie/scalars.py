"""Exact arithmetic in the real quadratic field Q(sqrt 3).

Every coefficient the engine handles is a :class:`Scalar` ``a + b*sqrt(3)``
with rational parts.  Rationals are :class:`fractions.Fraction`, which already
keeps numerator and denominator coprime with a positive denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

ScalarLike = Union["Scalar", int, Fraction]

_TEXT_RE = re.compile(
    r"^\s*(?P<an>[+-]?\d+)(?:/(?P<ad>\d+))?"
    r"(?:\s*\+\s*(?P<bn>[+-]?\d+)(?:/(?P<bd>\d+))?\s*\*\s*r3)?\s*$"
)


class Scalar:
    """An element ``a + b*sqrt(3)`` of Q(sqrt 3).

    Instances are immutable and hashable; equality is exact and structural.
    """

    __slots__ = ("_a", "_b", "_hash")

    def __init__(self, a: Rational | int | str = 0, b: Rational | int | str = 0) -> None:
        object.__setattr__(self, "_a", Fraction(a))
        object.__setattr__(self, "_b", Fraction(b))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        # slots plus the __setattr__ guard defeat default pickling (needed by process pools)
        return (Scalar, (self._a, self._b))

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(3)."""
        return self._b

    @classmethod
    def coerce(cls, x: ScalarLike) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        if isinstance(other, Scalar):
            return Scalar(self._a + other._a, self._b + other._b)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a + other, self._b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self._a, -self._b)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other: ScalarLike) -> Scalar:
        if isinstance(other, Scalar):
            return Scalar(self._a - other._a, self._b - other._b)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a - other, self._b)
        return NotImplemented

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> Scalar:
        if isinstance(other, Scalar):
            a, b, c, d = self._a, self._b, other._a, other._b
            return Scalar(a * c + 3 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a * other, self._b * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a**2 - 3*b**2``; zero only for the zero element."""
        return self._a * self._a - 3 * self._b * self._b

    def conjugate(self) -> Scalar:
        return Scalar(self._a, -self._b)

    def inv(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self._a / n, -self._b / n)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar(self._a / other, self._b / other)
        if isinstance(other, Scalar):
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order and comparison ----------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt(3)`` with sqrt(3) > 0."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: the larger of a**2 and 3*b**2 wins
        d = self._a * self._a - 3 * self._b * self._b
        return sa if d > 0 else sb

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self._a) if self._b == 0 else hash((self._a, self._b))
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() < 0

    def __le__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return (self - Scalar.coerce(other)).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def is_rational(self) -> bool:
        return self._b == 0

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * 3 ** 0.5

    # -- encodings ---------------------------------------------------------

    def to_text(self) -> str:
        """``an/ad`` or ``an/ad+bn/bd*r3``."""
        head = f"{self._a.numerator}/{self._a.denominator}"
        if self._b == 0:
            return head
        return f"{head}+{self._b.numerator}/{self._b.denominator}*r3"

    @classmethod
    def from_text(cls, text: str) -> Scalar:
        m = _TEXT_RE.match(text)
        if m is None:
            raise ValueError(f"malformed scalar: {text!r}")
        a = Fraction(int(m["an"]), int(m["ad"] or 1))
        b = Fraction(int(m["bn"]), int(m["bd"] or 1)) if m["bn"] is not None else 0
        return cls(a, b)

    def to_json(self) -> list[list[int]]:
        return [
            [self._a.numerator, self._a.denominator],
            [self._b.numerator, self._b.denominator],
        ]

    @classmethod
    def from_json(cls, obj) -> Scalar:
        """Accepts ``[[an,ad],[bn,bd]]``, the text encoding, or a plain integer."""
        if isinstance(obj, str):
            return cls.from_text(obj)
        if isinstance(obj, bool):
            raise ValueError(f"malformed scalar: {obj!r}")
        if isinstance(obj, int):
            return cls(obj)
        try:
            (an, ad), (bn, bd) = obj
        except (TypeError, ValueError):
            raise ValueError(f"malformed scalar: {obj!r}") from None
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (an, ad, bn, bd)):
            raise ValueError(f"malformed scalar: {obj!r}")
        if ad <= 0 or bd <= 0:
            raise ValueError(f"non-positive denominator in scalar: {obj!r}")
        return cls(Fraction(an, ad), Fraction(bn, bd))

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}*r3"
        return f"{self._a}{'+' if self._b > 0 else '-'}{abs(self._b)}*r3"


ZERO = Scalar(0)
ONE = Scalar(1)
R3 = Scalar(0, 1)


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def inv(x: Scalar) -> Scalar:
    return x.inv()


def sign(x: Scalar) -> int:
    return x.sign()
