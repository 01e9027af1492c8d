"""Exact scalar arithmetic over Q(sqrt 2).

Every computation in this package runs over the quadratic field
Q(sqrt 2) = {a + b*sqrt(2) : a, b rational}, represented by :class:`QSqrt2`.
Rationals are stdlib :class:`fractions.Fraction` values, which already keep
the canonical form we need (positive denominator, gcd 1, arbitrary
precision).
"""

from __future__ import annotations

from fractions import Fraction

RT2_SQUARED = 2  # the defining relation sqrt(2)^2 = 2


def parse_fraction(text: str) -> Fraction:
    """Parse a rational written as 'num/den' or a plain integer string."""
    return Fraction(text.strip())


def format_fraction(q: Fraction) -> str:
    """Render a rational as 'num/den' with decimal integer strings."""
    return f"{q.numerator}/{q.denominator}"


class QSqrt2:
    """An element a + b*sqrt(2) of the field Q(sqrt 2).

    Immutable; hashable; arithmetic returns new values.  The element is
    zero iff both parts vanish, and nonzero elements are invertible because
    a^2 - 2 b^2 = 0 has no rational solution besides a = b = 0.
    """

    __slots__ = ("rat", "rt2")

    def __init__(self, rat=0, rt2=0):
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "rt2", Fraction(rt2))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def sqrt2(cls) -> "QSqrt2":
        return cls(0, 1)

    @classmethod
    def coerce(cls, value) -> "QSqrt2":
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to QSqrt2")

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rat and not self.rt2

    def is_rational(self) -> bool:
        return not self.rt2

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = QSqrt2.coerce(other)
        return QSqrt2(self.rat + other.rat, self.rt2 + other.rt2)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.rat, -self.rt2)

    def __sub__(self, other):
        other = QSqrt2.coerce(other)
        return QSqrt2(self.rat - other.rat, self.rt2 - other.rt2)

    def __rsub__(self, other):
        return QSqrt2.coerce(other) - self

    def __mul__(self, other):
        other = QSqrt2.coerce(other)
        a, b, c, d = self.rat, self.rt2, other.rat, other.rt2
        return QSqrt2(a * c + RT2_SQUARED * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt2":
        """Field inverse (a - b*sqrt2)/(a^2 - 2 b^2); error on zero."""
        if self.is_zero():
            raise ZeroDivisionError("QSqrt2 division by zero")
        norm = self.rat * self.rat - RT2_SQUARED * self.rt2 * self.rt2
        return QSqrt2(self.rat / norm, -self.rt2 / norm)

    def __truediv__(self, other):
        return self * QSqrt2.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QSqrt2.coerce(other) * self.inverse()

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSqrt2(other)
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return self.rat == other.rat and self.rt2 == other.rt2

    def __hash__(self):
        return hash((self.rat, self.rt2))

    # -- rendering / serialization ---------------------------------------

    def __repr__(self):
        return f"QSqrt2({self.rat!r}, {self.rt2!r})"

    def __str__(self):
        if not self.rt2:
            return str(self.rat)
        if not self.rat:
            if self.rt2 == 1:
                return "sqrt2"
            if self.rt2 == -1:
                return "-sqrt2"
            return f"{self.rt2}*sqrt2"
        rt2_part = "sqrt2" if abs(self.rt2) == 1 else f"{abs(self.rt2)}*sqrt2"
        sign = "+" if self.rt2 > 0 else "-"
        return f"({self.rat}{sign}{rt2_part})"

    def to_json(self) -> dict:
        """Serialize as {"rat": "num/den", "rt2": "num/den"}; exact round-trip."""
        return {"rat": format_fraction(self.rat), "rt2": format_fraction(self.rt2)}

    @classmethod
    def from_json(cls, data: dict) -> "QSqrt2":
        return cls(parse_fraction(data["rat"]), parse_fraction(data["rt2"]))


ZERO = QSqrt2(0)
ONE = QSqrt2(1)
SQRT2 = QSqrt2.sqrt2()
