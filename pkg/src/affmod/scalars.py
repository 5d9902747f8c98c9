"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational coefficients are plain ``fractions.Fraction`` values (always reduced
to lowest terms), prime field elements are ints in ``range(p)``.  A field
object bundles the arithmetic so polynomial code stays field-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RationalField:
    """The field of rationals, characteristic 0."""

    char = 0

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime p; elements are ints reduced mod p."""

    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"not a prime: {self.p}")

    @property
    def char(self) -> int:
        return self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def scalar_from_rational(field, value):
    """Coerce an int or Fraction into the given field."""
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, Fraction):
        if isinstance(field, RationalField):
            return value
        return field.mul(
            field.from_int(value.numerator), field.inv(field.from_int(value.denominator))
        )
    return value


def field_from_spec(spec: str):
    """Parse a field spec string: "rational" or "fp:P" for a prime P."""
    if spec == "rational":
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unrecognized field spec: {spec!r}")
