"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are plain Python objects: ``Fraction`` over the rationals,
``int`` in ``0..p-1`` over F_p.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Ground field of a polynomial ring: Q (characteristic 0) or F_p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not (_is_prime(p) and p < 2**31):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def coerce(self, value):
        """Map an int or Fraction into the canonical coefficient representation."""
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator {value.denominator} is 0 mod {p}")
                return value.numerator * pow(value.denominator, -1, p) % p
            return value % p
        return Fraction(value)

    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a, b):
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def invert(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.invert(b))

    def __str__(self) -> str:
        p = self.characteristic
        return f"GF({p})" if p else "QQ"


QQ = CoefficientField(0)


def GF(p: int) -> CoefficientField:
    """The prime field with p elements."""
    return CoefficientField(p)
