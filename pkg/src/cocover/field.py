"""Ground fields: the rationals and prime fields.

Rational scalars are ``int`` or ``fractions.Fraction`` (ints are kept where
possible because integer arithmetic is much cheaper); prime-field scalars are
least nonnegative residues stored as ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, UsageError

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise UsageError(f"characteristic must be 0 or a prime, got {self.characteristic}")

    @property
    def kind(self) -> str:
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    @property
    def name(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                pass
        raise UsageError(f"unknown field {text!r} (expected 'q' or 'fp:<prime>')")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    # scalars

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or decimal/fraction string into the field."""
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x.strip())
        if p == 0:
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else x
            if isinstance(x, int):
                return x
            raise TypeError(f"cannot coerce {x!r} into {self}")
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def add(self, a, b):
        s = a + b
        return s % self.characteristic if self.characteristic else s

    def sub(self, a, b):
        s = a - b
        return s % self.characteristic if self.characteristic else s

    def mul(self, a, b):
        s = a * b
        return s % self.characteristic if self.characteristic else s

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        if isinstance(a, int):
            return 1 if a == 1 else (-1 if a == -1 else Fraction(1, a))
        r = 1 / a
        return int(r) if r.denominator == 1 else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format(self, a) -> str:
        return str(a)

    def elements(self):
        """All field elements (finite fields only)."""
        if not self.characteristic:
            raise UsageError("the rationals cannot be enumerated")
        return range(self.characteristic)

    def check_same(self, other: "FieldSpec"):
        if self != other:
            raise FieldMismatch(f"{self} vs {other}")


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
