"""Exact arithmetic in Q(log 2)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

LOG2 = math.log(2.0)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class LogRational:
    """The number r + s*log(2) with r, s rational.

    1 and log 2 are linearly independent over Q, so equality is componentwise.
    """

    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", _frac(self.r))
        object.__setattr__(self, "s", _frac(self.s))

    @classmethod
    def log2(cls, coeff=1) -> "LogRational":
        return cls(Fraction(0), _frac(coeff))

    def is_rational(self) -> bool:
        return self.s == 0

    def _coerce(self, other):
        if isinstance(other, LogRational):
            return other
        if isinstance(other, (int, Fraction)):
            return LogRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LogRational(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __neg__(self):
        return LogRational(-self.r, -self.s)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LogRational(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        # only scaling by rationals keeps us inside the field's Q-span
        if isinstance(other, (int, Fraction)):
            return LogRational(self.r * other, self.s * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogRational(self.r / other, self.s / other)
        return NotImplemented

    def __float__(self) -> float:
        return math.fsum([float(self.r), float(self.s) * LOG2])

    def to_mpf(self, dps: int = 50):
        import mpmath

        with mpmath.workdps(dps):
            return mpmath.mpf(self.r.numerator) / self.r.denominator + (
                mpmath.mpf(self.s.numerator) / self.s.denominator
            ) * mpmath.log(2)

    def __str__(self) -> str:
        return f"{self.r} + {self.s}*log(2)"

    def as_json(self) -> dict:
        return {"r": str(self.r), "s": str(self.s)}
