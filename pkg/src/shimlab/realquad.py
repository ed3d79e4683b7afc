"""Minimal exact arithmetic in a real quadratic field Q(sqrt(d)).

Only what the bidisk-case diagonal curves need: field operations, the
Galois involution, integrality in the maximal order, and exact sign /
total-positivity decisions.  Elements are a + b*sqrt(d) with rational a, b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp


@dataclass(frozen=True)
class RealQuad:
    """a + b*sqrt(d), exact; d a fixed squarefree integer > 1."""

    a: Fraction
    b: Fraction
    d: int

    @classmethod
    def make(cls, a, b, d: int) -> "RealQuad":
        return cls(Fraction(a), Fraction(b), d)

    def _check(self, other: "RealQuad"):
        if self.d != other.d:
            raise ValueError("mixed fields")

    def __add__(self, other):
        other = self._coerce(other)
        return RealQuad(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return RealQuad(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = self._coerce(other)
        return RealQuad(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError
        return self * other.galois() * RealQuad(Fraction(1, 1) / n, Fraction(0), self.d)

    def _coerce(self, x) -> "RealQuad":
        if isinstance(x, RealQuad):
            self._check(x)
            return x
        if isinstance(x, (int, Fraction)):
            return RealQuad(Fraction(x), Fraction(0), self.d)
        raise TypeError(f"cannot coerce {type(x).__name__}")

    def galois(self) -> "RealQuad":
        return RealQuad(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self) -> bool:
        """Membership in the maximal order of Q(sqrt(d))."""
        if self.d % 4 == 1:
            two_a, two_b = 2 * self.a, 2 * self.b
            if two_a.denominator != 1 or two_b.denominator != 1:
                return False
            return (two_a.numerator - two_b.numerator) % 2 == 0
        return self.a.denominator == 1 and self.b.denominator == 1

    def sign_at(self, embedding: int) -> int:
        """Exact sign under sqrt(d) -> +sqrt(d) (embedding 0) or -sqrt(d)."""
        b = self.b if embedding == 0 else -self.b
        a = self.a
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        lhs, rhs = a * a, b * b * self.d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def is_totally_positive(self) -> bool:
        return self.sign_at(0) > 0 and self.sign_at(1) > 0

    def embed(self, embedding: int = 0, precision: int = 50):
        with mp.workdps(precision):
            root = mp.sqrt(self.d)
            if embedding == 1:
                root = -root
            return (mp.mpf(self.a.numerator) / self.a.denominator
                    + (mp.mpf(self.b.numerator) / self.b.denominator) * root)

    def __str__(self):
        return f"{self.a}{'+' if self.b >= 0 else ''}{self.b}*sqrt({self.d})"


def rq(a, b, d: int) -> RealQuad:
    return RealQuad.make(a, b, d)


def order_elements(d: int, bound: int) -> list[RealQuad]:
    """All x + y*w with |x|, |y| <= bound, w the standard order generator
    (w = (1+sqrt(d))/2 when d = 1 mod 4, else sqrt(d)).  Deterministic order.
    """
    if d % 4 == 1:
        w = RealQuad(Fraction(1, 2), Fraction(1, 2), d)
    else:
        w = RealQuad(Fraction(0), Fraction(1), d)
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            out.append(RealQuad(Fraction(x), Fraction(0), d) + y * w)
    return out


def mat2_mul(p, q):
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


def mat2_det(p):
    return p[0][0] * p[1][1] - p[0][1] * p[1][0]


def mat2_galois(p):
    return tuple(tuple(x.galois() for x in row) for row in p)


def mat2_inverse(p):
    det = mat2_det(p)
    if det.is_zero():
        raise ZeroDivisionError("singular 2x2 matrix")
    inv_det = RealQuad(Fraction(1), Fraction(0), det.d) / det
    return (
        (p[1][1] * inv_det, -p[0][1] * inv_det),
        (-p[1][0] * inv_det, p[0][0] * inv_det),
    )
