"""Exact arithmetic in the Gaussian integers Z[i] and their fraction field Q(i).

Everything here is immutable and exact: plain Python integers (arbitrary
precision) for the order, `fractions.Fraction` where rational scalars are
needed.  The conjugation a+bi -> a-bi is the nontrivial automorphism of the
quadratic extension; the norm x*conj(x) = a^2 + b^2 lands in the rational
integers and is multiplicative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from sympy import factorint

from .errors import NonPositiveError, ZeroVectorError


@dataclass(frozen=True)
class QuadInt:
    """A Gaussian integer a + b*i with arbitrary-precision components."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("QuadInt components must be Python ints")

    @classmethod
    def from_int(cls, n: int) -> "QuadInt":
        return cls(n, 0)

    def __add__(self, other: "QuadInt | int") -> "QuadInt":
        other = _coerce(other)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "QuadInt | int") -> "QuadInt":
        other = _coerce(other)
        return QuadInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "QuadInt | int") -> "QuadInt":
        return _coerce(other) - self

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: "QuadInt | int") -> "QuadInt":
        other = _coerce(other)
        return QuadInt(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __divmod__(self, other: "QuadInt | int") -> tuple["QuadInt", "QuadInt"]:
        # Euclidean division: round numerator*conj(den)/norm(den) to the
        # nearest lattice point, so norm(remainder) <= norm(other)/2.
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Gaussian integer")
        n = other.norm()
        p = self * other.conj()
        q = QuadInt(_round_div(p.a, n), _round_div(p.b, n))
        return q, self - other * q

    def __floordiv__(self, other: "QuadInt | int") -> "QuadInt":
        return divmod(self, other)[0]

    def __mod__(self, other: "QuadInt | int") -> "QuadInt":
        return divmod(self, other)[1]

    def divides(self, other: "QuadInt") -> bool:
        return (other % self).is_zero()

    def exact_div(self, other: "QuadInt | int") -> "QuadInt":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def to_complex(self) -> complex:
        return complex(self.a, self.b)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}i"

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


ZERO = QuadInt(0, 0)
ONE = QuadInt(1, 0)
I_UNIT = QuadInt(0, 1)
UNITS = (QuadInt(1, 0), QuadInt(0, 1), QuadInt(-1, 0), QuadInt(0, -1))


def _coerce(x) -> QuadInt:
    if isinstance(x, QuadInt):
        return x
    if isinstance(x, int):
        return QuadInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to QuadInt")


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0), ties toward +infinity."""
    return (2 * a + b) // (2 * b)


def conj(x: QuadInt) -> QuadInt:
    """Galois conjugation a+bi -> a-bi."""
    return x.conj()


def norm(x: QuadInt) -> int:
    """Field norm x * conj(x) = a^2 + b^2."""
    return x.norm()


def gauss_gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """A gcd in Z[i] via the Euclidean algorithm (well-defined up to units)."""
    while y:
        x, y = y, x % y
    return x


def gauss_ext_gcd(x: QuadInt, y: QuadInt) -> tuple[QuadInt, QuadInt, QuadInt]:
    """Return (g, s, t) with s*x + t*y = g = gcd(x, y)."""
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return x, s0, t0


def canonical_unit_rep(x: QuadInt) -> QuadInt:
    """The unique unit multiple of x with Re > 0, Im >= 0 (x nonzero).

    Every nonzero Gaussian integer has exactly one associate in the closed
    upper-right quarter plane minus the positive imaginary axis.
    """
    if x.is_zero():
        raise ZeroVectorError("zero has no canonical associate")
    for u in UNITS:
        y = x * u
        if y.a > 0 and y.b >= 0:
            return y
    raise AssertionError("unreachable: one associate per quarter turn")


def canonical_vector_rep(v: tuple[QuadInt, ...]) -> tuple[QuadInt, ...]:
    """Scale v by the unit making its first nonzero entry canonical."""
    for c in v:
        if c:
            target = canonical_unit_rep(c)
            for u in UNITS:
                if c * u == target:
                    return tuple(x * u for x in v)
    raise ZeroVectorError("zero vector has no canonical representative")


def is_primitive(v: tuple[QuadInt, ...]) -> bool:
    """True iff the ideal generated by the coordinates is all of Z[i].

    Z[i] is a PID, so this is just: the gcd of the coordinates is a unit.
    """
    if all(c.is_zero() for c in v):
        raise ZeroVectorError("primitivity undefined for the zero vector")
    g = ZERO
    for c in v:
        g = gauss_gcd(g, c)
    return g.is_unit()


@dataclass(frozen=True)
class QuadRat:
    """An element of Q(i): Gaussian-integer numerator over a positive integer
    denominator, stored with gcd(num.a, num.b, den) = 1."""

    num: QuadInt
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        g = gcd(gcd(abs(self.num.a), abs(self.num.b)), self.den)
        if g != 1:
            raise ValueError("QuadRat not in lowest terms; use QuadRat.make")

    @classmethod
    def make(cls, num: QuadInt, den: int = 1) -> "QuadRat":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(abs(num.a), abs(num.b)), den)
        if g > 1:
            num = QuadInt(num.a // g, num.b // g)
            den //= g
        return cls(num, den)

    @classmethod
    def from_int(cls, n: int) -> "QuadRat":
        return cls(QuadInt(n, 0), 1)

    @classmethod
    def from_quadint(cls, x: QuadInt) -> "QuadRat":
        return cls(x, 1)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "QuadRat":
        return cls.make(QuadInt(q.numerator, 0), q.denominator)

    @classmethod
    def from_pair(cls, re: Fraction, im: Fraction) -> "QuadRat":
        re, im = Fraction(re), Fraction(im)
        den = _lcm(re.denominator, im.denominator)
        return cls.make(
            QuadInt(re.numerator * (den // re.denominator),
                    im.numerator * (den // im.denominator)),
            den,
        )

    def __add__(self, other) -> "QuadRat":
        other = _coerce_rat(other)
        return QuadRat.make(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadRat":
        return self + (-_coerce_rat(other))

    def __rsub__(self, other) -> "QuadRat":
        return _coerce_rat(other) - self

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.num, self.den)

    def __mul__(self, other) -> "QuadRat":
        other = _coerce_rat(other)
        return QuadRat.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadRat":
        other = _coerce_rat(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        # 1/(p/q) = q*conj(p)/norm(p)
        return QuadRat.make(self.num * other.num.conj() * other.den,
                            self.den * other.num.norm())

    def __rtruediv__(self, other) -> "QuadRat":
        return _coerce_rat(other) / self

    def conj(self) -> "QuadRat":
        return QuadRat(self.num.conj(), self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.num.b == 0

    def real(self) -> Fraction:
        return Fraction(self.num.a, self.den)

    def imag(self) -> Fraction:
        return Fraction(self.num.b, self.den)

    def as_fraction(self) -> Fraction:
        if not self.is_real():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num.a, self.den)

    def is_gaussian_integer(self) -> bool:
        return self.den == 1

    def as_quadint(self) -> QuadInt:
        if self.den != 1:
            raise ValueError(f"{self} is not integral")
        return self.num

    def to_complex(self) -> complex:
        return complex(self.num.a / self.den, self.num.b / self.den)

    def __str__(self) -> str:
        return f"({self.num})/{self.den}" if self.den != 1 else str(self.num)

    def __repr__(self) -> str:
        return f"QuadRat({self.num!r}, {self.den})"


RAT_ZERO = QuadRat.from_int(0)
RAT_ONE = QuadRat.from_int(1)


def _coerce_rat(x) -> QuadRat:
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, QuadInt):
        return QuadRat.from_quadint(x)
    if isinstance(x, int):
        return QuadRat.from_int(x)
    if isinstance(x, Fraction):
        return QuadRat.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QuadRat")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class NormResidueClass:
    """A class in the group of positive rationals modulo norms from Q(i).

    The canonical representative of a positive rational q keeps exactly the
    primes p = 3 (mod 4) that occur in q to odd order: q is a norm from Q(i)
    iff every such prime occurs to even order, so two rationals are
    norm-equivalent iff their canonical representatives coincide.
    """

    representative: Fraction

    def __str__(self) -> str:
        return str(self.representative)


def norm_residue_class(q) -> NormResidueClass:
    """Canonical norm-residue class of a positive rational q."""
    q = Fraction(q)
    if q <= 0:
        raise NonPositiveError(f"norm residue class needs q > 0, got {q}")
    m = q.numerator * q.denominator  # q = m / denominator^2 times a square
    rep = 1
    for p, e in factorint(m).items():
        if p % 4 == 3 and e % 2 == 1:
            rep *= p
    return NormResidueClass(Fraction(rep))


def is_norm_bruteforce(q, den_bound: int = 50) -> bool:
    """Decide whether q > 0 is a norm from Q(i) by exhaustive search.

    Searches for a, b, d with (a^2 + b^2)/d^2 = q over d <= den_bound.  This
    is the independent oracle against the factorization criterion; the two
    must agree wherever the search is conclusive (q = m/n a norm iff m*n is a
    sum of two squares, and m*n*d^2 is then one as well for any d).
    """
    q = Fraction(q)
    if q <= 0:
        raise NonPositiveError("norm search needs q > 0")
    for d in range(1, den_bound + 1):
        target = q * d * d
        if target.denominator != 1:
            continue
        m = target.numerator
        a = 0
        while a * a * 2 <= m:
            rest = m - a * a
            r = isqrt(rest)
            if r * r == rest:
                return True
            a += 1
    return False
