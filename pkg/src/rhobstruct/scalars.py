"""Exact scalars: rationals, symbolic roots of unity and cyclotomic numbers.

Rationals are plain :class:`fractions.Fraction`.  A :class:`UnityRoot` is the
symbol e^{2 pi i k/N} kept in lowest terms, and a :class:`CyclotomicNumber` is
an element of Q(zeta_N) stored as a polynomial in zeta_N reduced modulo the
N-th cyclotomic polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from . import _poly
from .errors import DivisionByZero

Rational = Fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, order=True)
class UnityRoot:
    """The root of unity e^{2 pi i k/n}, stored canonically.

    ``UnityRoot(3, 6)`` normalises to ``UnityRoot(1, 2)``; the identity is
    ``UnityRoot(0, 1)``.
    """

    k: int
    n: int = 1

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"order must be positive, got {self.n}")
        frac = Fraction(self.k, self.n) % 1
        object.__setattr__(self, "k", frac.numerator)
        object.__setattr__(self, "n", frac.denominator)

    @classmethod
    def from_angle(cls, angle) -> "UnityRoot":
        """e^{2 pi i * angle} for a rational ``angle``."""
        angle = Fraction(angle)
        return cls(angle.numerator, angle.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.k, self.n)

    def __mul__(self, other):
        if not isinstance(other, UnityRoot):
            return NotImplemented
        return UnityRoot.from_angle(self.angle + other.angle)

    def __truediv__(self, other):
        if not isinstance(other, UnityRoot):
            return NotImplemented
        return UnityRoot.from_angle(self.angle - other.angle)

    def __pow__(self, e: int):
        return UnityRoot.from_angle(self.angle * e)

    def inverse(self) -> "UnityRoot":
        return UnityRoot.from_angle(-self.angle)

    def __neg__(self):
        return self * MINUS_ONE

    def is_one(self) -> bool:
        return self.k == 0

    def is_real(self) -> bool:
        return self.n <= 2

    def to_cyclotomic(self, conductor: int | None = None) -> "CyclotomicNumber":
        conductor = self.n if conductor is None else conductor
        if conductor % self.n:
            raise ValueError(f"{self} does not live in Q(zeta_{conductor})")
        return CyclotomicNumber.zeta(self.k * (conductor // self.n), conductor)

    def to_complex(self) -> complex:
        import cmath

        return cmath.exp(2j * cmath.pi * self.k / self.n)

    def __str__(self):
        if self.n == 1:
            return "1"
        if self.n == 2:
            return "-1"
        return f"e(2pi i*{self.k}/{self.n})"


ONE = UnityRoot(0, 1)
MINUS_ONE = UnityRoot(1, 2)


def sign_split(twist: UnityRoot) -> tuple[UnityRoot, int]:
    """Choose the canonical member of {twist, -twist}.

    Returns ``(t, s)`` with ``twist == s * t`` and ``s`` in {1, -1}.  The
    canonical member has odd order, or order divisible by 4 with k < n/2, so
    that ``t * X == t' * X'`` for rational nonzero X, X' forces equality of
    the canonical pairs.
    """
    n = twist.n
    if n % 4 == 2 or (n % 4 == 0 and 2 * twist.k > n):
        return twist * MINUS_ONE, -1
    return twist, 1


def unity_product(roots) -> UnityRoot:
    acc = ONE
    for r in roots:
        acc = acc * r
    return acc


class CyclotomicNumber:
    """An element of Q(zeta_N), N = ``conductor``.

    ``coefficients[j]`` multiplies zeta_N**j; the list always has length
    phi(N).  Arithmetic with ints and Fractions is supported, and operands of
    different conductors are lifted to the lcm.
    """

    __slots__ = ("conductor", "coefficients")

    def __init__(self, conductor: int, coefficients=()):
        if conductor <= 0:
            raise ValueError("conductor must be positive")
        phi = _poly.cyclotomic(conductor)
        reduced = _poly.mod(_poly.trim(coefficients), phi)
        deg = len(phi) - 1
        coeffs = tuple(reduced) + (Fraction(0),) * (deg - len(reduced))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    @classmethod
    def zeta(cls, k: int, conductor: int) -> "CyclotomicNumber":
        k %= conductor
        return cls(conductor, [0] * k + [1])

    @classmethod
    def from_rational(cls, q, conductor: int) -> "CyclotomicNumber":
        return cls(conductor, [Fraction(q)])

    def _poly(self):
        return _poly.trim(self.coefficients)

    def lift(self, conductor: int) -> "CyclotomicNumber":
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot lift Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        step = conductor // self.conductor
        spread = []
        for j, c in enumerate(self.coefficients):
            if c:
                spread.extend([0] * (j * step - len(spread)))
                spread.append(c)
        return CyclotomicNumber(conductor, spread)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.conductor == self.conductor:
                return self, other
            n = _lcm(self.conductor, other.conductor)
            return self.lift(n), other.lift(n)
        if isinstance(other, (int, _RationalABC)):
            return self, CyclotomicNumber.from_rational(other, self.conductor)
        if isinstance(other, UnityRoot):
            n = _lcm(self.conductor, other.n)
            return self.lift(n), other.to_cyclotomic(n)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.conductor, _poly.add(a._poly(), b._poly()))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coefficients])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.conductor, _poly.sub(a._poly(), b._poly()))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.conductor, _poly.mul(a._poly(), b._poly()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * cyclo_inverse(b)

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * cyclo_inverse(a)

    def __pow__(self, e: int):
        if e < 0:
            return cyclo_inverse(self) ** (-e)
        result = CyclotomicNumber.from_rational(1, self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0] if self.coefficients else Fraction(0)

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coefficients == b.coefficients

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.conductor, self.coefficients))

    def __repr__(self):
        return f"CyclotomicNumber({self.conductor}, {[str(c) for c in self.coefficients]})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coefficients):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "z" if j == 1 else f"z^{j}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} [z=zeta_{self.conductor}]"


def cyclo_inverse(x: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse in Q(zeta_N) via the extended Euclidean algorithm."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero in a cyclotomic field")
    g, s, _ = _poly.gcdex(x._poly(), _poly.cyclotomic(x.conductor))
    # Phi_N is irreducible, so a nonzero reduced element is coprime to it.
    assert g == (Fraction(1),)
    return CyclotomicNumber(x.conductor, s)


@dataclass(frozen=True)
class TwistedScalar:
    """The complex number ``twist * value`` with ``value`` rational.

    Used for eigenvalues of twisted matrices.  The pair is canonicalised with
    :func:`sign_split` so that equal complex numbers compare equal.
    """

    twist: UnityRoot
    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        twist = self.twist
        if value == 0:
            twist = ONE
        else:
            twist, s = sign_split(twist)
            value *= s
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "value", value)

    def __mul__(self, other):
        if isinstance(other, TwistedScalar):
            return TwistedScalar(self.twist * other.twist, self.value * other.value)
        if isinstance(other, UnityRoot):
            return TwistedScalar(self.twist * other, self.value)
        return NotImplemented

    def as_unity_root(self) -> UnityRoot | None:
        """The root of unity equal to this number, or None."""
        if self.value == 1:
            return self.twist
        if self.value == -1:
            return self.twist * MINUS_ONE
        return None

    def over(self, twist: UnityRoot) -> Fraction | None:
        """``self / twist`` if that quotient is rational, else None."""
        q = TwistedScalar(self.twist / twist, self.value)
        return q.value if q.twist.is_one() else None

    def to_cyclotomic(self, conductor: int | None = None) -> CyclotomicNumber:
        return self.twist.to_cyclotomic(conductor) * self.value

    def __str__(self):
        if self.twist.is_one():
            return str(self.value)
        if self.value == 1:
            return str(self.twist)
        return f"{self.value}*{self.twist}"
