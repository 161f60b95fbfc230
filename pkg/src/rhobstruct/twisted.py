"""Root-of-unity multiples of rational matrices.

Every matrix in the explicit families is a scalar root of unity times an
invertible rational matrix, so products stay in rational arithmetic with the
twists tracked symbolically.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch
from .matrix import Matrix
from .scalars import ONE, UnityRoot, sign_split


class TwistedMatrix:
    """``twist * body`` with ``body`` rational.

    The pair is canonical: a twist t and -t describe the same family of
    matrices up to the sign of the body, and :func:`sign_split` picks one, so
    equality is plain structural equality.
    """

    __slots__ = ("twist", "body")

    def __init__(self, body, twist: UnityRoot = ONE):
        if not isinstance(body, Matrix):
            body = Matrix(body)
        if not body.is_rational():
            raise TypeError("twisted matrix body must be rational")
        body.n  # squareness check
        if body.is_zero():
            twist = ONE
        else:
            twist, s = sign_split(twist)
            if s < 0:
                body = -body
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("TwistedMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "TwistedMatrix":
        return cls(Matrix.identity(n))

    @property
    def n(self) -> int:
        return self.body.n

    def __mul__(self, other):
        if isinstance(other, TwistedMatrix):
            return twisted_mul(self, other)
        if isinstance(other, UnityRoot):
            return TwistedMatrix(self.body, self.twist * other)
        if isinstance(other, (int, Fraction)):
            return TwistedMatrix(self.body.scale(Fraction(other)), self.twist)
        return NotImplemented

    __matmul__ = __mul__

    def __rmul__(self, other):
        if isinstance(other, (UnityRoot, int, Fraction)):
            return self * other
        return NotImplemented

    def __neg__(self):
        return TwistedMatrix(-self.body, self.twist)

    def inverse(self) -> "TwistedMatrix":
        return TwistedMatrix(self.body.inverse(), self.twist.inverse())

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return TwistedMatrix(self.body ** e, self.twist ** e)

    def conjugate_by(self, p: Matrix, p_inv: Matrix | None = None) -> "TwistedMatrix":
        p_inv = p.inverse() if p_inv is None else p_inv
        return TwistedMatrix(p @ self.body @ p_inv, self.twist)

    def is_identity(self) -> bool:
        return self.twist.is_one() and self.body.is_identity()

    def is_invertible(self) -> bool:
        return self.body.is_invertible()

    def to_matrix(self, conductor: int | None = None) -> Matrix:
        """Flatten to a Matrix; rational when the twist is 1, else cyclotomic."""
        if conductor is None:
            if self.twist.is_one():
                return self.body
            conductor = self.twist.n
        z = self.twist.to_cyclotomic(conductor)
        return Matrix([[z * x for x in row] for row in self.body.rows])

    def __eq__(self, other):
        if not isinstance(other, TwistedMatrix):
            return NotImplemented
        return self.twist == other.twist and self.body == other.body

    def __hash__(self):
        return hash((self.twist, self.body))

    def __repr__(self):
        if self.twist.is_one():
            return f"TwistedMatrix({self.body!r})"
        return f"TwistedMatrix({self.body!r}, twist={self.twist.k}/{self.twist.n})"


def twisted_mul(a: TwistedMatrix, b: TwistedMatrix) -> TwistedMatrix:
    if a.n != b.n:
        raise DimensionMismatch(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    return TwistedMatrix(a.body @ b.body, a.twist * b.twist)


def common_conductor(twists) -> int:
    n = 1
    for t in twists:
        n = n * t.n // gcd(n, t.n)
    return n
