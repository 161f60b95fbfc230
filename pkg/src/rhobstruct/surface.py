"""Representations of the fundamental group of a punctured curve.

The group of a genus-g curve minus m points is generated by loops
a_1, b_1, ..., a_g, b_g, c_1, ..., c_m subject to the single relation

    [a_1, b_1] ... [a_g, b_g] c_1 ... c_m = 1,   [a, b] = a b a^-1 b^-1.

A representation is a tuple of invertible matrices satisfying the same
relation.  Only this generator order is supported; reversing the orientation
of the puncture loops would invert every C_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import DimensionMismatch, ShapeMismatch, SingularConjugator, SingularMatrix
from .matrix import Matrix
from .twisted import TwistedMatrix, common_conductor


def _as_twisted(x) -> TwistedMatrix:
    if isinstance(x, TwistedMatrix):
        return x
    return TwistedMatrix(x if isinstance(x, Matrix) else Matrix(x))


@dataclass(frozen=True)
class SurfaceRepresentation:
    genus: int
    punctures: int
    rank: int
    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        A = tuple(_as_twisted(x) for x in self.A)
        B = tuple(_as_twisted(x) for x in self.B)
        C = tuple(_as_twisted(x) for x in self.C)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        if self.genus < 0 or self.punctures < 1 or self.rank < 1:
            raise ShapeMismatch(
                f"need genus >= 0, punctures >= 1, rank >= 1; got {self.genus}, {self.punctures}, {self.rank}"
            )
        if len(A) != self.genus or len(B) != self.genus:
            raise ShapeMismatch(f"genus {self.genus} needs {self.genus} A and B matrices")
        if len(C) != self.punctures:
            raise ShapeMismatch(f"{self.punctures} punctures need {self.punctures} C matrices")
        for x in A + B + C:
            if x.n != self.rank:
                raise DimensionMismatch(f"generator is {x.n}x{x.n}, rank is {self.rank}")
            if not x.is_invertible():
                raise SingularMatrix("generator matrices must be invertible")

    @classmethod
    def from_generators(cls, A, B, C) -> "SurfaceRepresentation":
        C = [_as_twisted(x) for x in C]
        if not C:
            raise ShapeMismatch("at least one puncture is required")
        return cls(len(A), len(C), C[0].n, tuple(A), tuple(B), tuple(C))

    @property
    def generators(self) -> tuple:
        """All generator matrices in presentation order a_i, b_i, then c_j."""
        handles = tuple(x for pair in zip(self.A, self.B) for x in pair)
        return handles + self.C

    def relation_defect(self) -> TwistedMatrix:
        return relation_defect(self)

    def is_valid(self) -> bool:
        return is_valid(self)

    def flatten(self, conductor: int | None = None):
        """(A, B, C) as plain Matrix lists over a common field."""
        if conductor is None:
            conductor = common_conductor(x.twist for x in self.generators)
        conv = (lambda x: x.to_matrix()) if conductor == 1 else (lambda x: x.to_matrix(conductor))
        return (
            [conv(x) for x in self.A],
            [conv(x) for x in self.B],
            [conv(x) for x in self.C],
        )


def _commutator(a, b):
    return a * b * a.inverse() * b.inverse()


def relation_defect(rep: SurfaceRepresentation) -> TwistedMatrix:
    """Value of the surface relation on the generators; identity iff valid."""
    factors = [_commutator(a, b) for a, b in zip(rep.A, rep.B)] + list(rep.C)
    return reduce(lambda x, y: x * y, factors, TwistedMatrix.identity(rep.rank))


def matrix_relation_defect(A, B, C) -> Matrix:
    """Same product for plain matrices, e.g. flattened cyclotomic ones."""
    factors = [a @ b @ a.inverse() @ b.inverse() for a, b in zip(A, B)] + list(C)
    out = Matrix.identity(C[0].n, C[0].one)
    for f in factors:
        out = out @ f
    return out


def is_valid(rep: SurfaceRepresentation) -> bool:
    return relation_defect(rep).is_identity()


def conjugate(rep: SurfaceRepresentation, P) -> SurfaceRepresentation:
    """Replace every generator X by P X P^-1."""
    P = P if isinstance(P, Matrix) else Matrix(P)
    if P.shape != (rep.rank, rep.rank):
        raise DimensionMismatch(f"conjugator must be {rep.rank}x{rep.rank}")
    if not P.is_rational():
        raise TypeError("conjugator must be rational")
    try:
        P_inv = P.inverse()
    except SingularMatrix:
        raise SingularConjugator("conjugating matrix is singular") from None

    def conj(xs):
        return tuple(x.conjugate_by(P, P_inv) for x in xs)

    return SurfaceRepresentation(rep.genus, rep.punctures, rep.rank, conj(rep.A), conj(rep.B), conj(rep.C))


@dataclass(frozen=True)
class DirectSumRepresentation:
    """A direct sum kept as its summands; flattening is explicit."""

    summands: tuple

    def __post_init__(self):
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        if len(summands) < 2:
            raise ShapeMismatch("a direct sum needs at least two summands")
        g, m = summands[0].genus, summands[0].punctures
        for s in summands[1:]:
            if (s.genus, s.punctures) != (g, m):
                raise ShapeMismatch(
                    f"summands disagree on (genus, punctures): {(g, m)} vs {(s.genus, s.punctures)}"
                )

    @property
    def genus(self) -> int:
        return self.summands[0].genus

    @property
    def punctures(self) -> int:
        return self.summands[0].punctures

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.summands)

    def is_valid(self) -> bool:
        return all(is_valid(s) for s in self.summands)

    def conductor(self) -> int:
        return common_conductor(x.twist for s in self.summands for x in s.generators)

    def flatten(self, conductor: int | None = None):
        """Block-diagonal (A, B, C) matrices over Q(zeta_L), L the lcm of all twist orders.

        When every twist is trivial the blocks stay rational.
        """
        L = self.conductor() if conductor is None else conductor
        parts = [s.flatten(L) for s in self.summands]
        A = [Matrix.block_diag(blocks) for blocks in zip(*(p[0] for p in parts))]
        B = [Matrix.block_diag(blocks) for blocks in zip(*(p[1] for p in parts))]
        C = [Matrix.block_diag(blocks) for blocks in zip(*(p[2] for p in parts))]
        return A, B, C

    def relation_defect(self) -> Matrix:
        return matrix_relation_defect(*self.flatten())


def direct_sum(*reps) -> DirectSumRepresentation:
    summands = []
    for r in reps:
        summands.extend(r.summands if isinstance(r, DirectSumRepresentation) else [r])
    return DirectSumRepresentation(tuple(summands))
