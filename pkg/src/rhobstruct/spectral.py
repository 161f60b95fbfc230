"""Exact spectral data of local monodromy matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import NotAnEigenvalue, NotNilpotent, NotUnipotent, SpectrumNotRational
from .matrix import Matrix, rational_eigenvalues
from .scalars import ONE, TwistedScalar, UnityRoot
from .twisted import TwistedMatrix


def _as_twisted(m) -> TwistedMatrix:
    return m if isinstance(m, TwistedMatrix) else TwistedMatrix(m)


def _is_nilpotent(m: Matrix) -> bool:
    return (m ** m.n).is_zero()


def nilpotent_exp(m: Matrix, scale=1) -> Matrix:
    """exp(scale * M) for nilpotent rational M, as a finite sum."""
    if not _is_nilpotent(m):
        raise NotNilpotent("matrix exponential is only taken of nilpotent matrices")
    x = m.scale(Fraction(scale))
    term = Matrix.identity(m.n)
    total = term
    for k in range(1, m.n):
        term = term @ x
        if term.is_zero():
            break
        total = total + term.scale(Fraction(1, factorial(k)))
    return total


def unipotent_log(u: Matrix) -> Matrix:
    """log U = sum_{k>=1} (-1)^{k+1} (U - I)^k / k for unipotent U."""
    n = u.n
    x = u - Matrix.identity(n)
    if not _is_nilpotent(x):
        raise NotUnipotent("logarithm is only taken of unipotent matrices")
    total = Matrix.zeros(n)
    term = Matrix.identity(n)
    for k in range(1, n):
        term = term @ x
        if term.is_zero():
            break
        total = total + term.scale(Fraction((-1) ** (k + 1), k))
    return total


def spectrum(m) -> list[tuple[TwistedScalar, int]]:
    """Eigenvalues with algebraic multiplicity: twist times the rational spectrum of the body."""
    m = _as_twisted(m)
    return [(TwistedScalar(m.twist, q), mult) for q, mult in rational_eigenvalues(m.body)]


def _shift_for(m: TwistedMatrix, lam) -> Fraction:
    if isinstance(lam, UnityRoot):
        lam = TwistedScalar(lam, 1)
    elif not isinstance(lam, TwistedScalar):
        lam = TwistedScalar(ONE, Fraction(lam))
    q = lam.over(m.twist)
    if q is None:
        raise NotAnEigenvalue(f"{lam} is not an eigenvalue")
    return q


def rank_sequence(m, lam) -> list[int]:
    """ranks of (M - lam I)^k for k = 0, 1, ... until they stabilise."""
    m = _as_twisted(m)
    n = m.n
    d = m.body - Matrix.identity(n).scale(_shift_for(m, lam))
    ranks = [n]
    power = Matrix.identity(n)
    while True:
        power = power @ d
        r = power.rank()
        if r == ranks[-1]:
            return ranks
        ranks.append(r)


def jordan_type(m, lam) -> list[int]:
    """Jordan block sizes for eigenvalue ``lam``, largest first."""
    ranks = rank_sequence(m, lam)
    if len(ranks) == 1:
        raise NotAnEigenvalue(f"{lam} is not an eigenvalue")
    ranks.append(ranks[-1])
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    at_least.append(0)
    sizes = []
    for k in range(len(at_least) - 1, 0, -1):
        sizes.extend([k] * (at_least[k - 1] - at_least[k]))
    return sizes


def is_single_jordan_block(m) -> tuple[bool, TwistedScalar | None]:
    m = _as_twisted(m)
    spec = spectrum(m)
    if len(spec) != 1:
        return False, None
    lam = spec[0][0]
    q = _shift_for(m, lam)
    if (m.body - Matrix.identity(m.n).scale(q)).rank() == m.n - 1:
        return True, lam
    return False, None


@dataclass(frozen=True)
class PunctureAnalysis:
    eigenvalues: tuple = ()
    jordan: tuple = ()  # one partition per eigenvalue, same order
    single_eigenvalue: bool = False
    single_block: bool = False
    error: str | None = None

    @property
    def eigenvalue(self) -> TwistedScalar | None:
        return self.eigenvalues[0][0] if self.single_eigenvalue else None

    @property
    def lam(self) -> UnityRoot | None:
        """The unique local eigenvalue as a root of unity, if it is one."""
        ev = self.eigenvalue
        return None if ev is None else ev.as_unity_root()


@dataclass(frozen=True)
class MonodromyAnalysis:
    rank: int
    punctures: tuple
    reducible: bool | None = None
    notes: tuple = field(default=())

    @property
    def all_single_block(self) -> bool:
        return all(p.single_block for p in self.punctures)

    @property
    def lambdas(self) -> list[UnityRoot | None]:
        return [p.lam for p in self.punctures]


def analyze_matrix(c) -> PunctureAnalysis:
    c = _as_twisted(c)
    try:
        spec = spectrum(c)
    except SpectrumNotRational as exc:
        return PunctureAnalysis(error=str(exc))
    parts = tuple(tuple(jordan_type(c, lam)) for lam, _ in spec)
    single_ev = len(spec) == 1
    return PunctureAnalysis(
        eigenvalues=tuple(spec),
        jordan=parts,
        single_eigenvalue=single_ev,
        single_block=single_ev and parts[0] == (c.n,),
    )


def analyze(rep, with_reducibility: bool = True) -> MonodromyAnalysis:
    """Local monodromy analysis at every puncture, plus a reducibility verdict."""
    from .reducibility import is_irreducible

    reducible = (not is_irreducible(rep)) if with_reducibility else None
    return MonodromyAnalysis(
        rank=rep.rank,
        punctures=tuple(analyze_matrix(c) for c in rep.C),
        reducible=reducible,
    )
