"""Residue and degree shadow of elementary lattice modifications.

A line subbundle F and its quotient E/F each carry one residue per puncture.
An elementary modification along a residue eigenspace at p lowers that
residue by one and raises the degree of the line by one.  When the two
local monodromy eigenvalues at p differ, the fibre of E at p splits into the
two eigenlines, so either side can be modified there; repeating this balances
deg F against deg E/F, which makes E semistable of even degree.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal

from .errors import NoEigenspaceSplit, NonIntegralDifference, NonUnitProduct, NoSplitPoint
from .obstruction import deligne_residue
from .scalars import unity_product

Side = Literal["sub", "quot"]


@dataclass(frozen=True)
class LatticeLine:
    lambdas: tuple
    betas: tuple
    degree: Fraction

    def __post_init__(self):
        lambdas = tuple(self.lambdas)
        betas = tuple(Fraction(b) for b in self.betas)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "degree", Fraction(self.degree))
        if len(lambdas) != len(betas):
            raise ValueError("one residue per puncture")
        for lam, b in zip(lambdas, betas):
            if b % 1 != deligne_residue(lam):
                raise ValueError(f"residue {b} does not exponentiate to {lam}")
        if self.degree != -sum(betas, Fraction(0)):
            raise ValueError(f"degree {self.degree} violates the Fuchs relation")

    @property
    def punctures(self) -> int:
        return len(self.lambdas)


@dataclass(frozen=True)
class LatticePair:
    sub: LatticeLine
    quot: LatticeLine

    def __post_init__(self):
        if self.sub.punctures != self.quot.punctures:
            raise ValueError("sub and quotient lines must share their punctures")

    @property
    def punctures(self) -> int:
        return self.sub.punctures

    @property
    def total_degree(self) -> Fraction:
        return self.sub.degree + self.quot.degree

    def splits_at(self, p: int) -> bool:
        return self.sub.lambdas[p] != self.quot.lambdas[p]


@dataclass(frozen=True)
class Move:
    puncture: int
    side: str


def deligne_line(lambdas) -> LatticeLine:
    """Line with Deligne residues; its product of eigenvalues must be 1."""
    lambdas = tuple(lambdas)
    if not unity_product(lambdas).is_one():
        raise NonUnitProduct("eigenvalues of a rank-one representation must multiply to 1")
    betas = tuple(deligne_residue(lam) for lam in lambdas)
    return LatticeLine(lambdas, betas, -sum(betas, Fraction(0)))


def modify_line(line: LatticeLine, p: int) -> LatticeLine:
    betas = list(line.betas)
    betas[p] -= 1
    return replace(line, betas=tuple(betas), degree=line.degree + 1)


def gabber_move(pair: LatticePair, p: int, side: Side) -> LatticePair:
    if side not in ("sub", "quot"):
        raise ValueError(f"side must be 'sub' or 'quot', got {side!r}")
    if not pair.splits_at(p):
        raise NoEigenspaceSplit(f"local eigenvalues coincide at puncture {p + 1}")
    if side == "sub":
        return LatticePair(modify_line(pair.sub, p), pair.quot)
    return LatticePair(pair.sub, modify_line(pair.quot, p))


def balance(pair: LatticePair) -> tuple[LatticePair, list[Move]]:
    """Raise the smaller degree at the first splitting puncture until both degrees agree."""
    moves: list[Move] = []
    if pair.sub.degree == pair.quot.degree:
        return pair, moves
    diff = pair.sub.degree - pair.quot.degree
    if diff.denominator != 1:
        raise ValueError("line degrees must be integers")
    p = next((i for i in range(pair.punctures) if pair.splits_at(i)), None)
    if p is None:
        raise NoSplitPoint("degrees differ but no puncture splits the fibre")
    side: Side = "quot" if diff > 0 else "sub"
    for _ in range(abs(diff.numerator)):
        pair = gabber_move(pair, p, side)
        moves.append(Move(p, side))
    return pair, moves


def flag_residue_check(full, sub) -> bool:
    """Whether ``sub`` is the bottom slice of ``full`` in the integer-step order."""
    full = sorted(Fraction(x) for x in full)
    sub = sorted(Fraction(x) for x in sub)
    if any((b - a).denominator != 1 for a, b in zip(full, full[1:])):
        raise NonIntegralDifference("residues of a single local eigenvalue differ by integers")
    return sub == full[: len(sub)]


def random_pair(rng, punctures: int, roots) -> LatticePair:
    """Deligne pair with per-line eigenvalue product 1, eigenvalues drawn from ``roots``."""

    def line():
        lams = [rng.choice(roots) for _ in range(punctures - 1)]
        lams.append(unity_product(lams).inverse())
        return deligne_line(lams)

    return LatticePair(line(), line())

