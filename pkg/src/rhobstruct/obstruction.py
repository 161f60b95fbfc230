"""Residue bookkeeping and the semistable non-realizability verdicts.

Conventions.  A logarithmic connection with residue eigenvalue beta at a
puncture has local monodromy eigenvalue exp(-2 pi i beta).  The Deligne
residue of a root of unity lam is the unique beta in [0, 1) with that
property.  The Fuchs relation ties residues to the degree of the bundle:
sum of all residue eigenvalues = -deg(E).

If a semistable bundle realizes a reducible representation whose local
monodromies are single Jordan blocks with eigenvalues lam_i, then every
residue at p_i equals the Deligne residue of lam_i and the slope mu satisfies
exp(2 pi i mu) = prod lam_i.  The degrees allowed by that congruence form an
arithmetic progression with step equal to the rank, or nothing at all.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain

from .errors import HypothesisNotMet, InvalidRepresentation, ShapeMismatch, UnsupportedEigenvalue
from .scalars import UnityRoot, unity_product
from .spectral import MonodromyAnalysis, analyze
from .surface import DirectSumRepresentation, SurfaceRepresentation

NO_SEMISTABLE = "NoSemistableRealization"
CONSTRAINED = "Constrained"
INCONCLUSIVE = "Inconclusive"


def deligne_residue(lam: UnityRoot) -> Fraction:
    """The beta in [0, 1) with exp(-2 pi i beta) = lam."""
    return (-lam.angle) % 1


def fuchs_degree(betas) -> Fraction:
    """Degree forced by the Fuchs relation: minus the sum of all residues."""
    return -sum((Fraction(b) for b in chain.from_iterable(betas)), Fraction(0))


@dataclass(frozen=True)
class ResidueProfile:
    rank: int
    lambdas: tuple
    betas: tuple

    @classmethod
    def deligne(cls, lambdas, rank: int) -> "ResidueProfile":
        lambdas = tuple(lambdas)
        return cls(rank, lambdas, tuple(deligne_residue(lam) for lam in lambdas))

    def degree(self) -> Fraction:
        return fuchs_degree([b] * self.rank for b in self.betas)


@dataclass(frozen=True)
class SlopeConstraint:
    """Degrees d of a semistable realization must satisfy d/rank == slope_class mod 1.

    ``degrees`` is ``(start, step)`` for the progression start + step*Z, or
    None when no integer degree is allowed.
    """

    rank: int
    product: UnityRoot
    slope_class: Fraction
    degrees: tuple | None
    forced_beta: tuple
    genus_zero_applied: bool = False

    @property
    def is_empty(self) -> bool:
        return self.degrees is None

    def admits(self, d: int) -> bool:
        if self.degrees is None:
            return False
        start, step = self.degrees
        return (d - start) % step == 0

    def window(self, lo: int, hi: int) -> list[int]:
        return [d for d in range(lo, hi + 1) if self.admits(d)]


@dataclass(frozen=True)
class Verdict:
    kind: str
    reasons: tuple = ()
    constraint: SlopeConstraint | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in (NO_SEMISTABLE, CONSTRAINED, INCONCLUSIVE):
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if self.kind != INCONCLUSIVE and not self.reasons:
            raise ValueError("a decisive verdict needs reasons")


def _lambdas_or_raise(analysis: MonodromyAnalysis) -> list[UnityRoot]:
    lams = []
    for i, p in enumerate(analysis.punctures):
        if not p.single_block:
            raise HypothesisNotMet(f"local monodromy at puncture {i + 1} is not a single Jordan block")
        if p.lam is None:
            raise UnsupportedEigenvalue(f"eigenvalue {p.eigenvalue} at puncture {i + 1} is not a root of unity")
        lams.append(p.lam)
    return lams


def slope_constraint(lambdas, rank: int, genus: int) -> SlopeConstraint:
    lambdas = list(lambdas)
    prod = unity_product(lambdas)
    k, N = prod.k, prod.n
    degrees = None
    if rank % N == 0:
        degrees = (rank * k // N, rank)
    genus_zero = False
    if genus == 0:
        # On P^1 a semistable bundle has integral slope.
        genus_zero = True
        if degrees is not None and degrees[0] % rank != 0:
            degrees = None
    return SlopeConstraint(
        rank=rank,
        product=prod,
        slope_class=prod.angle,
        degrees=degrees,
        forced_beta=tuple(deligne_residue(lam) for lam in lambdas),
        genus_zero_applied=genus_zero,
    )


def thm_ss_constraint(rep: SurfaceRepresentation, analysis: MonodromyAnalysis, reducible: bool) -> SlopeConstraint:
    """Slope constraint for a reducible (or rank one) single-block representation."""
    if not reducible and rep.rank > 1:
        raise HypothesisNotMet("representation is irreducible of rank > 1")
    lams = _lambdas_or_raise(analysis)
    return slope_constraint(lams, rep.rank, rep.genus)


def _summand_failures(tag: str, a: MonodromyAnalysis) -> list[str]:
    out = []
    bad = [i + 1 for i, p in enumerate(a.punctures) if not p.single_block]
    if bad:
        out.append(f"{tag}-not-single-block-at-" + ",".join(map(str, bad)))
    elif any(p.lam is None for p in a.punctures):
        out.append(f"{tag}-eigenvalue-not-root-of-unity")
    if a.rank > 1 and not a.reducible:
        out.append(f"{tag}-irreducible")
    return out


def thm_sums_verdict(a1: MonodromyAnalysis, a2: MonodromyAnalysis) -> Verdict:
    """Direct-sum obstruction for two summands.

    Each summand must be reducible or of rank one, with single-block local
    monodromy; the local eigenvalues must differ at every puncture and their
    products must differ.
    """
    if len(a1.punctures) != len(a2.punctures):
        raise ShapeMismatch("summands have different numbers of punctures")
    failures = _summand_failures("summand-1", a1) + _summand_failures("summand-2", a2)
    if failures:
        return Verdict(INCONCLUSIVE, tuple(failures))
    l1, l2 = a1.lambdas, a2.lambdas
    clashes = [i + 1 for i, (x, y) in enumerate(zip(l1, l2)) if x == y]
    if clashes:
        failures.append("equal-local-eigenvalues-at-" + ",".join(map(str, clashes)))
    p1, p2 = unity_product(l1), unity_product(l2)
    if p1 == p2:
        failures.append("equal-eigenvalue-products")
    if failures:
        return Verdict(INCONCLUSIVE, tuple(failures))
    return Verdict(
        NO_SEMISTABLE,
        ("direct-sum-obstruction",),
        details={"products": (p1, p2)},
    )


def realizability_report(rep) -> Verdict:
    """Run every applicable obstruction on a representation or a two-term direct sum."""
    if isinstance(rep, DirectSumRepresentation):
        return _report_sum(rep)
    if not rep.is_valid():
        raise InvalidRepresentation("generators do not satisfy the surface relation")
    analysis = analyze(rep)
    return _report_single(rep, analysis)


def _report_single(rep: SurfaceRepresentation, analysis: MonodromyAnalysis) -> Verdict:
    failures = _summand_failures("representation", analysis)
    if failures:
        return Verdict(INCONCLUSIVE, tuple(failures), details={"analysis": analysis})
    constraint = thm_ss_constraint(rep, analysis, bool(analysis.reducible))
    details = {"analysis": analysis}
    if constraint.is_empty:
        reasons = ["slope-constraint"]
        if rep.rank % constraint.product.n:
            reasons.append("slope-denominator-does-not-divide-rank")
        else:
            reasons.append("genus-zero-integral-slope")
        return Verdict(NO_SEMISTABLE, tuple(reasons), constraint, details)
    return Verdict(CONSTRAINED, ("slope-constraint",), constraint, details)


def _report_sum(rep: DirectSumRepresentation) -> Verdict:
    for i, s in enumerate(rep.summands):
        if not s.is_valid():
            raise InvalidRepresentation(f"summand {i + 1} does not satisfy the surface relation")
    if len(rep.summands) != 2:
        return Verdict(INCONCLUSIVE, ("only-two-summand-sums-supported",))
    a1, a2 = (analyze(s) for s in rep.summands)
    verdict = thm_sums_verdict(a1, a2)
    details = dict(verdict.details, analyses=(a1, a2))
    return Verdict(verdict.kind, verdict.reasons, None, details)
