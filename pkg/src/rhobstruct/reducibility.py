"""Irreducibility over C of a tuple of matrices.

By Burnside's theorem a tuple acts irreducibly on C^n exactly when the unital
algebra it generates is all of M_n(C).  For rational generators that algebra
is the rational algebra tensored up to C, so its dimension can be computed
over Q.  Scalar twists never change invariant subspaces and are dropped.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch
from .matrix import Matrix, char_poly, rational_roots
from .twisted import TwistedMatrix


class _Span:
    """Incrementally maintained row-reduced basis of a subspace of Q^d."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []

    def reduce(self, v) -> list:
        v = list(v)
        for p, row in self.rows:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        self.rows.append((p, [x * inv for x in v]))
        return True

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def basis(self) -> list[tuple]:
        return [tuple(r) for _, r in self.rows]


def _bodies(rep_or_gens) -> list[Matrix]:
    gens = getattr(rep_or_gens, "generators", rep_or_gens)
    out = []
    for g in gens:
        if isinstance(g, TwistedMatrix):
            g = g.body
        elif not isinstance(g, Matrix):
            g = Matrix(g)
        out.append(g)
    if not out:
        raise DimensionMismatch("no generators")
    n = out[0].n
    if any(g.shape != (n, n) for g in out):
        raise DimensionMismatch("generators must share one square size")
    return out


def algebra_closure(generators) -> list[Matrix]:
    """A basis of the unital algebra generated by ``generators``."""
    gens = _bodies(generators)
    n = gens[0].n
    span = _Span()
    ident = Matrix.identity(n)
    span.add(ident.flat())
    basis = [ident]
    frontier = [ident]
    while frontier:
        fresh = []
        for b in frontier:
            for g in gens:
                p = g @ b
                if span.add(p.flat()):
                    fresh.append(p)
        basis.extend(fresh)
        if len(basis) > n * n:
            raise RuntimeError("algebra closure exceeded n^2 dimensions")
        frontier = fresh
    return basis


def algebra_dimension(generators) -> int:
    return len(algebra_closure(generators))


def is_irreducible(rep) -> bool:
    gens = _bodies(rep)
    n = gens[0].n
    if n == 1:
        return True
    return algebra_dimension(gens) == n * n


def _apply(m: Matrix, v) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m.rows)


def span_closure(vectors, generators) -> list[tuple]:
    """Basis of the smallest subspace containing ``vectors`` and stable under ``generators``."""
    span = _Span()
    queue = [tuple(v) for v in vectors if span.add(v)]
    while queue:
        v = queue.pop()
        for g in generators:
            w = _apply(g, v)
            if span.add(w):
                queue.append(w)
    return span.basis()


def rational_eigenvectors(m: Matrix) -> list[tuple]:
    out = []
    for q, _ in rational_roots(char_poly(m), strict=False):
        out.extend((m - Matrix.identity(m.n).scale(q)).nullspace())
    return out


def invariant_subspace_witness(rep) -> list[tuple] | None:
    """A proper nonzero invariant subspace, found from rational eigenvectors.

    Tries the span-closure of every rational eigenvector of every generator,
    then the same on transposes (the annihilator of a transpose-invariant
    subspace is invariant).  Returns a basis or None; None does not prove
    irreducibility.
    """
    gens = _bodies(rep)
    n = gens[0].n
    if n == 1:
        return None
    for g in gens:
        for v in rational_eigenvectors(g):
            w = span_closure([v], gens)
            if len(w) < n:
                return w
    gens_t = [g.T for g in gens]
    for g in gens_t:
        for v in rational_eigenvectors(g):
            w = span_closure([v], gens_t)
            if len(w) < n:
                return Matrix(w).nullspace()
    return None


def is_invariant(subspace, generators) -> bool:
    span = _Span()
    for v in subspace:
        span.add(v)
    return all(_apply(g, v) in span for g in _bodies(generators) for v in subspace)
