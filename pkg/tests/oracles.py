"""Independent reference computations used by the tests.

Nothing here goes through the package's own elimination or closure code:
linear algebra is delegated to sympy, numeric checks use complex floats.
"""
import cmath
from fractions import Fraction

import sympy


def to_sympy(m):
    if isinstance(m, sympy.MatrixBase):
        return m
    rows = m.rows if hasattr(m, "rows") else m
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x for x in r] for r in rows])


def cyclo_to_complex(x):
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(float(c) * z**j for j, c in enumerate(x.coefficients))


def sympy_char_poly(m):
    lam = sympy.Symbol("lam")
    p = to_sympy(m).charpoly(lam)
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))


def sympy_rank(m):
    return to_sympy(m).rank()


def minimal_poly_partition(m, lam):
    """Jordan partition for eigenvalue lam from minimal-polynomial style tests.

    For n <= 4 a partition of the multiplicity is pinned down by its number of
    parts (geometric multiplicity) and its largest part (exponent of
    (x - lam) in the minimal polynomial).  Every partition hypothesis is
    tested against those two numbers.
    """
    M = to_sympy(m)
    n = M.shape[0]
    lam = sympy.nsimplify(lam)
    x = sympy.Symbol("x")
    cp = sympy.factor_list(M.charpoly(x).as_expr())[1]
    mult = 0
    others = []
    for fac, e in cp:
        if sympy.simplify(fac.subs(x, lam)) == 0 and sympy.degree(fac, x) == 1:
            mult = e
        else:
            others.append((fac, e))
    if mult == 0:
        raise ValueError("not an eigenvalue")
    rest = sympy.eye(n)
    for fac, e in others:
        rest = rest * _poly_at(fac, x, M) ** e
    D = M - lam * sympy.eye(n)
    largest = next(k for k in range(1, mult + 1) if (D**k * rest).is_zero_matrix)
    parts = n - D.rank()
    candidates = [p for p in _partitions(mult) if len(p) == parts and p[0] == largest]
    assert len(candidates) == 1, candidates
    return candidates[0]


def _poly_at(expr, x, M):
    poly = sympy.Poly(expr, x)
    out = sympy.zeros(*M.shape)
    for (k,), c in poly.terms():
        out += c * M**k
    return out


def _partitions(n, maximum=None):
    maximum = n if maximum is None else maximum
    if n == 0:
        yield []
        return
    for k in range(min(n, maximum), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _kernel_intersection(mats):
    stacked = sympy.Matrix.vstack(*mats)
    return stacked.nullspace()


def has_common_eigenvector(a, b):
    """Shemesh: A, B share an eigenvector over C iff the commutator kernels intersect."""
    A, B = to_sympy(a), to_sympy(b)
    n = A.shape[0]
    comms = [A**k * B**l - B**l * A**k for k in range(1, n) for l in range(1, n)]
    return len(_kernel_intersection(comms)) > 0


def _closure(vectors, gens):
    basis = sympy.Matrix.hstack(*vectors) if vectors else None
    changed = True
    while changed:
        changed = False
        for g in gens:
            cand = sympy.Matrix.hstack(basis, g * basis)
            if cand.rank() > basis.rank():
                basis = sympy.Matrix.hstack(*cand.columnspace())
                changed = True
    return basis.rank()


def brute_force_reducible(gens, rng, trials=20):
    """Reducibility of a tuple of n x n matrices, n <= 3, by subspace enumeration.

    Candidates are span-closures of rational eigenvectors of every generator
    and of random small-integer vectors, on the matrices and on their
    transposes (annihilators of transpose-invariant subspaces are invariant).
    For two generators the Shemesh criterion catches invariant subspaces
    that contain no rational vector.
    """
    mats = [to_sympy(g) for g in gens]
    n = mats[0].shape[0]
    if n == 1:
        return False
    for family in (mats, [m.T for m in mats]):
        vecs = []
        for m in family:
            for ev, _, basis in m.eigenvects():
                if ev.is_rational:
                    vecs.extend(basis)
        for _ in range(trials):
            vecs.append(sympy.Matrix([rng.randint(-2, 2) for _ in range(n)]))
        for v in vecs:
            if v.is_zero_matrix:
                continue
            if _closure([v], family) < n:
                return True
    if len(mats) == 2:
        a, b = mats
        if has_common_eigenvector(a, b) or has_common_eigenvector(a.T, b.T):
            return True
    return False

