"""Explicit reducible representations with single-block local monodromy.

F1  unipotent, C_i = exp(nu_i N) with N a full nilpotent shift, sum nu_i = 0.
F2  a fixed genus-0 example with three punctures in rank 4.
F3  rank 4, m >= 3 punctures, built from the logarithm of F2's first matrix.
F4  rank 2, genus >= 1, unipotent upper-triangular.
F5  even rank >= 4, genus >= 1; the first commutator is a single Jordan block
    with eigenvalue -1 and the punctures share its inverse equally.

``mainthm_witness`` combines these into representations with no semistable
realization, and ``remark52_build`` extends a rank-2 representation by a
trivial line to rank 3.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import (
    BadNuSum,
    BadRankParity,
    GenericityExhausted,
    GenusTooSmall,
    OutOfTheoremRange,
    PreconditionFailed,
    TooFewPunctures,
    ZeroNu,
)
from .matrix import Matrix
from .scalars import ONE, UnityRoot, unity_product
from .spectral import is_single_jordan_block, nilpotent_exp, spectrum, unipotent_log
from .surface import DirectSumRepresentation, SurfaceRepresentation, direct_sum, is_valid
from .twisted import TwistedMatrix

F2_C1 = Matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
F2_C2 = Matrix([[3, 1, 1, -1], [-4, -1, 1, 2], [0, 0, 3, 1], [0, 0, -4, -1]])
F2_C3 = Matrix([[-1, 0, 2, -1], [4, -1, 0, 1], [0, 0, -1, 0], [0, 0, 4, -1]])

ALPHA1 = Matrix([[1, 2], [0, 1]])
ALPHA2 = Matrix([[0, 1], [0, 0]])
SWAP = Matrix([[0, 1], [1, 0]])
DELTA1 = Matrix([[-3, 2], [-2, 1]])
DELTA2 = Matrix([[-4, 1], [-1, 0]])


def _identities(g: int, n: int) -> tuple:
    return tuple(TwistedMatrix.identity(n) for _ in range(g))


def default_nu(m: int) -> list[Fraction]:
    """(1, ..., 1, -(m-1)); a single puncture gets nu = 0."""
    if m == 1:
        return [Fraction(0)]
    return [Fraction(1)] * (m - 1) + [Fraction(-(m - 1))]


def family1(n: int, m: int, nu=None, g: int = 0) -> SurfaceRepresentation:
    if n < 1 or m < 1 or g < 0:
        raise PreconditionFailed("family F1 needs n >= 1, m >= 1, g >= 0")
    nu = default_nu(m) if nu is None else [Fraction(x) for x in nu]
    if len(nu) != m:
        raise PreconditionFailed(f"need {m} values of nu, got {len(nu)}")
    if sum(nu) != 0:
        raise BadNuSum(f"nu must sum to 0, sums to {sum(nu)}")
    if m >= 2 and any(x == 0 for x in nu):
        raise ZeroNu("every nu_i must be nonzero")
    shift = Matrix.shift(n)
    C = tuple(TwistedMatrix(nilpotent_exp(shift, x)) for x in nu)
    return SurfaceRepresentation(g, m, n, _identities(g, n), _identities(g, n), C)


def family2() -> SurfaceRepresentation:
    C = tuple(TwistedMatrix(c) for c in (F2_C1, F2_C2, F2_C3))
    return SurfaceRepresentation(0, 3, 4, (), (), C)


def family3(m: int, g: int = 0) -> SurfaceRepresentation:
    if m < 3:
        raise TooFewPunctures(f"family F3 needs at least 3 punctures, got {m}")
    if g < 0:
        raise PreconditionFailed("genus must be >= 0")
    log_c1 = unipotent_log(F2_C1)
    twist = UnityRoot(1, 2 * m - 4)
    head = TwistedMatrix(nilpotent_exp(log_c1, Fraction(1, m - 2)), twist)
    C = (head,) * (m - 2) + (TwistedMatrix(F2_C2, UnityRoot(1, 2)), TwistedMatrix(F2_C3))
    return SurfaceRepresentation(g, m, 4, _identities(g, 4), _identities(g, 4), C)


def family4(m: int, g: int = 1) -> SurfaceRepresentation:
    if g < 1:
        raise GenusTooSmall("family F4 needs genus >= 1")
    if m < 1:
        raise PreconditionFailed("need at least one puncture")
    A = (TwistedMatrix(ALPHA1),) + _identities(g - 1, 2)
    B = (TwistedMatrix(Matrix([[1, 0], [0, 2]])),) + _identities(g - 1, 2)
    C = (TwistedMatrix(Matrix([[1, Fraction(-1, m)], [0, 1]])),) * m
    return SurfaceRepresentation(g, m, 2, A, B, C)


def _block_matrix(blocks: dict, k: int) -> Matrix:
    """2k x 2k matrix from 2x2 blocks keyed by (block_row, block_col)."""
    rows = [[Fraction(0)] * (2 * k) for _ in range(2 * k)]
    for (bi, bj), blk in blocks.items():
        for i in range(2):
            for j in range(2):
                rows[2 * bi + i][2 * bj + j] = blk[i, j]
    return Matrix(rows)


def family5_handle(n: int) -> tuple[Matrix, Matrix]:
    """A_1 (alpha_1 on the block diagonal, alpha_2 above it) and B_1 (swap blocks)."""
    k = n // 2
    a_blocks = {(i, i): ALPHA1 for i in range(k)}
    a_blocks.update({(i, i + 1): ALPHA2 for i in range(k - 1)})
    b_blocks = {(i, i): SWAP for i in range(k)}
    return _block_matrix(a_blocks, k), _block_matrix(b_blocks, k)


def family5_commutator(n: int) -> Matrix:
    a, b = family5_handle(n)
    return a @ b @ a.inverse() @ b.inverse()


def family5(n: int, m: int, g: int = 1) -> SurfaceRepresentation:
    if g < 1:
        raise GenusTooSmall("family F5 needs genus >= 1")
    if n < 4 or n % 2:
        raise BadRankParity(f"family F5 needs even rank >= 4, got {n}")
    if m < 1:
        raise PreconditionFailed("need at least one puncture")
    a, b = family5_handle(n)
    k = a @ b @ a.inverse() @ b.inverse()
    single, lam = is_single_jordan_block(k)
    assert single and lam.value == -1, "commutator must be one Jordan block with eigenvalue -1"
    body = nilpotent_exp(unipotent_log(-k), Fraction(-1, m))
    C = (TwistedMatrix(body, UnityRoot(1, 2 * m)),) * m
    A = (TwistedMatrix(a),) + _identities(g - 1, n)
    B = (TwistedMatrix(b),) + _identities(g - 1, n)
    return SurfaceRepresentation(g, m, n, A, B, C)


def mainthm_witness(g: int, m: int, n: int) -> SurfaceRepresentation | DirectSumRepresentation:
    """A representation of rank n with no semistable logarithmic realization."""
    if g == 0 and m >= 3 and n >= 4:
        if n == 4:
            return family3(m, 0)
        return direct_sum(family1(n - 4, m, g=0), family3(m, 0))
    if g >= 1 and m >= 1 and n >= 5:
        if n % 2:
            return direct_sum(family1(1, m, g=g), family5(n - 1, m, g))
        return direct_sum(family4(m, g), family5(n - 2, m, g))
    raise OutOfTheoremRange(f"no witness for (g, m, n) = ({g}, {m}, {n})")


# rank-3 extension of a rank-2 representation


def _embed(x: Matrix, corner=Fraction(1), top=(Fraction(0), Fraction(0))) -> Matrix:
    return Matrix([[corner, *top], [0, *x.rows[0]], [0, *x.rows[1]]])


def _single_eigenvalue(c: TwistedMatrix) -> Fraction:
    single, lam = is_single_jordan_block(c)
    if not single:
        raise PreconditionFailed("every local monodromy must be a single Jordan block")
    return lam.value


def extend_with_gammas(rho2: SurfaceRepresentation, gammas) -> SurfaceRepresentation:
    """Rank-3 extension with top rows gammas[i] for i < m; the last row is solved for."""
    m = rho2.punctures
    lams = [_single_eigenvalue(c) for c in rho2.C]
    A = tuple(TwistedMatrix(_embed(x.body)) for x in rho2.A)
    B = tuple(TwistedMatrix(_embed(x.body)) for x in rho2.B)
    head = [TwistedMatrix(_embed(c.body, lams[i], gammas[i])) for i, c in enumerate(rho2.C[:-1])]
    prefix = TwistedMatrix.identity(3)
    for a, b in zip(A, B):
        prefix = prefix * a * b * a.inverse() * b.inverse()
    for c in head:
        prefix = prefix * c
    p = prefix.body[0, 0]
    s = Matrix([list(prefix.body.rows[0][1:])])
    last_body = rho2.C[-1].body
    gamma_m = (s @ last_body).scale(-1 / p).rows[0]
    last = TwistedMatrix(_embed(last_body, lams[-1], gamma_m))
    return SurfaceRepresentation(rho2.genus, m, 3, A, B, tuple(head) + (last,))


def remark52_build(rho2: SurfaceRepresentation, seed: int = 0, max_attempts: int = 32) -> SurfaceRepresentation:
    """Extend a rank-2 representation by a rank-1 subrepresentation.

    ``rho2`` must be rational, valid, of rank 2 with m >= 2 punctures, have
    single-block local monodromy and eigenvalues multiplying to 1.  Rows of
    the extension are drawn from ``seed`` until every local monodromy of the
    result is a single 3x3 Jordan block.
    """
    if rho2.rank != 2 or rho2.punctures < 2:
        raise PreconditionFailed("need a rank-2 representation with at least two punctures")
    if any(not x.twist.is_one() for x in rho2.generators):
        raise PreconditionFailed("only rational rank-2 representations are supported")
    if not is_valid(rho2):
        raise PreconditionFailed("rank-2 representation does not satisfy the surface relation")
    lams = [_single_eigenvalue(c) for c in rho2.C]
    prod = Fraction(1)
    for lam in lams:
        prod *= lam
    if prod != 1:
        raise PreconditionFailed("local eigenvalues must multiply to 1")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        gammas = [
            (Fraction(rng.randint(-6, 6), rng.randint(1, 3)), Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
            for _ in range(rho2.punctures - 1)
        ]
        rep = extend_with_gammas(rho2, gammas)
        if all(is_single_jordan_block(c)[0] for c in rep.C):
            return rep
    raise GenericityExhausted(f"no single-block extension in {max_attempts} attempts")


def eigenvalue_product(rep: SurfaceRepresentation) -> UnityRoot:
    """Product over punctures of the single local eigenvalue, as a root of unity."""
    lams = []
    for c in rep.C:
        (lam, _), = spectrum(c)
        root = lam.as_unity_root()
        if root is None:
            raise PreconditionFailed(f"eigenvalue {lam} is not a root of unity")
        lams.append(root)
    return unity_product(lams) if lams else ONE


FAMILIES = {
    "f1": family1,
    "f2": family2,
    "f3": family3,
    "f4": family4,
    "f5": family5,
    "main": mainthm_witness,
    "r52": remark52_build,
}
