from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhobstruct.errors import DimensionMismatch, SingularMatrix, SpectrumNotRational
from rhobstruct.families import F2_C1, F2_C2, F2_C3
from rhobstruct.matrix import Matrix, char_poly, rank, rational_eigenvalues
from rhobstruct.scalars import CyclotomicNumber, UnityRoot
from rhobstruct.twisted import TwistedMatrix, twisted_mul

from oracles import sympy_char_poly, sympy_rank


@st.composite
def int_matrices(draw, n=None, lo=-3, hi=3):
    n = draw(st.integers(1, 5)) if n is None else n
    return Matrix([[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(n)])


@st.composite
def invertible(draw, n):
    m = draw(int_matrices(n))
    if m.det() == 0:
        m = m + Matrix.identity(n).scale(7)
    if m.det() == 0:
        m = Matrix.identity(n)
    return m


class TestTwistedMul:
    def test_identity(self):
        i = TwistedMatrix.identity(3)
        assert twisted_mul(i, i) == i

    def test_first_row_of_c1_c2(self):
        prod = twisted_mul(TwistedMatrix(F2_C1), TwistedMatrix(F2_C2))
        assert prod.body.rows[0] == (-1, 0, 2, 1)

    def test_twists_multiply(self):
        a = TwistedMatrix(Matrix.identity(2), UnityRoot(1, 2))
        assert twisted_mul(a, a).twist == UnityRoot(0, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            twisted_mul(TwistedMatrix.identity(2), TwistedMatrix.identity(3))

    def test_canonical_equality(self):
        a = TwistedMatrix(F2_C2, UnityRoot(1, 2))
        b = TwistedMatrix(-F2_C2)
        assert a == b
        c = TwistedMatrix(F2_C2, UnityRoot(1, 6))
        d = TwistedMatrix(-F2_C2, UnityRoot(2, 3))
        assert c == d

    def test_flatten_to_cyclotomic(self):
        m = TwistedMatrix(Matrix([[1, 2], [0, 1]]), UnityRoot(1, 3)).to_matrix()
        z = CyclotomicNumber.zeta(1, 3)
        assert m[0, 1] == z * 2 and m[1, 0] == 0


class TestRank:
    def test_identity(self):
        assert rank(Matrix.identity(4)) == 4

    def test_c2_minus_identity(self):
        assert rank(F2_C2 - Matrix.identity(4)) == 3
        assert sympy_rank(F2_C2 - Matrix.identity(4)) == 3

    def test_zero(self):
        assert rank(Matrix.zeros(3)) == 0

    @given(int_matrices())
    @settings(max_examples=80)
    def test_matches_sympy(self, m):
        assert m.rank() == sympy_rank(m)

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(int_matrices(n), invertible(n))))
    @settings(max_examples=60)
    def test_invariant_under_invertible_left_multiplication(self, pair):
        m, p = pair
        assert (p @ m).rank() == m.rank()

    def test_cyclotomic_rank(self):
        z = CyclotomicNumber.zeta(1, 3)
        m = Matrix([[z, z * z], [1, z]])
        assert m.rank() == 1
        assert Matrix([[z, 1], [1, z]]).rank() == 2


class TestCharPoly:
    def test_repeated_block_of_c2(self):
        assert char_poly(Matrix([[3, 1], [-4, -1]])) == (1, -2, 1)

    def test_identity(self):
        assert char_poly(Matrix.identity(2)) == (1, -2, 1)

    def test_nilpotent_shift(self):
        assert char_poly(Matrix.shift(3)) == (0, 0, 0, 1)

    @given(int_matrices())
    @settings(max_examples=60)
    def test_matches_sympy(self, m):
        assert char_poly(m) == sympy_char_poly(m)

    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(int_matrices(n), invertible(n))))
    @settings(max_examples=40)
    def test_similarity_invariant(self, pair):
        m, p = pair
        assert char_poly(p @ m @ p.inverse()) == char_poly(m)


class TestRationalEigenvalues:
    def test_c2_body(self):
        assert rational_eigenvalues(F2_C2) == [(1, 4)]

    def test_c3(self):
        assert rational_eigenvalues(F2_C3) == [(-1, 4)]

    def test_rotation_not_rational(self):
        with pytest.raises(SpectrumNotRational):
            rational_eigenvalues(Matrix([[0, -1], [1, 0]]))

    def test_diagonal(self):
        assert rational_eigenvalues(Matrix.diag([2, 3])) == [(2, 1), (3, 1)]

    def test_fractional_roots(self):
        m = Matrix.diag([Fraction(1, 2), Fraction(-2, 3), Fraction(1, 2)])
        assert rational_eigenvalues(m) == [(Fraction(-2, 3), 1), (Fraction(1, 2), 2)]


class TestInverse:
    def test_singular(self):
        with pytest.raises(SingularMatrix):
            Matrix([[1, 2], [2, 4]]).inverse()

    @given(st.integers(1, 4).flatmap(invertible))
    @settings(max_examples=40)
    def test_roundtrip(self, p):
        assert p @ p.inverse() == Matrix.identity(p.n)
