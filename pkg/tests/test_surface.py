from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhobstruct.errors import ShapeMismatch, SingularConjugator
from rhobstruct.families import family1, family2, family4, family5
from rhobstruct.matrix import Matrix
from rhobstruct.surface import (
    SurfaceRepresentation,
    conjugate,
    direct_sum,
    is_valid,
    matrix_relation_defect,
    relation_defect,
)
from rhobstruct.twisted import TwistedMatrix


def identity_rep(g, m, n):
    i = TwistedMatrix.identity(n)
    return SurfaceRepresentation(g, m, n, (i,) * g, (i,) * g, (i,) * m)


@st.composite
def conjugators(draw, n):
    p = Matrix([[draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(n)])
    return p if p.det() != 0 else p + Matrix.identity(n).scale(5)


class TestRelationDefect:
    @pytest.mark.parametrize("g,m", [(0, 1), (1, 2), (3, 4)])
    def test_identity_rep(self, g, m):
        assert relation_defect(identity_rep(g, m, 3)).is_identity()

    def test_family4_single_puncture(self):
        rep = SurfaceRepresentation.from_generators(
            [Matrix([[1, 2], [0, 1]])], [Matrix([[1, 0], [0, 2]])], [Matrix([[1, -1], [0, 1]])]
        )
        a, b = rep.A[0], rep.B[0]
        assert (a * b * a.inverse() * b.inverse()).body == Matrix([[1, 1], [0, 1]])
        assert relation_defect(rep).is_identity()

    def test_family2(self):
        assert relation_defect(family2()).is_identity()


class TestIsValid:
    def test_family4_three_punctures(self):
        rep = family4(3, 1)
        assert is_valid(rep)
        prod = rep.C[0] * rep.C[1] * rep.C[2]
        assert prod.body == Matrix([[1, -1], [0, 1]])

    def test_identity(self):
        assert is_valid(identity_rep(2, 2, 2))

    def test_corrupted_family4(self):
        rep = family4(3, 1)
        bad = SurfaceRepresentation(1, 3, 2, rep.A, rep.B, (TwistedMatrix.identity(2),) + rep.C[1:])
        assert not is_valid(bad)
        assert relation_defect(bad).body == Matrix([[1, 1 - Fraction(2, 3)], [0, 1]])

    @given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2), st.data())
    @settings(max_examples=40)
    def test_family1_valid_for_any_zero_sum_nu(self, n, m, g, data):
        if m == 1:
            nu = [0]
        else:
            head = data.draw(
                st.lists(st.fractions(-5, 5, max_denominator=4).filter(bool), min_size=m - 1, max_size=m - 1)
            )
            if sum(head) == 0:
                head[0] += 1
            nu = head + [-sum(head)]
        assert is_valid(family1(n, m, nu, g))


class TestConjugate:
    def test_identity_conjugator(self):
        rep = family2()
        assert conjugate(rep, Matrix.identity(4)) == rep

    def test_singular(self):
        with pytest.raises(SingularConjugator):
            conjugate(family2(), Matrix.zeros(4))

    def test_family2_diag(self):
        assert is_valid(conjugate(family2(), Matrix.diag([1, 1, 1, 2])))

    @given(conjugators(2))
    @settings(max_examples=30)
    def test_defect_transforms_by_conjugation(self, p):
        rep = SurfaceRepresentation(1, 1, 2, family4(1).A, family4(1).B, (TwistedMatrix(Matrix([[1, 0], [3, 1]])),))
        d = relation_defect(rep)
        assert relation_defect(conjugate(rep, p)) == d.conjugate_by(p)
        assert is_valid(conjugate(rep, p)) == is_valid(rep)

    @given(conjugators(4))
    @settings(max_examples=20)
    def test_validity_conjugation_invariant(self, p):
        rep = family5(4, 2, 1)
        assert is_valid(conjugate(rep, p))


class TestDirectSum:
    def test_self_sum_of_family4(self):
        s = direct_sum(family4(2), family4(2))
        assert s.rank == 4
        assert s.is_valid()
        assert s.relation_defect().is_identity()

    def test_main_theorem_combination(self):
        s = direct_sum(family1(1, 1, g=1), family5(4, 1, 1))
        assert s.rank == 5 and s.is_valid()
        assert s.relation_defect().is_identity()

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            direct_sum(family2(), family4(3, 1))

    def test_flattened_defect_is_block_diagonal(self):
        r1 = family5(4, 3, 1)
        corrupted = SurfaceRepresentation(1, 3, 2, family4(3).A, family4(3).B, (TwistedMatrix.identity(2),) * 3)
        s = direct_sum(corrupted, r1)
        A, B, C = s.flatten()
        L = s.conductor()
        expected = Matrix.block_diag(
            [relation_defect(corrupted).to_matrix(L), relation_defect(r1).to_matrix(L)]
        )
        assert matrix_relation_defect(A, B, C) == expected
        assert not s.is_valid()

    def test_flatten_twist_conductor(self):
        s = direct_sum(family4(3), family5(4, 3, 1))
        assert s.conductor() == 3  # zeta_6 is canonicalised to -zeta_3
        A, B, C = s.flatten()
        assert all(c.shape == (6, 6) for c in C)
