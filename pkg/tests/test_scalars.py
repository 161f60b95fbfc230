import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhobstruct.errors import DivisionByZero
from rhobstruct.scalars import (
    MINUS_ONE,
    ONE,
    CyclotomicNumber,
    TwistedScalar,
    UnityRoot,
    cyclo_inverse,
    sign_split,
)

from oracles import cyclo_to_complex

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15])


@st.composite
def cyclo(draw, conductor=None):
    n = draw(conductors) if conductor is None else conductor
    coeffs = draw(st.lists(rationals, min_size=0, max_size=n + 2))
    return CyclotomicNumber(n, coeffs)


@st.composite
def cyclo_triple(draw):
    n = draw(conductors)
    return draw(cyclo(n)), draw(cyclo(n)), draw(cyclo(n))


class TestUnityRoot:
    def test_canonical_form(self):
        assert UnityRoot(3, 6) == UnityRoot(1, 2)
        assert UnityRoot(0, 7) == ONE == UnityRoot(0, 1)
        assert UnityRoot(-1, 4) == UnityRoot(3, 4)
        assert (UnityRoot(5, 4).k, UnityRoot(5, 4).n) == (1, 4)

    def test_square_of_minus_one(self):
        assert MINUS_ONE * MINUS_ONE == ONE

    @pytest.mark.parametrize("n", range(1, 61))
    def test_inverse_pairs_multiply_to_one(self, n):
        for k in range(n):
            assert UnityRoot(k, n) * UnityRoot(n - k, n) == ONE

    @given(st.integers(1, 40), st.integers(-100, 100))
    def test_embedding_has_order_dividing_n(self, n, k):
        z = UnityRoot(k, n).to_cyclotomic()
        assert z ** UnityRoot(k, n).n == 1

    def test_embedding_matches_monomial(self):
        assert UnityRoot(1, 3).to_cyclotomic(6) == CyclotomicNumber.zeta(2, 6)
        assert UnityRoot(1, 2).to_cyclotomic(4) == -1

    def test_sign_split(self):
        t, s = sign_split(UnityRoot(1, 6))
        assert (t, s) == (UnityRoot(2, 3), -1)
        t, s = sign_split(UnityRoot(3, 4))
        assert (t, s) == (UnityRoot(1, 4), -1)
        assert sign_split(UnityRoot(1, 3)) == (UnityRoot(1, 3), 1)
        assert sign_split(MINUS_ONE) == (ONE, -1)


class TestCyclotomic:
    def test_inverse_of_one(self):
        assert cyclo_inverse(CyclotomicNumber.from_rational(1, 4)) == 1

    def test_inverse_of_i(self):
        i = CyclotomicNumber.zeta(1, 4)
        assert cyclo_inverse(i) == -i

    def test_inverse_of_one_plus_zeta3(self):
        z = CyclotomicNumber.zeta(1, 3)
        inv = cyclo_inverse(1 + z)
        assert inv == -z
        assert (1 + z) * inv == 1

    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivisionByZero):
            cyclo_inverse(CyclotomicNumber(5))

    def test_coefficient_length_is_totient(self):
        assert len(CyclotomicNumber(12, [1, 2, 3, 4, 5, 6, 7]).coefficients) == 4
        assert len(CyclotomicNumber(7).coefficients) == 6

    @given(cyclo())
    def test_reduction_idempotent(self, x):
        assert CyclotomicNumber(x.conductor, x.coefficients) == x

    @given(cyclo_triple())
    @settings(max_examples=60)
    def test_field_axioms(self, xyz):
        x, y, z = xyz
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        if not x.is_zero():
            assert x * cyclo_inverse(x) == 1

    @given(cyclo())
    @settings(max_examples=60)
    def test_matches_complex_embedding(self, x):
        if x.is_zero():
            return
        got = cyclo_to_complex(cyclo_inverse(x))
        assert abs(got - 1 / cyclo_to_complex(x)) < 1e-6 * max(1, abs(got))

    def test_lift_preserves_value(self):
        x = CyclotomicNumber(6, [1, Fraction(1, 2)])
        assert abs(cyclo_to_complex(x.lift(12)) - cyclo_to_complex(x)) < 1e-12
        assert x.lift(12) == x

    def test_mixed_conductors(self):
        s = CyclotomicNumber.zeta(1, 3) + CyclotomicNumber.zeta(1, 4)
        assert s.conductor == 12
        expected = cmath.exp(2j * cmath.pi / 3) + 1j
        assert abs(cyclo_to_complex(s) - expected) < 1e-12


class TestTwistedScalar:
    def test_sign_absorbed(self):
        assert TwistedScalar(MINUS_ONE, 1) == TwistedScalar(ONE, -1)
        assert TwistedScalar(UnityRoot(1, 6), 2) == TwistedScalar(UnityRoot(2, 3), -2)

    def test_as_unity_root(self):
        assert TwistedScalar(ONE, -1).as_unity_root() == MINUS_ONE
        assert TwistedScalar(UnityRoot(1, 4), 1).as_unity_root() == UnityRoot(1, 4)
        assert TwistedScalar(ONE, 2).as_unity_root() is None

    def test_over(self):
        ev = TwistedScalar(UnityRoot(1, 6), 1)
        assert ev.over(UnityRoot(2, 3)) == -1
        assert ev.over(UnityRoot(1, 3)) is None
