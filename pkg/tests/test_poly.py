import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassdt.poly import InexactDivisionError, Poly


def Y(i, nvars=3):
    return Poly.variable(nvars, i)


ONE = Poly.one(3)


class TestBasics:
    def test_zero_coefficients_dropped(self):
        p = Poly(2, (((1, 0), 1), ((1, 0), -1)))
        assert p.is_zero()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly(1, (((-1,), 1),))

    def test_canonical_order(self):
        p = ONE + Y(2) * Y(3) + Y(2)
        assert p.monomials() == ((0, 0, 0), (0, 1, 0), (0, 1, 1))

    def test_constant_term(self):
        assert (ONE + Y(1)).constant_term() == 1
        assert Y(1).constant_term() == 0


class TestArithmetic:
    def test_multiply_by_one(self):
        p = ONE + Y(1)
        assert p * ONE == p

    def test_hand_expansion(self):
        got = (ONE + Y(2)) * (ONE + Y(2) * Y(3))
        expected = ONE + Y(2) + Y(2) * Y(3) + Y(2) * Y(2) * Y(3)
        assert got == expected

    def test_square_variable(self):
        assert Y(1) * Y(1) == Poly.monomial(3, (2, 0, 0))

    def test_power(self):
        assert (ONE + Y(1)) ** 2 == ONE + Poly.monomial(3, (1, 0, 0), 2) + Y(1) * Y(1)

    def test_mixed_rings_rejected(self):
        with pytest.raises(ValueError):
            Poly.one(2) + Poly.one(3)


class TestDivExact:
    def test_divide_by_one(self):
        p = ONE + Y(2) + Y(2) * Y(3)
        assert p.div_exact(ONE) == p

    def test_square_over_linear(self):
        p = ONE + Y(1)
        assert (p * p).div_exact(p) == p

    def test_inexact_raises(self):
        with pytest.raises(InexactDivisionError, match="inexact division"):
            (ONE + Y(1)).div_exact(ONE + Y(2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            ONE.div_exact(Poly.zero(3))

    def test_coefficient_divisibility_checked(self):
        with pytest.raises(InexactDivisionError):
            (ONE + Y(1)).div_exact(Poly.constant(3, 2))


class TestText:
    def test_constant_and_powers(self):
        q = Poly.one(8) + Poly.variable(8, 3) * Poly.variable(8, 7) ** 2
        assert q.to_text() == "1 + y3*y7^2"

    def test_zero(self):
        assert Poly.zero(2).to_text() == "0"

    def test_coefficients_and_signs(self):
        p = Poly(2, (((0, 0), 1), ((1, 0), -1), ((1, 1), 3)))
        assert p.to_text() == "1 + -y1 + 3*y1*y2"

    @pytest.mark.parametrize(
        "text", ["1", "0", "1 + y2 + y2*y3", "1 + y3*y7^2", "1 + -y1 + 3*y1*y2"]
    )
    def test_parse_round_trip(self, text):
        assert Poly.parse(text, 8).to_text() == text


@st.composite
def polys(draw):
    terms = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(min_value=0, max_value=3)] * 3),
                st.integers(min_value=-5, max_value=5),
            ),
            max_size=6,
        )
    )
    return Poly(3, tuple(terms))


@settings(max_examples=200, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * s == p * s + q * s
    assert (p * q) * s == p * (q * s)


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_exact_division_round_trip(p, q):
    if q.is_zero():
        return
    assert (p * q).div_exact(q) == p
