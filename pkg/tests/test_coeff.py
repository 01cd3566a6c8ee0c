from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtknots.coeff import (
    ONE, ZERO, A, adams, divide, parse_ratfunc, power, q, ratfunc, render, render_poly, schur_qt,
    schur_qt_expand, schur_qt_quotient, specialize, swap_qt, t, to_intpoly,
)
from qtknots.errors import InvalidInputError, ZeroDenominatorError

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def polys(draw):
    total = ZERO
    for _ in range(draw(st.integers(min_value=0, max_value=3))):
        total = total + draw(small_ints) * q ** draw(st.integers(0, 2)) * t ** draw(st.integers(0, 2))
    return total


@st.composite
def ratfuncs(draw):
    num, den = draw(polys()), draw(polys())
    if not den:
        den = ONE + q
    return divide(num, den)


class TestCoercion:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (3, 3 * ONE),
            (Fraction(1, 2), divide(1, 2)),
            ("q + t", q + t),
            ("(1 - q*t)/(1 - q)", divide(1 - q * t, 1 - q)),
            ("q^2", q * q),
        ],
    )
    def test_ratfunc(self, value, expected):
        assert ratfunc(value) == expected

    def test_booleans_are_rejected(self):
        with pytest.raises(InvalidInputError):
            ratfunc(True)

    def test_unknown_indeterminate(self):
        with pytest.raises(InvalidInputError):
            parse_ratfunc("x + 1")

    def test_to_intpoly_needs_a_polynomial(self):
        assert render_poly(to_intpoly(q + t)) == "q + t"
        with pytest.raises(InvalidInputError):
            to_intpoly(divide(1, 1 - q))


class TestArithmetic:
    def test_division_by_zero(self):
        with pytest.raises(ZeroDenominatorError):
            divide(q, ZERO)

    def test_negative_power(self):
        assert power(q, -2) * q ** 2 == ONE

    def test_canonical_form_cancels(self):
        assert divide(1 - q ** 2, 1 - q) == 1 + q

    @given(ratfuncs(), ratfuncs())
    @settings(max_examples=40, deadline=None)
    def test_field_axioms(self, x, y):
        assert x + y == y + x
        assert x * y == y * x
        assert (x - y) + y == x

    @given(ratfuncs())
    @settings(max_examples=40, deadline=None)
    def test_render_parses_back(self, x):
        assert parse_ratfunc(render(x)) == x

    @given(ratfuncs())
    @settings(max_examples=30, deadline=None)
    def test_swap_is_an_involution(self, x):
        assert swap_qt(swap_qt(x)) == x


class TestSpecialize:
    def test_binds_by_name(self):
        assert specialize(q + t, {"t": 1}) == q + 1

    def test_binds_by_generator(self):
        assert specialize(q * A, {A: 0}) == ZERO

    def test_vanishing_denominator(self):
        with pytest.raises(ZeroDenominatorError):
            specialize(divide(1, 1 - q), {"q": 1})

    def test_unknown_name(self):
        with pytest.raises(InvalidInputError):
            specialize(q, {"w": 1})

    def test_adams(self):
        assert adams(divide(q, 1 - t), 2) == divide(q ** 2, 1 - t ** 2)


class TestRendering:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (q + t, "q + t"),
            (q ** 3 + q ** 2 * t + q * t ** 2 + t ** 3, "q^3 + q^2*t + q*t^2 + t^3"),
            (2 * q - 1, "2*q - 1"),
            (ZERO, "0"),
            (-ONE, "-1"),
        ],
    )
    def test_render(self, value, expected):
        assert render(value) == expected

    def test_rational_render_has_both_parts(self):
        text = render(divide(q, 1 - t))
        assert text.startswith("(") and ")/(" in text


class TestSchurQT:
    @pytest.mark.parametrize("a, b", [(0, 0), (1, 0), (2, 1), (3, 0), (4, 2)])
    def test_quotient_form(self, a, b):
        assert ratfunc(schur_qt(a, b)) == schur_qt_quotient(a, b)

    def test_bad_indices(self):
        with pytest.raises(InvalidInputError):
            schur_qt(1, 2)

    def test_expand(self):
        form = schur_qt_expand(q ** 2 + 2 * q * t + t ** 2)
        assert form.signed_pairs() == ((2, 0, 1), (1, 1, 1))
        assert form.render() == "s[2] + s[1,1]"
        assert form.is_positive

    def test_constant_renders_as_one(self):
        assert schur_qt_expand(ONE + q + t).render() == "s[1] + 1"

    def test_expand_reconstructs(self):
        value = to_intpoly(q ** 3 + q ** 2 * t + q * t ** 2 + t ** 3 - q * t)
        form = schur_qt_expand(value)
        assert form.reconstruct() == value
        assert not form.is_positive
        assert form.render() == "s[3] - s[1,1]"

    def test_expand_needs_symmetry(self):
        with pytest.raises(InvalidInputError):
            schur_qt_expand(q)
