import pytest
from hypothesis import given, settings, strategies as st

from qtknots.coeff import M, ONE, q, t
from qtknots.errors import InvalidInputError
from qtknots.partitions import Partition, partitions_of
from qtknots.symfunc import (
    SymFunc, down, e, e_perp, h, h_perp, hall_inner, jacobi_trudi, m, omega, p, parse_symfunc, principal_spec,
    render_symfunc, s, star_inner, straighten_schur,
)


@st.composite
def symfuncs(draw, max_degree=4):
    coeffs = {}
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        lam = draw(st.sampled_from(partitions_of(draw(st.integers(0, max_degree)))))
        coeffs[lam] = draw(st.integers(-2, 2)) + draw(st.integers(0, 1)) * q
    return SymFunc(coeffs)


class TestBases:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (h(2), s(2)),
            (e(2), s(1, 1)),
            (p(2), s(2) - s(1, 1)),
            (h(1, 1), s(2) + s(1, 1)),
            (m(2), s(2) - s(1, 1)),
            (e(3), s(1, 1, 1)),
            (p(1) ** 2, s(2) + s(1, 1)),
        ],
    )
    def test_schur_expansions(self, value, expected):
        assert value == expected

    def test_tuple_and_varargs_agree(self):
        assert s((2, 1)) == s(2, 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_h_and_m_are_dual(self, n):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert hall_inner(h(lam), m(mu)) == (ONE if lam == mu else 0)

    def test_power_sum_norm(self):
        assert hall_inner(p(2, 1), p(2, 1)) == 2
        assert star_inner(p(1), p(1)) == M


class TestArithmetic:
    def test_zero_coefficients_vanish(self):
        assert not (s(2) - s(2))
        assert len(SymFunc({(2,): 1, (1, 1): 0})) == 1

    def test_degree(self):
        assert s(3, 1).degree == 4
        with pytest.raises(InvalidInputError):
            (s(2) + s(1)).degree

    def test_scalar_division(self):
        assert (s(2).scale(q) / q) == s(2)

    def test_negative_power(self):
        with pytest.raises(InvalidInputError):
            s(1) ** -1

    @given(symfuncs(max_degree=3), symfuncs(max_degree=3))
    @settings(max_examples=25, deadline=None)
    def test_product_commutes(self, f, g):
        assert f * g == g * f

    @given(symfuncs())
    @settings(max_examples=25, deadline=None)
    def test_omega_is_an_involution(self, f):
        assert omega(omega(f)) == f

    @given(symfuncs())
    @settings(max_examples=25, deadline=None)
    def test_down_is_an_involution(self, f):
        assert down(down(f)) == f


class TestSkewing:
    def test_e_perp(self):
        assert e_perp(1, s(2, 1)) == s(2) + s(1, 1)
        assert e_perp(2, s(2, 1)) == s(1)

    def test_h_perp(self):
        assert h_perp(2, s(3, 1)) == s(1, 1) + s(2)

    def test_down(self):
        assert down(s(2).scale(q)) == s(1, 1).scale(ONE / q)


class TestStraightening:
    @pytest.mark.parametrize(
        "alpha, expected",
        [
            ((2, 1), (1, Partition((2, 1)))),
            ((1, 2), None),
            ((0, 2), (-1, Partition((1, 1)))),
            ((1, 3), (-1, Partition((2, 2)))),
            ((0, 0, 3), (1, Partition((1, 1, 1)))),
        ],
    )
    def test_straighten(self, alpha, expected):
        assert straighten_schur(alpha) == expected

    def test_jacobi_trudi(self):
        assert jacobi_trudi((2, 1), "h") == s(2, 1)
        assert jacobi_trudi((3, 1), "e") == s(2, 1, 1)

    def test_jacobi_trudi_kind(self):
        with pytest.raises(InvalidInputError):
            jacobi_trudi((2, 1), "p")


class TestPrincipalSpecialization:
    def test_ones(self):
        assert principal_spec(s(2), 2) == 3
        assert principal_spec(s(1, 1, 1), 2) == 0

    def test_qpowers(self):
        assert principal_spec(s(2), 2, "qpowers") == 1 + q + q ** 2


class TestText:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (s(3, 1) + s(2, 2).scale(q + t), "s[3,1] + (q + t)*s[2,2]"),
            (s(2) - s(1, 1), "s[2] - s[1,1]"),
            (s(1).scale(q), "q*s[1]"),
            (SymFunc.constant(2), "2"),
            (SymFunc(), "0"),
        ],
    )
    def test_render(self, value, expected):
        assert render_symfunc(value) == expected

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("e[4]", e(4)),
            ("h[2,2]", h(2, 2)),
            ("p[2]+q*s[1,1]", p(2) + s(1, 1).scale(q)),
            ("e[2]^2", e(2) * e(2)),
            ("3", SymFunc.constant(3)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_symfunc(text) == expected

    @pytest.mark.parametrize("text", ["s[", "x[2]", "s[a]"])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_symfunc(text)

    @given(symfuncs())
    @settings(max_examples=30, deadline=None)
    def test_render_parses_back(self, f):
        assert parse_symfunc(render_symfunc(f)) == f
