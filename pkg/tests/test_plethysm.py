import pytest
from hypothesis import given, settings, strategies as st

from qtknots.coeff import ONE, A, divide, q, t
from qtknots.errors import InvalidInputError
from qtknots.partitions import partitions_of
from qtknots.plethysm import (
    EPS, Alphabet, X, Y, hook_eval_1mq, parse_alphabet, pk_eval, pk_terms, plethysm, plethysm_scalar,
    plethysm_tensor, series_eval, tensor,
)
from qtknots.symfunc import SymFunc, e, h, omega, p, s

small_partitions = st.integers(min_value=0, max_value=4).flatmap(lambda n: st.sampled_from(partitions_of(n)))


class TestPowerSums:
    def test_atoms(self):
        assert pk_eval(X, 3) == p(3)
        assert pk_eval(EPS * X, 3) == p(3).scale(-1)
        assert pk_eval(EPS * X, 2) == p(2)

    def test_scalar_alphabet(self):
        assert pk_eval(Alphabet.scalar(q), 2) == SymFunc.constant(q ** 2)

    def test_index_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            pk_terms(X, 0)

    def test_division_needs_a_scalar(self):
        with pytest.raises(InvalidInputError):
            pk_eval(1 / X, 1)


class TestPlethysm:
    @given(small_partitions)
    @settings(max_examples=20, deadline=None)
    def test_identity_substitution(self, mu):
        assert plethysm(s(mu), X) == s(mu)

    @given(small_partitions)
    @settings(max_examples=20, deadline=None)
    def test_minus_eps_x_is_omega(self, mu):
        assert plethysm(s(mu), -EPS * X) == omega(s(mu))

    def test_one_plus_q(self):
        assert plethysm_scalar(h(2), 1 + Alphabet.scalar(q)) == 1 + q + q ** 2
        assert plethysm_scalar(e(2), 1 + Alphabet.scalar(q)) == q

    def test_geometric_denominator(self):
        assert plethysm(p(1), X / (1 - Alphabet.scalar(q))) == p(1).scale(divide(ONE, 1 - q))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_hook_evaluation(self, n):
        for mu in partitions_of(n):
            assert plethysm_scalar(s(mu), 1 - Alphabet.scalar(q)) == hook_eval_1mq(mu)

    def test_second_alphabet_needs_tensor(self):
        with pytest.raises(InvalidInputError):
            plethysm(h(2), X + Y)

    def test_scalar_plethysm_needs_scalar(self):
        with pytest.raises(InvalidInputError):
            plethysm_scalar(h(2), X)


class TestTensor:
    def test_coproduct_of_h2(self):
        one = SymFunc.constant(1)
        expected = tensor(h(2), one) + tensor(h(1), h(1)) + tensor(one, h(2))
        assert series_eval("H", X + Y, 2) == expected

    def test_cauchy_kernel_degree_two(self):
        expected = tensor(s(2), s(2)) + tensor(s(1, 1), s(1, 1))
        assert plethysm_tensor(h(2), X * Y) == expected

    def test_x_component(self):
        value = plethysm_tensor(h(2), X + Y)
        assert value.x_component((1,)) == h(1)

    def test_unknown_series(self):
        with pytest.raises(InvalidInputError):
            series_eval("P", X, 2)


class TestParsing:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("X", X),
            ("1-eps*A", 1 - EPS * Alphabet.scalar(A)),
            ("X/(1-q)", X / (1 - Alphabet.scalar(q))),
            ("X+Y", X + Y),
        ],
    )
    def test_parse_alphabet(self, text, expected):
        alphabet = parse_alphabet(text)
        for k in (1, 2, 3):
            assert pk_terms(alphabet, k) == pk_terms(expected, k)

    def test_epsilon_spellings(self):
        assert pk_terms(parse_alphabet("ε"), 3) == pk_terms(EPS, 3)

    def test_powers(self):
        assert pk_terms(parse_alphabet("(1-t)^2"), 1) == pk_terms(Alphabet.scalar((1 - t) ** 2), 1)

    def test_bad_syntax(self):
        with pytest.raises(InvalidInputError):
            parse_alphabet("X +")
