import pytest

from qtknots.coeff import ONE, q, swap_qt, t
from qtknots.errors import InvalidInputError
from qtknots.macdonald import (
    delta, en_mac_coefficient, kostka_matrix, macH, macH_hat, nabla, nabla_en, nabla_t_inv_q_check,
    satisfies_characterization, to_mac_basis,
)
from qtknots.partitions import Partition, conjugate, partitions_of, qt_invariants
from qtknots.symfunc import SymFunc, e, s, star_inner


class TestMacH:
    @pytest.mark.parametrize(
        "mu, expected",
        [
            ((), SymFunc.constant(1)),
            ((1,), s(1)),
            ((2,), s(2) + s(1, 1).scale(q)),
            ((1, 1), s(2) + s(1, 1).scale(t)),
            ((2, 1), s(3) + s(2, 1).scale(q + t) + s(1, 1, 1).scale(q * t)),
            ((3,), s(3) + s(2, 1).scale(q + q ** 2) + s(1, 1, 1).scale(q ** 3)),
        ],
    )
    def test_small_values(self, mu, expected):
        assert macH(mu) == expected

    def test_memoized(self):
        assert macH((2, 1)) is macH(Partition((2, 1)))

    @pytest.mark.parametrize("mu", partitions_of(4))
    def test_conjugation_swaps_q_and_t(self, mu):
        assert macH(conjugate(mu)) == macH(mu).map_coefficients(swap_qt)

    @pytest.mark.parametrize("mu", partitions_of(4))
    def test_specializes_to_p1_power(self, mu):
        assert macH(mu).specialize({"q": 1, "t": 1}) == s(1) ** 4

    def test_characterization(self):
        assert satisfies_characterization((2, 1), macH((2, 1)))
        assert not satisfies_characterization((2, 1), s(3))
        assert not satisfies_characterization((2, 1), s(2))

    def test_star_duality(self):
        for lam in partitions_of(3):
            for mu in partitions_of(3):
                assert star_inner(macH(lam), macH_hat(mu)) == (ONE if lam == mu else 0)


class TestKostka:
    def test_modified_n2(self):
        matrix = kostka_matrix(2)
        assert matrix.index == (Partition((2,)), Partition((1, 1)))
        assert matrix.rows == ((ONE, q), (ONE, t))
        assert matrix.entry((1, 1), (2,)) == ONE

    def test_classical_n2(self):
        assert kostka_matrix(2, "classical").rows == ((ONE, q), (t, ONE))

    def test_render(self):
        assert kostka_matrix(2).render() == "2: 1 | q\n1,1: 1 | t"

    @pytest.mark.parametrize("n, kind", [(0, "modified"), (2, "integral")])
    def test_rejects(self, n, kind):
        with pytest.raises(InvalidInputError):
            kostka_matrix(n, kind)


class TestMacBasis:
    def test_basis_element(self):
        assert dict(to_mac_basis(macH((2, 1))).coeffs) == {Partition((2, 1)): ONE}

    def test_round_trip(self):
        f = s(2, 1).scale(q) + s(3)
        assert to_mac_basis(f).to_symfunc() == f

    @pytest.mark.parametrize("mu", partitions_of(3))
    def test_en_coefficients(self, mu):
        assert to_mac_basis(e(3)).coefficient(mu) == en_mac_coefficient(mu)

    def test_needs_homogeneous_input(self):
        with pytest.raises(InvalidInputError):
            to_mac_basis(s(2) + s(1))


class TestEigenoperators:
    def test_nabla_e2(self):
        assert nabla_en(2) == s(2) + s(1, 1).scale(q + t)

    def test_nabla_on_basis(self):
        mu = Partition((2, 1))
        T = qt_invariants(mu).T
        assert nabla(macH(mu)) == macH(mu).scale(T)

    def test_nabla_inverse(self):
        f = s(2, 1) + s(1)
        assert nabla(nabla(f), -1) == f

    def test_constants_are_fixed(self):
        assert nabla(SymFunc.constant(3)) == SymFunc.constant(3)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_delta_en_is_nabla(self, n):
        assert delta(e(n), e(n)) == nabla_en(n)

    def test_delta_e1_eigenvalue(self):
        mu = Partition((2,))
        assert delta(e(1), macH(mu)) == macH(mu).scale(1 + q)

    @pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (2, 1)])
    def test_t_inverse_q(self, mu):
        assert nabla_t_inv_q_check(mu)
