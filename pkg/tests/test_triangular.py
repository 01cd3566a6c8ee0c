from fractions import Fraction

import pytest

from qtknots.coeff import q, t, to_intpoly
from qtknots.errors import InvalidInputError
from qtknots.knots import superpoly
from qtknots.partitions import Partition, conjugate
from qtknots.suites.oracles import TRIANGULAR_COUNTS
from qtknots.triangular import (
    cut_partition, d_tau, d_tau_schur, delta_comb, descents, enumerate_triangular, fully_similar_chain,
    is_triangular, sim, slope_interval, staircase, subpartition_count, subpartitions, top_term_check, triangular,
)


class TestSlopes:
    def test_empty_partition(self):
        assert str(slope_interval(Partition())) == "(0, 1)"

    def test_two_one(self):
        interval = slope_interval(Partition((2, 1)))
        assert (interval.lo, interval.hi) == (Fraction(1, 3), Fraction(2, 3))
        assert str(interval) == "(1/3, 2/3)"

    @pytest.mark.parametrize("mu, expected", [((2, 2), False), ((3, 2, 1), True), ((4, 2), True), ((3, 3), False)])
    def test_is_triangular(self, mu, expected):
        assert is_triangular(Partition(mu)) == expected

    def test_triangular_rejects(self):
        with pytest.raises(InvalidInputError):
            triangular((2, 2))

    def test_counts(self):
        assert tuple(len(row) for row in enumerate_triangular(6)) == TRIANGULAR_COUNTS

    def test_enumerate_rejects_negative(self):
        with pytest.raises(InvalidInputError):
            enumerate_triangular(-1)

    def test_closed_under_conjugation(self):
        for row in enumerate_triangular(7):
            assert {conjugate(mu) for mu in row} == set(row)


class TestShapes:
    def test_staircase(self):
        assert staircase(3) == Partition((3, 2, 1))
        assert staircase(0) == Partition()

    def test_cut_partition(self):
        assert cut_partition(3, 2) == Partition((1,))
        assert cut_partition(Fraction(7, 2), 3) == Partition((2, 1))

    def test_subpartitions(self):
        found = set(subpartitions((2, 1)))
        assert found == {Partition(p) for p in [(), (1,), (2,), (1, 1), (2, 1)]}
        assert subpartition_count((2, 1)) == 5

    def test_descents(self):
        assert descents(Partition((2, 1)), 2) == [1, 2]
        assert descents(Partition((2, 2)), 2) == [2]


class TestEnumerators:
    def test_sim(self):
        assert sim((2, 1), ()) == 0
        assert sim((1,), (1,)) == 1
        with pytest.raises(InvalidInputError):
            sim((2, 1), (3,))

    def test_d_tau_two_one(self):
        assert d_tau_schur((2, 1)).render() == "s[3] + s[1,1]"
        assert d_tau((2, 1)) == to_intpoly(q ** 3 + q ** 2 * t + q * t ** 2 + t ** 3 + q * t)

    @pytest.mark.parametrize("tau", [(3, 1), (4, 2), (3, 2, 1)])
    def test_conjugation_invariance(self, tau):
        assert d_tau(tau) == d_tau(conjugate(Partition(tau)))

    @pytest.mark.parametrize("tau", [(2, 1), (3, 1), (4, 2, 1)])
    def test_structure(self, tau):
        assert top_term_check(tau)
        assert len(fully_similar_chain(tau)) == Partition(tau).size + 1

    def test_d_tau_rejects_non_triangular(self):
        with pytest.raises(InvalidInputError):
            d_tau((2, 2))


class TestDeltaComb:
    def test_single_cell(self):
        sp = delta_comb((1,))
        assert sp.render() == "A^0: q + t ; A^1: 1"
        assert sp.label == "D[1]"

    def test_a0_is_d_tau(self):
        assert delta_comb((3, 1), schur=False).coeffs[0] == d_tau((3, 1))

    @pytest.mark.parametrize("n", [2, 3])
    def test_staircase_matches_torus_knot(self, n):
        assert delta_comb(staircase(n - 1), schur=False).coeffs == superpoly(n + 1, n, schur=False).coeffs
