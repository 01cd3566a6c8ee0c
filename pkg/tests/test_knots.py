import pytest

from qtknots.coeff import ONE, q, t, to_intpoly
from qtknots.errors import InvalidInputError
from qtknots.knots import (
    check_A_candidate, eval_t0_check, family_three, family_two, hook_agreement, hook_poly_check,
    rational_catalan, rho_family_symfunc, skew_positivity_scan, superpoly, t0_delta, unit_top_coefficient,
)
from qtknots.suites.oracles import A_CANDIDATE_HOOK_DELTA, A_CANDIDATES
from qtknots.symfunc import parse_symfunc, s


class TestSuperpoly:
    @pytest.mark.parametrize("k, n, forced", [(3, 2, True), (2, 3, True), (2, 2, True), (5, 2, False), (7, 3, False)])
    def test_unit_top_coefficient_rays(self, k, n, forced):
        assert unit_top_coefficient(k, n) is forced

    def test_top_coefficient_off_the_unit_rays(self):
        sp = superpoly(5, 2)
        assert sp.coeffs[-1] == to_intpoly(q + t)
        assert sp.render("schur") == "A^0: s[2] ; A^1: s[1]"

    def test_trefoil_monomial(self):
        assert superpoly(3, 2).render("monomial") == "A^0: q + t ; A^1: 1"

    def test_trefoil_schur(self):
        assert superpoly(3, 2).render("schur") == "A^0: s[1] ; A^1: 1"

    def test_symmetric_in_k_and_n(self):
        assert superpoly(2, 3).coeffs == superpoly(3, 2).coeffs

    def test_unknot(self):
        assert superpoly(1, 1).render() == "A^0: 1"

    def test_four_three(self):
        sp = superpoly(4, 3)
        assert sp.render("schur") == "A^0: s[3] + s[1,1] ; A^1: s[2] + s[1] ; A^2: 1"
        assert sp.at_one() == [5, 5, 1]

    def test_monomial_only(self):
        sp = superpoly(3, 2, schur=False)
        assert sp.schur_form is None
        with pytest.raises(InvalidInputError):
            sp.render("schur")

    def test_unknown_format(self):
        with pytest.raises(InvalidInputError):
            superpoly(3, 2).render("latex")

    def test_rejects_zero(self):
        with pytest.raises(InvalidInputError):
            superpoly(0, 2)

    @pytest.mark.parametrize("k, n, value", [(3, 2, 2), (5, 2, 3), (4, 3, 5), (5, 4, 14)])
    def test_rational_catalan(self, k, n, value):
        assert rational_catalan(k, n) == value

    def test_rational_catalan_needs_coprime(self):
        with pytest.raises(InvalidInputError):
            rational_catalan(4, 2)


class TestFamilies:
    @pytest.mark.parametrize("r", [1, 2, pytest.param(3, marks=pytest.mark.slow), pytest.param(4, marks=pytest.mark.slow)])
    def test_two_strand(self, r):
        assert superpoly(2 * r + 1, 2).coeffs == family_two(r)

    @pytest.mark.slow
    def test_three_strand_r2(self):
        assert superpoly(7, 3).coeffs == family_three(2)

    def test_three_strand(self):
        assert superpoly(4, 3).coeffs == family_three(1)

    def test_rho_symfunc(self):
        assert rho_family_symfunc(1, 1) == s(1, 1) + s(3)


class TestEvalT0:
    @pytest.mark.parametrize("k, n, delta", [(3, 2, 0), (5, 2, 1), (7, 2, 2), (4, 3, 0), (5, 4, 0)])
    def test_delta(self, k, n, delta):
        assert t0_delta(k, n) == delta

    @pytest.mark.parametrize("k, n", [(3, 2), (5, 2), (4, 3)])
    def test_check_passes(self, k, n):
        report = eval_t0_check(k, n)
        assert report.passed
        assert report.delta == t0_delta(k, n)

    def test_needs_k_at_least_n(self):
        with pytest.raises(InvalidInputError):
            eval_t0_check(2, 3)


class TestACandidates:
    def test_s1_for_trefoil(self):
        assert check_A_candidate(s(1), 3, 2).passed

    def test_s2_rejected(self):
        report = check_A_candidate(s(2), 3, 2)
        assert not report.passed
        assert report.mismatch == 0
        assert report.expected == to_intpoly(q + t)
        assert report.got == q ** 2 + q * t + t ** 2

    @pytest.mark.parametrize("r", [1, 2, pytest.param(3, marks=pytest.mark.slow)])
    def test_sr_for_two_strand(self, r):
        assert check_A_candidate(s(r), 2 * r + 1, 2).passed

    def test_s1_rejected_for_five_two(self):
        report = check_A_candidate(s(1), 5, 2)
        assert not report.passed
        assert report.mismatch == 0

    def test_rho_for_four_three(self):
        assert check_A_candidate(rho_family_symfunc(1, 1), 4, 3).passed

    @pytest.mark.slow
    def test_rho_for_seven_three(self):
        assert check_A_candidate(rho_family_symfunc(2, 2), 7, 3).passed

    def test_non_integral(self):
        with pytest.raises(InvalidInputError):
            check_A_candidate(s(1).scale(q), 3, 2)

    def test_hook_polynomial_of_s1(self):
        assert hook_poly_check(s(1), 2) == (True, 0)

    @pytest.mark.slow
    def test_published_candidate_five_four(self):
        candidate = parse_symfunc(A_CANDIDATES[(5, 4)])
        assert check_A_candidate(candidate, 5, 4).passed
        assert hook_poly_check(candidate, 4) == (True, A_CANDIDATE_HOOK_DELTA[(5, 4)])


class TestScans:
    def test_skew_positivity_for_trefoil(self):
        rows = skew_positivity_scan(superpoly(3, 2))
        assert [row.i for row in rows] == [0, 1]
        assert all(row.positive for row in rows)

    def test_hook_agreement_components(self):
        report = hook_agreement(3, 2)
        assert report.left == [q + t, ONE]
        assert report.k == 3 and report.n == 2
