from concurrent.futures import ThreadPoolExecutor

import pytest

from qtknots.coeff import M, ONE, power, q, ratfunc, t
from qtknots.errors import InvalidInputError
from qtknots.hall import (
    EVALUATOR, Bracket, D, MulBy, OperatorEvaluator, Perp, apply, axis_ray_expr, compact_xkn_expr, create, d_series, e_kn,
    nabla_by_creation, pi, pi_expand, pi_expand_dual, seed, shat, split, xkn_apply, xkn_expr,
)
from qtknots.macdonald import macH, nabla
from qtknots.partitions import Partition, qt_invariants
from qtknots.symfunc import SymFunc, e, p, s

ONE_SF = SymFunc.constant(1)


class TestSplitting:
    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (3, 2, ((2, 1), (1, 1))),
            (1, 3, ((1, 2), (0, 1))),
            (1, 1, ((1, 0), (0, 1))),
        ],
    )
    def test_split(self, a, b, expected):
        (r, s_), (u, v) = split(a, b)
        assert ((r, s_), (u, v)) == expected
        assert r * v - s_ * u == 1

    @pytest.mark.parametrize("a, b", [(2, 2), (0, 1), (4, 6)])
    def test_split_rejects(self, a, b):
        with pytest.raises(InvalidInputError):
            split(a, b)


class TestOperators:
    def test_d0_on_p1(self):
        assert d_series(0, s(1)) == s(1).scale(1 - M)

    @pytest.mark.parametrize("mu", [(2,), (1, 1), (2, 1)])
    def test_d0_eigenvalue(self, mu):
        B = ratfunc(qt_invariants(Partition(mu)).B)
        assert d_series(0, macH(mu)) == macH(mu).scale(1 - M * B)

    def test_multiplication_and_skewing(self):
        assert apply(MulBy(p(1)), s(1)) == s(2) + s(1, 1)
        assert apply(Perp(p(1)), s(2, 1)) == s(2) + s(1, 1)

    def test_bracket_of_commuting_operators(self):
        assert apply(Bracket(MulBy(p(1)), MulBy(p(2))), s(2)) == SymFunc()

    def test_x01_is_multiplication_by_p1(self):
        assert xkn_apply(0, 1, s(1)) == s(1) * s(1)

    def test_x11_on_one(self):
        assert xkn_apply(1, 1, ONE_SF) == s(1)

    def test_x10_is_d0(self):
        assert xkn_expr(1, 0) == D(0)

    @pytest.mark.parametrize("k, n", [(0, 0), (2, 0), (-1, 1)])
    def test_xkn_rejects(self, k, n):
        with pytest.raises(InvalidInputError):
            xkn_expr(k, n)

    @pytest.mark.parametrize("k", [1, 2])
    def test_axis_forms_agree(self, k):
        f = s(1)
        assert apply(axis_ray_expr(k, "x"), f) == xkn_apply(k, 1, f)
        assert apply(axis_ray_expr(k, "y"), f) == xkn_apply(1, k, f)

    def test_compact_form(self):
        assert apply(compact_xkn_expr(1), s(1)) == xkn_apply(2, 1, s(1))

    def test_evaluator_memoizes(self):
        xkn_apply(1, 1, s(1))
        hits = EVALUATOR.stats["hits"]
        xkn_apply(1, 1, s(1))
        assert EVALUATOR.stats["hits"] > hits

    def test_evaluator_counts_every_lookup_across_threads(self):
        evaluator = OperatorEvaluator()
        node = MulBy(p(1))

        def work(_):
            for _ in range(25):
                evaluator.apply(node, p(2))

        with ThreadPoolExecutor(max_workers=4) as pool:
            list(pool.map(work, range(8)))
        assert evaluator.stats["hits"] + evaluator.stats["misses"] == 200
        assert evaluator.stats["misses"] >= 1
        evaluator.clear()
        assert evaluator.stats == {"hits": 0, "misses": 0}


class TestSeeds:
    def test_pi(self):
        assert pi(1) == s(1)
        assert pi(2) == s(1, 1) + s(2).scale(power(-q * t, -1))

    def test_shat(self):
        assert shat((2, 1)) == s(2, 1).scale(-power(q * t, -1))
        assert shat((1, 1)) == s(1, 1)

    def test_seed_values(self):
        assert seed("e", 3).value() == e(3)
        assert seed("shat", (2, 1)).degree == 3
        assert seed("pi", 2).value() == pi(2)

    @pytest.mark.parametrize("kind, arg", [("x", 2), ("e", (2, 1))])
    def test_seed_rejects(self, kind, arg):
        with pytest.raises(InvalidInputError):
            seed(kind, arg)


class TestPiBasis:
    def test_pi_expand_of_pi(self):
        assert pi_expand(pi(2)) == {Partition((2,)): ONE}

    @pytest.mark.parametrize("f", [s(2, 1), e(3), s(2) + s(1, 1).scale(q)])
    def test_dual_route_agrees(self, f):
        assert pi_expand(f) == pi_expand_dual(f)

    def test_needs_homogeneous_input(self):
        with pytest.raises(InvalidInputError):
            pi_expand(s(2) + s(1))


class TestCreation:
    def test_vertical_ray_reconstructs(self):
        assert create(s(2, 1), 0, 1) == s(2, 1)

    @pytest.mark.parametrize("n", [1, 2])
    def test_diagonal_ray_is_nabla(self, n):
        assert create(e(n), 1, 1) == nabla(e(n))

    def test_commutation_check(self):
        assert create(e(3), 1, 1, check_commutation=True) == nabla(e(3))

    def test_seed_objects(self):
        assert create(seed("e", 2), 1, 1) == create(e(2), 1, 1)

    @pytest.mark.parametrize("a, b", [(2, 2), (1, 0), (-1, 1)])
    def test_rejects_bad_rays(self, a, b):
        with pytest.raises(InvalidInputError):
            create(e(2), a, b)

    def test_nabla_by_creation(self):
        f = s(2) + ONE_SF
        assert nabla_by_creation(f) == nabla(s(2)) + ONE_SF

    def test_family_memo(self):
        assert e_kn(2, 2) is e_kn(2, 2)
        assert e_kn(2, 2) == nabla(e(2))

    def test_family_rejects(self):
        with pytest.raises(InvalidInputError):
            e_kn(0, 2)
