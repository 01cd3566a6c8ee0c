"""
Acceptance suites: published values reproduced exactly.
"""

from math import comb, gcd

from ..coeff import ONE, ratfunc, specialize, t, to_intpoly
from ..hall import create, nabla_by_creation, shat
from ..knots import family_three, family_two, rational_catalan, superpoly
from ..macdonald import delta, kostka_matrix, macH, nabla, nabla_en
from ..partitions import Partition, conjugate, eta
from ..symfunc import SymFunc, e, p, parse_symfunc
from ..triangular import (
    d_tau, d_tau_schur, delta_comb, enumerate_triangular, fully_similar_chain, is_triangular, staircase,
    subpartition_count, top_term_check,
)
from .base_suite import VerificationSuite, compare
from .oracles import (
    D_TAU, KOSTKA2_MODIFIED, KOSTKA4_CLASSICAL, NABLA_EN, NABLA_SHAT, SMALL_MACH, SUPERPOLYS, TRIANGULAR_COUNTS,
    TRIANGULAR_SHAPES, qt_value,
)


def expected_symfunc(table) -> SymFunc:
    """{lambda: "s[1] + s[2]"} -> Σ s_(q,t) s_lambda(X)."""
    return SymFunc({Partition(lam): qt_value(text) for lam, text in table.items()})


def _matrix_mismatches(matrix, expected) -> list:
    bad = []
    for i, lam in enumerate(matrix.index):
        for j, mu in enumerate(matrix.index):
            if matrix.rows[i][j] != ratfunc(expected[i][j]):
                bad.append(f"({lam},{mu})")
    return bad


class Kostka4Suite(VerificationSuite):
    description = "(q,t)-Kostka matrices for n = 4 and n = 2"

    def __init__(self, **kwargs):
        super().__init__(name="kostka4", **kwargs)

    def checks(self):
        yield "classical-n4", self._classical
        yield "modified-from-classical-n4", self._modified_relation
        yield "modified-n2", self._modified_n2
        yield "specialization-at-one", self._at_one

    def _classical(self):
        bad = _matrix_mismatches(kostka_matrix(4, "classical"), KOSTKA4_CLASSICAL)
        return not bad, "25 entries match" if not bad else f"mismatched entries {', '.join(bad)}"

    def _modified_relation(self):
        modified = kostka_matrix(4, "modified")
        bad = []
        for i, lam in enumerate(modified.index):
            for j, mu in enumerate(modified.index):
                reference = specialize(ratfunc(KOSTKA4_CLASSICAL[i][j]), {"t": ONE / t}) * t ** eta(lam)
                if modified.rows[i][j] != reference:
                    bad.append(f"({lam},{mu})")
        return not bad, "K̃ = t^η K(q,1/t) on every entry" if not bad else f"mismatched entries {', '.join(bad)}"

    def _modified_n2(self):
        bad = _matrix_mismatches(kostka_matrix(2, "modified"), KOSTKA2_MODIFIED)
        return not bad, "[[1, q], [1, t]]" if not bad else f"mismatched entries {', '.join(bad)}"

    def _at_one(self):
        n = 4
        target = p(1) ** n
        bad = [str(mu) for mu in kostka_matrix(n).index if macH(mu).specialize({"q": 1, "t": 1}) != target]
        return not bad, "H̃_mu(1,1) = h_1^4" if not bad else f"fails for {', '.join(bad)}"


class SmallMacHSuite(VerificationSuite):
    description = "H̃_mu for every mu of size 2 and 3"

    def __init__(self, **kwargs):
        super().__init__(name="small-macH", **kwargs)

    def checks(self):
        for mu, text in SMALL_MACH.items():
            mu = Partition(mu)
            yield f"macH-{mu}", lambda mu=mu, text=text: compare(macH(mu), parse_symfunc(text), f"H̃_{mu}")


class NablaEnSuite(VerificationSuite):
    description = "∇e_n for n = 1..4, also as e_n[B] and by creation"

    def __init__(self, **kwargs):
        super().__init__(name="nabla-en", **kwargs)

    def checks(self):
        max_n = self.config.get("max_n", 4)
        creation_max_n = self.config.get("creation_max_n", 3)
        for n in range(1, max_n + 1):
            expected = expected_symfunc(NABLA_EN[n])
            yield f"nabla-e{n}", lambda n=n, expected=expected: compare(nabla_en(n), expected, f"∇e_{n}")
            yield f"delta-e{n}", lambda n=n, expected=expected: compare(delta(e(n), e(n)), expected, f"Δ_e{n} e_{n}")
            if n <= creation_max_n:
                yield f"create-e{n}", lambda n=n, expected=expected: compare(create(e(n), 1, 1), expected, f"create(e_{n}, 1, 1)")


class NablaShatSuite(VerificationSuite):
    description = "∇ŝ_mu for |mu| <= 4"

    def __init__(self, **kwargs):
        super().__init__(name="nabla-shat", **kwargs)

    def checks(self):
        max_size = self.config.get("max_size", 4)
        creation_max_size = self.config.get("creation_max_size", 3)
        for mu, table in NABLA_SHAT.items():
            mu = Partition(mu)
            if mu.size > max_size:
                continue
            expected = expected_symfunc(table)
            yield f"nabla-shat{mu}", lambda mu=mu, expected=expected: compare(nabla(shat(mu)), expected, f"∇ŝ_{mu}")
            if mu.size <= creation_max_size:
                yield (f"create-shat{mu}",
                       lambda mu=mu, expected=expected: compare(nabla_by_creation(shat(mu)), expected, f"create(ŝ_{mu}, 1, 1)"))


class SuperpolySuite(VerificationSuite):
    description = "superpolynomials of small torus knots"

    def __init__(self, **kwargs):
        super().__init__(name="superpolys", **kwargs)

    def checks(self):
        for k, n in self.config.get("rays", [[3, 2], [4, 3], [5, 4], [6, 5]]):
            yield f"P{k}{n}", lambda k=k, n=n: self._check(k, n)

    def _check(self, k, n):
        sp = superpoly(k, n)
        expected = [to_intpoly(qt_value(text)) for text in SUPERPOLYS[(k, n)]]
        if list(sp.coeffs) != expected:
            return False, f"𝒫_{k}{n}: got {sp.render('schur')}"
        if gcd(k, n) == 1 and sp.at_one()[0] != rational_catalan(k, n):
            return False, f"A^0 of 𝒫_{k}{n} at q = t = 1 is {sp.at_one()[0]}, not {rational_catalan(k, n)}"
        return True, sp.render("schur")


class FamiliesSuite(VerificationSuite):
    description = "the n = 2 and n = 3 superpolynomial families"

    def __init__(self, **kwargs):
        super().__init__(name="families", **kwargs)

    def checks(self):
        for r in range(1, self.config.get("max_r", 4) + 1):
            yield f"two-r{r}", lambda r=r: compare(superpoly(2 * r + 1, 2).coeffs, family_two(r), f"𝒫_{2 * r + 1},2")
        for r in range(1, self.config.get("three_max_r", 1) + 1):
            yield f"three-r{r}", lambda r=r: compare(superpoly(3 * r + 1, 3).coeffs, family_three(r), f"𝒫_{3 * r + 1},3")


class Table1Suite(VerificationSuite):
    description = "triangular partitions of size <= 6"

    def __init__(self, **kwargs):
        super().__init__(name="table1", **kwargs)

    def checks(self):
        max_size = self.config.get("max_size", 6)
        yield "counts", lambda: compare(
            tuple(len(row) for row in enumerate_triangular(max_size)), TRIANGULAR_COUNTS[:max_size + 1], "counts")
        yield "shapes", lambda: compare(
            tuple(tuple(tuple(mu) for mu in row) for row in enumerate_triangular(max_size)),
            TRIANGULAR_SHAPES[:max_size + 1], "shapes")


class Table5Suite(VerificationSuite):
    description = "𝒟_tau for triangular tau of size <= 8 and its structural properties"

    def __init__(self, **kwargs):
        super().__init__(name="table5", **kwargs)

    def checks(self):
        max_size = self.config.get("max_size", 8)
        for tau, text in D_TAU.items():
            tau = Partition(tau)
            if tau.size > max_size:
                continue
            yield f"D{tau}", lambda tau=tau, text=text: self._value(tau, text)
            yield f"structure{tau}", lambda tau=tau: self._structure(tau)
        for n in range(1, self.config.get("staircase_max_n", 5) + 1):
            yield f"staircase-hooks-{n}", lambda n=n: self._staircase_hooks(n)

    def _value(self, tau, text):
        value = d_tau(tau)
        if value != to_intpoly(qt_value(text)):
            return False, f"𝒟_{tau}: got {d_tau_schur(tau).render()}"
        conj = conjugate(tau)
        if not is_triangular(conj) or d_tau(conj) != value:
            return False, f"𝒟_{tau} differs from 𝒟_{conj}"
        return True, f"{d_tau_schur(tau).render()} (also for {conj})"

    def _structure(self, tau):
        if not top_term_check(tau):
            return False, f"𝒟_{tau} does not start with s_{tau.size}"
        chain = fully_similar_chain(tau)
        value = d_tau(tau)
        total = sum(int(c) for _, c in value.terms())
        if total != subpartition_count(tau):
            return False, f"𝒟_{tau}(1,1) = {total}, expected {subpartition_count(tau)}"
        if delta_comb(tau, schur=False).coeffs[0] != value:
            return False, f"A^0 of 𝔻_{tau} differs from 𝒟_{tau}"
        return True, f"fully similar chain of length {len(chain)}"

    def _staircase_hooks(self, n):
        N = comb(n + 1, 2)
        pairs = {(a, b): mult for a, b, mult in d_tau_schur(staircase(n)).signed_pairs()}
        required = {(k, 1) for k in range(comb(n, 2), N - 1)} | {(N, 0)}
        missing = [pair for pair in required if pairs.get(pair) != 1]
        others = [pair for pair in pairs if pair not in required and pair[1] < 2]
        if missing or others:
            return False, f"staircase {staircase(n)}: missing {sorted(missing)}, unexpected {sorted(others)}"
        return True, f"𝒟_{staircase(n)} has the expected hook and top terms"


class CrossCheckSuite(VerificationSuite):
    description = "𝒫_(n+1,n) = 𝔻 of the staircase of size n(n-1)/2"

    def __init__(self, **kwargs):
        super().__init__(name="crosscheck-n5", **kwargs)

    def checks(self):
        for n in range(2, self.config.get("max_n", 5) + 1):
            yield f"n{n}", lambda n=n: compare(
                superpoly(n + 1, n, schur=False).coeffs, delta_comb(staircase(n - 1), schur=False).coeffs,
                f"𝒫_{n + 1},{n} vs 𝔻_{staircase(n - 1)}")
