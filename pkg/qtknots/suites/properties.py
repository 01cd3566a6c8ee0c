"""
Property suites: algebraic identities checked exactly on small and random inputs.
"""

import random
from itertools import product
from math import comb

from ..coeff import A, M, ONE, RatFunc, power, q, ratfunc, swap_qt, t
from ..errors import InvalidInputError
from ..hall import (
    Bracket, D, MulBy, Perp, apply, axis_ray_expr, compact_xkn_expr, create, e_mu_one_minus_qt, pi, pi_expand,
    pi_expand_dual, pi_mu, shat, xkn_apply, xkn_expr,
)
from ..knots import (
    check_A_candidate, eval_t0_check, hook_poly_check, rho_family_symfunc,
)
from ..macdonald import (
    delta, en_mac_coefficient, macH, macH_hat, nabla, nabla_t_inv_q_check,
)
from ..partitions import Partition, conjugate, eta, hook, partitions_of, qt_invariants
from ..plethysm import EPS, Alphabet, X, Y, hook_eval_1mq, pk_eval, plethysm, plethysm_scalar, plethysm_tensor, \
    series_eval, tensor
from ..symfunc import (
    SymFunc, down, e, e_perp, forgotten, h, hall_inner, jacobi_trudi, m, omega, p, parse_symfunc, s, star_inner,
    straighten_schur,
)
from .base_suite import VerificationSuite, compare
from .oracles import A_CANDIDATE_HOOK_DELTA, A_CANDIDATES, STRAIGHTENING

_COEFFICIENTS = (ONE, ratfunc(-2), q, t, q - t, 1 + q * t)


def random_symfunc(rng: random.Random, max_degree: int, degree: int = None) -> SymFunc:
    """A few Schur terms of one random degree with small (q,t) coefficients."""
    degree = degree if degree is not None else rng.randint(1, max_degree)
    shapes = list(partitions_of(degree))
    picks = rng.sample(shapes, min(len(shapes), rng.randint(1, 3)))
    return SymFunc({mu: rng.choice(_COEFFICIENTS) for mu in picks})


def _hk(k: int) -> SymFunc:
    return h(k) if k else SymFunc.constant(1)


def _all_hold(items, what: str):
    """items: iterable of (label, passed); report the first failing label."""
    count = 0
    for label, passed in items:
        count += 1
        if not passed:
            return False, f"{what} fails for {label}"
    return True, f"{what} holds in {count} cases"


def compositions(n: int):
    """Compositions of n with positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


# --- plethysm ---

_ALPHABETS = (
    X, EPS, Alphabet.scalar(q), Alphabet.scalar(1 - t), X * Alphabet.scalar(q * t), X / Alphabet.scalar(1 - q),
)


class PlethysmRulesSuite(VerificationSuite):
    description = "substitution rules, coproduct, Cauchy and skewing identities"

    def __init__(self, **kwargs):
        super().__init__(name="plethysm-rules", **kwargs)
        self.rng = random.Random(self.config.get("seed", 7))

    def checks(self):
        max_degree = self.config.get("max_degree", 5)
        samples = [random_symfunc(self.rng, max_degree) for _ in range(self.config.get("samples", 12))]
        pairs = [(self.rng.choice(_ALPHABETS), self.rng.choice(_ALPHABETS)) for _ in range(len(samples))]
        yield "identity-substitution", lambda: _all_hold(((f, plethysm(f, X) == f) for f in samples), "f[X] = f")
        yield "pk-additive", lambda: _all_hold(
            ((f"{a}, {b}, k={k}", pk_eval(a + b, k) == pk_eval(a, k) + pk_eval(b, k))
             for a, b in pairs for k in range(1, 4)), "p_k[A+B] = p_k[A] + p_k[B]")
        yield "pk-multiplicative", lambda: _all_hold(
            ((f"{a}, {b}, k={k}", pk_eval(a * b, k) == pk_eval(a, k) * pk_eval(b, k))
             for a, b in pairs for k in range(1, 4)), "p_k[AB] = p_k[A] p_k[B]")
        yield "coproduct", lambda: self._coproduct(self.config.get("coproduct_max_n", 6))
        yield "cauchy", lambda: self._cauchy(max_degree)
        yield "skewing", lambda: _all_hold(((f, self._skewing(f)) for f in samples), "f[X - εA] = Σ A^k e_k^⊥ f")
        yield "worked-examples", self._worked_examples

    def _coproduct(self, max_n):
        def holds(n):
            expected = tensor(_hk(0), h(n))
            for k in range(1, n + 1):
                expected = expected + tensor(h(k), _hk(n - k))
            return series_eval("H", X + Y, n) == expected

        return _all_hold(((f"n={n}", holds(n)) for n in range(1, max_n + 1)), "h_n[X+Y] = Σ h_k(X) h_(n-k)(Y)")

    def _cauchy(self, max_n):
        def holds(n):
            expected = tensor(SymFunc(), SymFunc())
            for lam in partitions_of(n):
                expected = expected + tensor(s(lam), s(lam))
            return plethysm_tensor(h(n), X * Y) == expected

        return _all_hold(((f"n={n}", holds(n)) for n in range(1, max_n + 1)), "h_n[XY] = Σ s_λ(X) s_λ(Y)")

    @staticmethod
    def _skewing(f: SymFunc) -> bool:
        lhs = plethysm(f, X - EPS * Alphabet.scalar(A))
        rhs = f
        for k in range(1, max(f.degrees()) + 1):
            rhs = rhs + e_perp(k, f).scale(A ** k)
        return lhs == rhs

    @staticmethod
    def _worked_examples():
        cases = [
            ("e2[-X] = h2", plethysm(e(2), -X) == h(2)),
            ("s2[XY]", plethysm_tensor(s(2), X * Y) == tensor(s(2), s(2)) + tensor(s(1, 1), s(1, 1))),
            ("s11[1-εq]", plethysm_scalar(s(1, 1), 1 - EPS * Alphabet.scalar(q)) == q * (1 + q)),
            ("e2[X+Y]", series_eval("E", X + Y, 2)
             == tensor(e(2), _hk(0)) + tensor(e(1), e(1)) + tensor(_hk(0), e(2))),
        ]
        return _all_hold(cases, "worked example")


class HookEvaluationSuite(VerificationSuite):
    description = "s_mu[1-q] and s_(a|l)[1-εq]/(1+q)"

    def __init__(self, **kwargs):
        super().__init__(name="hook-evaluation", **kwargs)

    def checks(self):
        max_size = self.config.get("max_size", 6)
        one_minus_q = Alphabet.scalar(1 - q)
        super_alphabet = 1 - EPS * Alphabet.scalar(q)
        for n in range(1, max_size + 1):
            yield f"one-minus-q-{n}", lambda n=n: _all_hold(
                ((mu, hook_eval_1mq(mu) == plethysm_scalar(s(mu), one_minus_q)) for mu in partitions_of(n)),
                f"s_mu[1-q] for |mu| = {n}")
            yield f"one-minus-eps-q-{n}", lambda n=n: _all_hold(
                ((hook(a, n - 1 - a), plethysm_scalar(s(hook(a, n - 1 - a)), super_alphabet) / (1 + q)
                  == q ** (n - 1 - a)) for a in range(n)),
                f"s_(a|l)[1-εq] = (1+q) q^l for a+l = {n - 1}")


# --- Macdonald ---

class MacdonaldSymmetrySuite(VerificationSuite):
    description = "H̃_mu' = H̃_mu(t,q) and q^η(mu') t^η(mu) ↓H̃_mu = H̃_mu"

    def __init__(self, **kwargs):
        super().__init__(name="macdonald-symmetry", **kwargs)

    def checks(self):
        for n in range(1, self.config.get("max_size", 6) + 1):
            yield f"swap-{n}", lambda n=n: _all_hold(
                ((mu, macH(conjugate(mu)) == macH(mu).map_coefficients(swap_qt)) for mu in partitions_of(n)),
                "q,t swap symmetry")
            yield f"down-{n}", lambda n=n: _all_hold(
                ((mu, down(macH(mu)).scale(q ** eta(conjugate(mu)) * t ** eta(mu)) == macH(mu))
                 for mu in partitions_of(n)),
                "down symmetry")


def _scalar_ratio(f: SymFunc, alphabet_scale: RatFunc) -> SymFunc:
    """f[X/(1-q)] / f[1/(1-q)]."""
    shifted = plethysm(f, X / Alphabet.scalar(1 - q))
    return shifted / plethysm_scalar(f, Alphabet.scalar(alphabet_scale))


class MacdonaldSpecializationsSuite(VerificationSuite):
    description = "t = 1 and t = 1/q specializations, ∇ identities"

    def __init__(self, **kwargs):
        super().__init__(name="macdonald-specializations", **kwargs)
        self.rng = random.Random(self.config.get("seed", 5))

    def checks(self):
        max_size = self.config.get("max_size", 5)
        samples = self.config.get("samples", 3)
        geometric = ONE / (1 - q)
        for n in range(1, max_size + 1):
            yield f"t-one-{n}", lambda n=n: _all_hold(
                ((mu, macH(mu).specialize({"t": 1}) == _scalar_ratio(h(mu), geometric)) for mu in partitions_of(n)),
                "H̃_mu(q,1) = h_mu[X/(1-q)]/h_mu[1/(1-q)]")
            yield f"t-inverse-q-{n}", lambda n=n: _all_hold(
                ((mu, macH(mu).specialize({"t": ONE / q}) == _scalar_ratio(s(mu), geometric))
                 for mu in partitions_of(n)),
                "H̃_mu(q,1/q) = s_mu[X/(1-q)]/s_mu[1/(1-q)]")
            yield f"nabla-t-inverse-q-{n}", lambda n=n: _all_hold(
                ((mu, nabla_t_inv_q_check(mu)) for mu in partitions_of(n)), "∇ at t = 1/q on s_mu[X/(1-q)]")
            yield f"nabla-t-one-{n}", lambda n=n: self._nabla_t_one(n)
            yield f"nabla-is-delta-en-{n}", lambda n=n: self._nabla_is_delta(n)
        inputs = [random_symfunc(self.rng, max_size) for _ in range(samples)]
        yield "nabla-inverse", lambda: _all_hold(
            ((f, nabla(f, -1) == down(nabla(down(f)))) for f in inputs), "∇^-1 = ↓∇↓")

    @staticmethod
    def _nabla_t_one(n):
        f = plethysm(h(n), X / Alphabet.scalar(1 - q))
        return compare(nabla(f).specialize({"t": 1}), f.scale(q ** comb(n, 2)), f"∇_(t=1) h_{n}[X/(1-q)]")

    def _nabla_is_delta(self, n):
        f = random_symfunc(self.rng, n, degree=n)
        return compare(nabla(f), delta(e(n), f), f"∇ vs Δ_e{n} on {f}")


class StarOrthogonalitySuite(VerificationSuite):
    description = "⋆-orthogonality, the Cauchy kernel and the e_n expansions"

    def __init__(self, **kwargs):
        super().__init__(name="star-orthogonality", **kwargs)
        self.rng = random.Random(self.config.get("seed", 3))

    def checks(self):
        max_n = self.config.get("max_n", 4)
        for n in range(1, max_n + 1):
            yield f"orthogonality-{n}", lambda n=n: _all_hold(
                ((f"{lam},{mu}", star_inner(macH(lam), macH_hat(mu)) == (ONE if lam == mu else ratfunc(0)))
                 for lam, mu in product(partitions_of(n), repeat=2)),
                "⟨H̃_λ, H̃_mu/w_mu⟩⋆ = δ")
            yield f"cauchy-kernel-{n}", lambda n=n: self._kernel(n)
            yield f"en-expansion-{n}", lambda n=n: self._en_expansion(n)
            yield f"hall-star-{n}", lambda n=n: self._hall_star(n)

    @staticmethod
    def _kernel(n):
        lhs = plethysm_tensor(e(n), X * Y / Alphabet.scalar(M))
        rhs = tensor(SymFunc(), SymFunc())
        for mu in partitions_of(n):
            rhs = rhs + tensor(macH(mu), macH_hat(mu))
        return (lhs == rhs), f"e_{n}[XY/M] = Σ H̃_mu(X) Ĥ_mu(Y)" + ("" if lhs == rhs else " fails")

    @staticmethod
    def _en_expansion(n):
        direct = SymFunc()
        shifted = SymFunc()
        for mu in partitions_of(n):
            direct = direct + macH(mu).scale(en_mac_coefficient(mu))
            shifted = shifted + macH(mu) / ratfunc(qt_invariants(mu).w)
        if direct != e(n):
            return False, f"Σ M B Π/w H̃ gives {direct}, not e_{n}"
        return compare(shifted, plethysm(e(n), X / Alphabet.scalar(M)), f"e_{n}[X/M] = Σ H̃_mu/w_mu")

    def _hall_star(self, n):
        f = random_symfunc(self.rng, n, degree=n)
        g = random_symfunc(self.rng, n, degree=n)
        g_hat = plethysm(g, X / Alphabet.scalar(M))
        return compare(hall_inner(f, g), star_inner(f, omega(g_hat)), "⟨f,g⟩ = ⟨f, ω g[X/M]⟩⋆")


class D0EigenSuite(VerificationSuite):
    description = "D_0 H̃_mu = (1 - M B_mu) H̃_mu"

    def __init__(self, **kwargs):
        super().__init__(name="d0-eigen", **kwargs)

    def checks(self):
        for n in range(1, self.config.get("max_size", 5) + 1):
            yield f"size-{n}", lambda n=n: _all_hold(
                ((mu, apply(D(0), macH(mu)) == macH(mu).scale(1 - M * ratfunc(qt_invariants(mu).B)))
                 for mu in partitions_of(n)),
                "D_0 eigenvalue")


# --- Hall algebra operators ---

def _pj_over_M(j: int) -> SymFunc:
    """p_j[X/M] = p_j / ((1-q^j)(1-t^j))."""
    return p(j) / ((1 - q ** j) * (1 - t ** j))


class CommutatorIdentitiesSuite(VerificationSuite):
    description = "D_k commutator identities and bracket forms of rays"

    def __init__(self, **kwargs):
        super().__init__(name="commutator-identities", **kwargs)
        self.rng = random.Random(self.config.get("seed", 11))

    def checks(self):
        max_degree = self.config.get("max_degree", 4)
        inputs = [random_symfunc(self.rng, max_degree) for _ in range(self.config.get("samples", 3))]
        inputs.append(SymFunc.constant(1))
        for k, j in product((0, 1), (1, 2, 3)):
            yield f"raise-k{k}-j{j}", lambda k=k, j=j: _all_hold(
                ((f, apply(D(k + j), f) == apply(Bracket(D(k), MulBy(_pj_over_M(j))), f)) for f in inputs),
                f"D_{k + j} = [D_{k}, p_{j}[X/M]]")
            yield f"lower-k{k}-j{j}", lambda k=k, j=j: _all_hold(
                ((f, apply(D(k - j), f) == -apply(Bracket(Perp(p(j)), D(k)), f)) for f in inputs),
                f"D_{k - j} = -[p_{j}^⊥, D_{k}]")
        yield "nabla-conjugates-p1", lambda: _all_hold(
            ((f, nabla(p(1) * nabla(f, -1)) == xkn_apply(1, 1, f)) for f in inputs), "∇ p_1 ∇^-1 = X^(1,1)")
        for a, b in self.config.get("commuting_rays", [[1, 1]]):
            yield f"ray-commute-{a}-{b}", lambda a=a, b=b: _all_hold(
                ((f, xkn_apply(a, b, xkn_apply(2 * a, 2 * b, f)) == xkn_apply(2 * a, 2 * b, xkn_apply(a, b, f)))
                 for f in inputs),
                f"X^({a},{b}) and X^({2 * a},{2 * b}) commute")
        for k in range(1, self.config.get("axis_max_k", 3) + 1):
            yield f"axis-x-{k}", lambda k=k: _all_hold(
                ((f, apply(axis_ray_expr(k, "x"), f) == xkn_apply(k, 1, f)) for f in inputs),
                f"bracket form of X^({k},1)")
            yield f"axis-y-{k}", lambda k=k: _all_hold(
                ((f, apply(axis_ray_expr(k, "y"), f) == xkn_apply(1, k, f)) for f in inputs),
                f"bracket form of X^(1,{k})")
        for k in range(1, self.config.get("compact_max_k", 2) + 1):
            yield f"compact-{k}", lambda k=k: _all_hold(
                ((f, apply(compact_xkn_expr(k), f) == apply(xkn_expr(k + 1, k), f)) for f in inputs),
                f"D_1 bracketing of X^({k + 1},{k})")


class NablaConjugationSuite(VerificationSuite):
    description = "∇ create(seed, a, b) = create(seed, a+b, b)"

    def __init__(self, **kwargs):
        super().__init__(name="nabla-conjugation", **kwargs)

    def checks(self):
        max_seed_degree = self.config.get("max_seed_degree", 3)
        max_output_degree = self.config.get("max_output_degree", 6)
        for a, b in self.config.get("rays", [[0, 1], [1, 1], [1, 2], [2, 1]]):
            for d in range(1, max_seed_degree + 1):
                if b * d > max_output_degree:
                    continue
                yield f"e{d}-ray-{a}-{b}", lambda a=a, b=b, d=d: compare(
                    nabla(create(e(d), a, b)), create(e(d), a + b, b), f"∇ f_({a * d},{b * d}) for e_{d}")
        yield "shat-21-ray-0-1", lambda: compare(create(shat((2, 1)), 0, 1), shat((2, 1)), "create on the ray (0,1)")


class PiExpansionSuite(VerificationSuite):
    description = "π-basis expansions of e_d, h_d and the seeds"

    def __init__(self, **kwargs):
        super().__init__(name="pi-expansion", **kwargs)

    def checks(self):
        for d in range(1, self.config.get("max_degree", 5) + 1):
            yield f"e-formula-{d}", lambda d=d: self._formula(e(d), forgotten, d)
            yield f"h-formula-{d}", lambda d=d: self._formula(h(d), m, d)
            yield f"dual-route-{d}", lambda d=d: _all_hold(
                ((name, pi_expand(f) == pi_expand_dual(f)) for name, f in (("e", e(d)), ("h", h(d)), ("p", p(d)))),
                "pi_expand through ρ")
            yield f"reconstruct-{d}", lambda d=d: _all_hold(
                ((mu, self._reconstruct(h(mu))) for mu in partitions_of(d)), "Σ c_mu π_mu = h_mu")
            yield f"hook-seeds-{d}", lambda d=d: self._hook_seeds(d)
            yield f"pi-at-inverse-q-{d}", lambda d=d: compare(
                pi(d).specialize({"t": ONE / q}), p(d).scale((-1) ** (d - 1)), f"π_{d} at t = 1/q")

    @staticmethod
    def _formula(f, dual_basis, d):
        scalar = Alphabet.scalar(ONE / (1 - q * t))
        expected = {}
        for mu in partitions_of(d):
            c = e_mu_one_minus_qt(mu) * plethysm_scalar(dual_basis(mu), scalar)
            if c:
                expected[mu] = c
        return compare(pi_expand(f), expected, f"π expansion of degree {d}")

    @staticmethod
    def _reconstruct(f):
        total = SymFunc()
        for mu, c in pi_expand(f).items():
            total = total + pi_mu(mu).scale(c)
        return total == f

    @staticmethod
    def _hook_seeds(d):
        hooks = [hook(k - 1, d - k) for k in range(1, d + 1)]
        pi_sum = SymFunc()
        phat_sum = SymFunc()
        for mu in hooks:
            pi_sum = pi_sum + shat(mu)
            phat_sum = phat_sum + shat(mu).scale(power(q * t, mu[0] - 1))
        if pi_sum != pi(d):
            return False, f"π_{d} is not the sum of ŝ over hooks"
        return compare(phat_sum, p(d).scale((-1) ** (d - 1)), f"p̂_{d} = Σ (qt)^ι ŝ over hooks")


# --- knots ---

_T0_DELTAS = {(3, 2): 0, (5, 2): 1, (7, 2): 2, (4, 3): 0, (5, 4): 0}


class T0EvaluationSuite(VerificationSuite):
    description = "e_kn(q,0)[1-u] = q^δ Π (1 - q^i u)"

    def __init__(self, **kwargs):
        super().__init__(name="t0-evaluation", **kwargs)

    def checks(self):
        for k, n in self.config.get("rays", [[3, 2], [5, 2], [7, 2], [4, 3], [5, 4]]):
            yield f"e{k}{n}", lambda k=k, n=n: self._check(k, n)

    @staticmethod
    def _check(k, n):
        report = eval_t0_check(k, n)
        if not report.passed:
            return False, f"({k},{n}): lhs and q^{report.delta} Π(1-q^i u) differ"
        expected = _T0_DELTAS.get((k, n))
        if expected is not None and report.delta != expected:
            return False, f"({k},{n}): δ = {report.delta}, expected {expected}"
        return True, f"({k},{n}) holds with δ = {report.delta}"


class StraighteningSuite(VerificationSuite):
    description = "Schur functions of compositions"

    def __init__(self, **kwargs):
        super().__init__(name="straightening", **kwargs)

    def checks(self):
        size = self.config.get("size", 6)
        yield "table", self._table
        yield f"compositions-{size}", lambda: _all_hold(
            ((alpha, self._agrees(alpha)) for alpha in compositions(size)), "straightening vs Jacobi-Trudi")
        for n in range(1, self.config.get("duality_max_size", 7) + 1):
            yield f"h-e-duality-{n}", lambda n=n: _all_hold(
                ((mu, jacobi_trudi(mu, "h") == jacobi_trudi(conjugate(mu), "e")) for mu in partitions_of(n)),
                "Jacobi-Trudi in h and e")

    @staticmethod
    def _table():
        return _all_hold(
            ((alpha, straighten_schur(alpha) == (sign, Partition(lam))) for alpha, (sign, lam) in STRAIGHTENING.items()),
            "reference straightening")

    @staticmethod
    def _agrees(alpha) -> bool:
        reduced = straighten_schur(alpha)
        expected = SymFunc() if reduced is None else s(reduced[1]).scale(reduced[0])
        return jacobi_trudi(alpha) == expected


class ACandidatesSuite(VerificationSuite):
    description = "A-candidates against superpolynomials and the hook formula"

    def __init__(self, **kwargs):
        super().__init__(name="a-candidates", **kwargs)

    def checks(self):
        yield "s1-for-32", lambda: (check_A_candidate(s(1), 3, 2).passed, "s_1 reproduces 𝒫_32")
        yield "s2-rejected-for-32", self._rejected
        for (k, n), text in A_CANDIDATES.items():
            yield f"candidate-{k}{n}", lambda k=k, n=n, text=text: self._published(k, n, text)
        for r in range(1, self.config.get("max_r", 3) + 1):
            yield f"sr-for-{2 * r + 1}2", lambda r=r: (
                check_A_candidate(s(r), 2 * r + 1, 2).passed, f"s_{r} reproduces 𝒫_{2 * r + 1},2")
        yield "rho11-for-43", lambda: (check_A_candidate(rho_family_symfunc(1, 1), 4, 3).passed, "ρ_1^1 reproduces 𝒫_43")
        yield "non-integral-rejected", self._non_integral

    @staticmethod
    def _rejected():
        report = check_A_candidate(s(2), 3, 2)
        return (not report.passed and report.mismatch == 0), f"s_2 rejected at A^{report.mismatch}"

    @staticmethod
    def _published(k, n, text):
        candidate = parse_symfunc(text)
        report = check_A_candidate(candidate, k, n)
        if not report.passed:
            return False, f"𝒜_{k}{n} mismatches at A^{report.mismatch}"
        passed, delta_value = hook_poly_check(candidate, n)
        expected = A_CANDIDATE_HOOK_DELTA[(k, n)]
        if not passed or delta_value != expected:
            return False, f"hook polynomial of 𝒜_{k}{n}: δ = {delta_value}, factorization {'ok' if passed else 'fails'}"
        return True, f"𝒜_{k}{n} passes with hook δ = {delta_value}"

    @staticmethod
    def _non_integral():
        try:
            check_A_candidate(s(1).scale(q), 3, 2)
        except InvalidInputError:
            return True, "non-integer coefficients rejected"
        return False, "candidate with coefficient q was accepted"
