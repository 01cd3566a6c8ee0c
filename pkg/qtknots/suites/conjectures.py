"""
Reported scans. They record whether a conjectured statement holds on the
cases tried and never affect the exit status of a verification run.
"""

from ..coeff import A, QT_RING, divide, render, render_poly
from ..hall import d_series, shat, xkn_apply
from ..knots import hook_agreement, skew_positivity_scan, superpoly
from ..macdonald import nabla
from ..partitions import Partition, hook
from ..plethysm import EPS, Alphabet, plethysm_scalar
from ..symfunc import SymFunc, omega
from ..triangular import delta_comb, is_triangular, staircase
from .base_suite import VerificationSuite

_SUPER_ALPHABET = 1 - EPS * Alphabet.scalar(A)


class SchurPositivityScan(VerificationSuite):
    gating = False
    description = "every A-coefficient of 𝒫_kn is Schur-(q,t) positive; the top one is 1"

    def __init__(self, **kwargs):
        super().__init__(name="schur-positivity", **kwargs)

    def checks(self):
        for k, n in self.config.get("rays", [[3, 2], [4, 3], [5, 2], [5, 3], [5, 4]]):
            yield f"P{k}{n}", lambda k=k, n=n: self._scan(k, n)
            yield f"top-{k}{n}", lambda k=k, n=n: self._top(k, n)

    @staticmethod
    def _scan(k, n):
        sp = superpoly(k, n)
        negative = [i for i, form in enumerate(sp.schur_form) if not form.is_positive]
        if negative:
            return False, f"A-powers {negative} have negative Schur-(q,t) terms"
        return True, sp.render("schur")

    @staticmethod
    def _top(k, n):
        coeffs = superpoly(k, n, schur=False).coeffs
        return coeffs[-1] == QT_RING.one, f"A^{len(coeffs) - 1} coefficient of 𝒫_{k}{n} is {render_poly(coeffs[-1])}"


class HookAgreementScan(VerificationSuite):
    gating = False
    description = "hook components of e_(k,n) and e_(n,k) agree"

    def __init__(self, **kwargs):
        super().__init__(name="hook-agreement", **kwargs)

    def checks(self):
        for k, n in self.config.get("rays", [[3, 2], [4, 3], [5, 4]]):
            yield f"e{k}{n}-vs-e{n}{k}", lambda k=k, n=n: self._scan(k, n)

    @staticmethod
    def _scan(k, n):
        report = hook_agreement(k, n)
        return report.agree, f"{len(report.left)} vs {len(report.right)} A-powers"


class SkewPositivityScan(VerificationSuite):
    gating = False
    description = "(𝒫|A^i) - e_i^⊥(𝒫|A^0) is Schur-(q,t) positive"

    def __init__(self, **kwargs):
        super().__init__(name="skew-positivity", **kwargs)

    def checks(self):
        for k, n in self.config.get("rays", [[3, 2], [4, 3], [5, 4]]):
            yield f"P{k}{n}", lambda k=k, n=n: self._scan(k, n)

    @staticmethod
    def _scan(k, n):
        rows = skew_positivity_scan(superpoly(k, n))
        failing = [row.i for row in rows if not row.positive]
        detail = "; ".join(f"i={row.i}: {row.difference.render()}" for row in rows)
        return not failing, detail


def _add_column(tau: Partition, length: int) -> Partition:
    """tau + 1^length, adding one cell to each of the first rows."""
    rows = list(tau) + [0] * max(0, length - len(tau))
    for j in range(length):
        rows[j] += 1
    return Partition(rows)


class IdentityDnlScan(VerificationSuite):
    """
    Compares 𝔻 of a staircase plus a column with (1/(1+A)) ∇ŝ_(a|l)[1-εA].

    Both readings of the staircase (n-1, ..., 1) and (n, ..., 1) are tried,
    and the right side is taken with and without ω. The detail lists every
    reading that matches.
    """

    gating = False
    description = "𝔻 of δ_n + 1^l against ∇ŝ_(a|l)[1-εA]/(1+A)"

    def __init__(self, **kwargs):
        super().__init__(name="identity-dnl", **kwargs)

    def checks(self):
        for n in range(2, self.config.get("max_n", 4) + 1):
            for a in range(n):
                yield f"n{n}-a{a}", lambda n=n, a=a: self._scan(n, a, n - 1 - a)

    @staticmethod
    def _scan(n, a, leg):
        image = nabla(shat(hook(a, leg)))
        forms = {
            "raw": divide(plethysm_scalar(image, _SUPER_ALPHABET), 1 + A),
            "omega": divide(plethysm_scalar(omega(image), _SUPER_ALPHABET), 1 + A),
        }
        matches = []
        tried = []
        for label, base in (("δ=(n-1..1)", staircase(n - 1)), ("δ=(n..1)", staircase(n))):
            tau = _add_column(base, leg)
            if not is_triangular(tau):
                tried.append(f"{label}: {tau} not triangular")
                continue
            value = delta_comb(tau, schur=False).as_ratfunc()
            tried.append(f"{label}: {tau}")
            matches.extend(f"{label} {form}" for form, rhs in forms.items() if rhs == value)
        detail = f"({a}|{leg}) tried {', '.join(tried)}; matches: {', '.join(matches) or 'none'}"
        return bool(matches), detail


class DkRelationScan(VerificationSuite):
    gating = False
    description = "X^(1,k)·1 against (-1)^k D_k·1"

    def __init__(self, **kwargs):
        super().__init__(name="dk-relation", **kwargs)

    def checks(self):
        for k in range(1, self.config.get("max_k", 4) + 1):
            yield f"k{k}", lambda k=k: self._scan(k)

    @staticmethod
    def _scan(k):
        unit = SymFunc.constant(1)
        ray = xkn_apply(1, k, unit)
        series = d_series(k, unit).scale((-1) ** k)
        if ray == series:
            return True, f"X^(1,{k})·1 = (-1)^{k} D_{k}·1 = {ray}"
        ratio = None
        if ray and series and ray.support() == series.support():
            lam = ray.support()[0]
            ratio = divide(ray.coefficient(lam), series.coefficient(lam))
        hint = f" (ratio on the leading term {render(ratio)})" if ratio is not None else ""
        return False, f"X^(1,{k})·1 = {ray}, (-1)^{k} D_{k}·1 = {series}{hint}"
