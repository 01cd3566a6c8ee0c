"""
Superpolynomials of torus knots and links from the hook components of e_(k,n).
"""

import logging
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Dict, List, Optional, Tuple

from .coeff import (
    A, ONE, QT_RING, ZERO, IntPoly, RatFunc, SchurQT, divide, is_polynomial, is_qt_symmetric, q,
    ratfunc, render_poly, schur_qt, schur_qt_expand, specialize, t, to_intpoly, u, y, z,
)
from .errors import ArithmeticInconsistencyError, InvalidInputError
from .hall import e_kn
from .partitions import Partition, hook, hook_arm_leg
from .plethysm import EPS, Alphabet, plethysm_scalar
from .symfunc import SymFunc, e_perp, omega

logger = logging.getLogger(__name__)

_QT_ALPHABET = Alphabet.scalar(q + t)
_A_INDEX = 2


@dataclass(frozen=True)
class SuperPoly:
    """
    𝒫_kn(q,t;A) = Σ_i coeffs[i] A^i with coeffs[i] an IntPoly in q, t.

    schur_form holds the two-variable Schur expansion of each coefficient.
    """

    coeffs: Tuple[IntPoly, ...]
    schur_form: Optional[Tuple[SchurQT, ...]] = None
    label: str = ""

    def coefficient(self, i: int) -> IntPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else QT_RING.zero

    def as_ratfunc(self) -> RatFunc:
        total = ZERO
        for i, c in enumerate(self.coeffs):
            total = total + ratfunc(c) * A ** i
        return total

    def at_one(self) -> List[int]:
        """Coefficients at q = t = 1."""
        return [int(specialize(ratfunc(c), {"q": 1, "t": 1}).numer.LC) for c in self.coeffs]

    def render(self, fmt: str = "monomial") -> str:
        """"A^0: q + t ; A^1: 1" (monomial) or the same with Schur-(q,t) coefficients."""
        if fmt == "schur":
            if self.schur_form is None:
                raise InvalidInputError("no Schur-(q,t) form was computed for this superpolynomial")
            pieces = [form.render() for form in self.schur_form]
        elif fmt == "monomial":
            pieces = [render_poly(c) for c in self.coeffs]
        else:
            raise InvalidInputError(f"unknown superpolynomial format '{fmt}'. Available: monomial, schur")
        return " ; ".join(f"A^{i}: {text}" for i, text in enumerate(pieces))

    def __str__(self):
        return self.render("monomial")


def _hook_coefficients(f: SymFunc, n: int) -> List[RatFunc]:
    return [f.coefficient(hook(i, n - 1 - i)) for i in range(n)]


def split_by_A(value: RatFunc) -> Dict[int, IntPoly]:
    """Split a polynomial in q, t, A by powers of A."""
    poly = to_intpoly(value)
    grouped: Dict[int, Dict] = {}
    for monom, c in poly.iterterms():
        stripped = monom[:_A_INDEX] + (0,) + monom[_A_INDEX + 1:]
        grouped.setdefault(monom[_A_INDEX], {})[stripped] = c
    return {i: QT_RING.from_dict(terms) for i, terms in grouped.items()}


def plethystic_superpoly(f: SymFunc, n: int) -> List[RatFunc]:
    """(ω f)[1 - εA]/(1 + A), split by powers of A."""
    value = divide(plethysm_scalar(omega(f), 1 - EPS * Alphabet.scalar(A)), 1 + A)
    if not is_polynomial(value):
        raise ArithmeticInconsistencyError(f"plethystic superpolynomial is not a polynomial: {value}")
    split = split_by_A(value)
    if any(i >= n for i in split):
        raise ArithmeticInconsistencyError(f"plethystic superpolynomial has A-degree {max(split)} >= {n}")
    return [ratfunc(split[i]) if i in split else ZERO for i in range(n)]


def unit_top_coefficient(k: int, n: int) -> bool:
    """Whether the A^(n-1) coefficient of 𝒫_kn is forced to be 1: the rays |k - n| <= 1."""
    return abs(k - n) <= 1


def superpoly(k: int, n: int, schur: bool = True) -> SuperPoly:
    """
    𝒫_kn from the hook components ⟨e_kn, s_(i|n-1-i)⟩, computed with k >= n.

    The plethystic form (ω e_kn)[1-εA]/(1+A) is computed alongside and must agree.

    Raises:
        InvalidInputError: for k or n below 1
        ArithmeticInconsistencyError: when the two routes disagree, a coefficient is not a
            q,t-symmetric polynomial, or the top coefficient is not 1 on a ray where it must be
    """
    if k < 1 or n < 1:
        raise InvalidInputError(f"superpoly needs k, n >= 1, got ({k},{n})")
    big, small = max(k, n), min(k, n)
    f = e_kn(big, small)
    hooks = _hook_coefficients(f, small)
    plethystic = plethystic_superpoly(f, small)
    if hooks != plethystic:
        raise ArithmeticInconsistencyError(f"hook and plethystic superpolynomials of ({k},{n}) disagree")

    coeffs = []
    for i, c in enumerate(hooks):
        if not is_polynomial(c):
            raise ArithmeticInconsistencyError(f"A^{i} coefficient of 𝒫_{k},{n} is not a polynomial")
        if not is_qt_symmetric(c):
            raise ArithmeticInconsistencyError(f"A^{i} coefficient of 𝒫_{k},{n} is not symmetric in q, t")
        coeffs.append(to_intpoly(c))
    if unit_top_coefficient(k, n) and coeffs[-1] != QT_RING.one:
        raise ArithmeticInconsistencyError(f"top coefficient of 𝒫_{k},{n} is {render_poly(coeffs[-1])}, not 1")

    schur_form = tuple(schur_qt_expand(c) for c in coeffs) if schur else None
    logger.debug("superpoly(%d,%d) computed from e_(%d,%d)", k, n, big, small)
    return SuperPoly(tuple(coeffs), schur_form, f"P[{k},{n}]")


def rational_catalan(k: int, n: int) -> int:
    """(k+n-1)!/(k! n!), the A^0 coefficient of 𝒫_kn at q = t = 1 for coprime k, n."""
    if gcd(k, n) != 1:
        raise InvalidInputError(f"rational Catalan numbers need coprime arguments, got ({k},{n})")
    return factorial(k + n - 1) // (factorial(k) * factorial(n))


# --- the t = 0 evaluation ---

@dataclass(frozen=True)
class EvalT0Report:
    k: int
    n: int
    delta: int
    lhs: RatFunc
    rhs: RatFunc

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def t0_delta(k: int, n: int) -> int:
    """δ = Σ_{j=1}^{n-1} (⌊kj/n⌋ - j)."""
    return sum(k * j // n - j for j in range(1, n))


def eval_t0_check(k: int, n: int) -> EvalT0Report:
    """Compare e_kn(q,0;X)[1-u] with q^δ Π_{i<n} (1 - q^i u)."""
    if k < n:
        raise InvalidInputError(f"the t = 0 evaluation needs k >= n, got ({k},{n})")
    f = e_kn(k, n).specialize({"t": 0})
    lhs = plethysm_scalar(f, Alphabet.scalar(1 - u))
    delta = t0_delta(k, n)
    rhs = q ** delta
    for i in range(n):
        rhs = rhs * (1 - q ** i * u)
    return EvalT0Report(k, n, delta, lhs, rhs)


# --- A-candidates ---

@dataclass(frozen=True)
class CandidateReport:
    passed: bool
    mismatch: Optional[int] = None
    expected: Optional[IntPoly] = None
    got: Optional[RatFunc] = None


def _check_integral(f: SymFunc) -> None:
    for lam, c in f.items():
        if not (is_polynomial(c) and to_intpoly(c).is_ground):
            raise InvalidInputError(f"A-candidates need integer coefficients; s{list(lam)} has {c}")


def skew_evaluations(A_cand: SymFunc, n: int) -> List[RatFunc]:
    """(e_i^⊥ A_cand)(q, t) for i = 0..n-1."""
    return [plethysm_scalar(e_perp(i, A_cand), _QT_ALPHABET) for i in range(n)]


def check_A_candidate(A_cand: SymFunc, k: int, n: int) -> CandidateReport:
    """Compare e_i^⊥ A_cand at the alphabet q+t with the A^i coefficient of 𝒫_kn; report the first mismatch."""
    _check_integral(A_cand)
    sp = superpoly(k, n, schur=False)
    for i, value in enumerate(skew_evaluations(A_cand, len(sp.coeffs))):
        expected = sp.coeffs[i]
        if value != ratfunc(expected):
            return CandidateReport(False, i, expected, value)
    return CandidateReport(True)


def hook_poly(A_cand: SymFunc) -> IntPoly:
    """Σ over hook terms (a|l) of A_cand of mult · y^(a+l) (-z)^l."""
    total = ZERO
    for lam, c in A_cand.items():
        if not lam or not lam.is_hook():
            continue
        a, l = hook_arm_leg(lam)
        total = total + c * y ** (a + l) * (-z) ** l
    return to_intpoly(total)


def hook_reference(delta: int, n: int) -> IntPoly:
    """y^δ Π_{i=1}^{n-2} (y^i - z)."""
    value = y ** delta
    for i in range(1, n - 1):
        value = value * (y ** i - z)
    return to_intpoly(value)


def hook_poly_check(A_cand: SymFunc, n: int) -> Tuple[bool, int]:
    """(passed, δ) with δ the smallest power of y in hook_poly(A_cand)."""
    poly = hook_poly(A_cand)
    if not poly:
        return False, 0
    y_index = 4
    delta = min(monom[y_index] for monom in poly.itermonoms())
    return poly == hook_reference(delta, n), delta


# --- families ---

def rho_family(r: int, k: int) -> IntPoly:
    """ρ_r^k = Σ_{j=0}^{k} s_(r+2j, k-j)(q,t)."""
    total = QT_RING.zero
    for j in range(k + 1):
        total = total + schur_qt(r + 2 * j, k - j)
    return total


def rho_family_symfunc(r: int, k: int) -> SymFunc:
    return SymFunc({Partition((r + 2 * j, k - j)): ONE for j in range(k + 1)})


def family_two(r: int) -> Tuple[IntPoly, IntPoly]:
    """Expected 𝒫_(2r+1,2) = s_r + s_(r-1) A."""
    return schur_qt(r, 0), schur_qt(r - 1, 0)


def family_three(r: int) -> Tuple[IntPoly, IntPoly, IntPoly]:
    """Expected 𝒫_(3r+1,3) = ρ_r^r + (ρ_r^(r-1) + ρ_(r+1)^(r-1)) A + ρ_(r-1)^(r-1) A^2."""
    return (rho_family(r, r), rho_family(r, r - 1) + rho_family(r + 1, r - 1), rho_family(r - 1, r - 1))


# --- reported scans ---

@dataclass(frozen=True)
class SkewPositivity:
    i: int
    difference: SchurQT

    @property
    def positive(self) -> bool:
        return self.difference.is_positive


def _lift(form: SchurQT) -> SymFunc:
    """Σ mult s_ab(q,t) -> Σ mult s_(a,b) as a symmetric function."""
    return SymFunc({Partition((a, b)): mult for a, b, mult in form.signed_pairs()})


def skew_positivity_scan(sp: SuperPoly) -> List[SkewPositivity]:
    """(𝒫|A^i) - e_i^⊥(𝒫|A^0) in Schur-(q,t) form for each i."""
    base = _lift(schur_qt_expand(sp.coeffs[0]))
    results = []
    for i, c in enumerate(sp.coeffs):
        skew = plethysm_scalar(e_perp(i, base), _QT_ALPHABET)
        results.append(SkewPositivity(i, schur_qt_expand(ratfunc(c) - skew)))
    return results


def hook_polynomial(f: SymFunc) -> List[RatFunc]:
    """Σ_i ⟨f, s_(i|d-1-i)⟩ A^i for f of degree d, trailing zeros dropped."""
    if not f:
        return []
    coeffs = [f.coefficient(hook(i, f.degree - 1 - i)) for i in range(f.degree)]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


@dataclass
class HookAgreement:
    k: int
    n: int
    left: List[RatFunc] = field(default_factory=list)
    right: List[RatFunc] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.left == self.right


def hook_agreement(k: int, n: int) -> HookAgreement:
    """Compare the A-graded hook components of e_(k,n) and e_(n,k)."""
    return HookAgreement(k, n, hook_polynomial(e_kn(k, n)), hook_polynomial(e_kn(n, k)))
