"""
Modified Macdonald polynomials, (q,t)-Kostka matrices and Macdonald eigenoperators.

H̃_mu is computed from its characterization: ⟨H̃_mu, s_n⟩ = 1 and the two
triangularity conditions under X -> X(1-q) and X -> X(1-t). The linear
system is solved by fraction-free elimination over Z[q,t].
"""

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from .coeff import M, ONE, QT_RING, ZERO, RatFunc, power, q, ratfunc, render, specialize, t, to_intpoly
from .errors import ArithmeticInconsistencyError, InvalidInputError
from .partitions import EMPTY, Partition, conjugate, dominance_leq, eta, partitions_of, qt_invariants
from .plethysm import Alphabet, X, plethysm, plethysm_scalar
from .symfunc import SymFunc, e

logger = logging.getLogger(__name__)

_POLY_DOMAIN = QT_RING.to_domain()

# Published H̃ values; written once per partition, never mutated afterwards
_MACH_MEMO: Dict[Partition, SymFunc] = {}
_MACH_LOCK = threading.Lock()


@lru_cache(maxsize=None)
def _triangularity_table(n: int, variable: str) -> Dict[Partition, Dict[Partition, RatFunc]]:
    """table[nu][lam] = ⟨s_nu[X(1-v)], s_lam⟩ for v = q or t."""
    scale = 1 - (q if variable == "q" else t)
    alphabet = X * Alphabet.scalar(scale)
    table = {}
    for nu in partitions_of(n):
        image = plethysm(SymFunc({nu: ONE}), alphabet)
        table[nu] = dict(image.items())
    return table


def _solve_macH(mu: Partition) -> SymFunc:
    n = mu.size
    index = list(partitions_of(n))
    top = index[0]
    unknowns = index[1:]
    if not unknowns:
        return SymFunc({top: ONE})

    rows: List[List] = []
    for variable, reference in (("q", mu), ("t", conjugate(mu))):
        table = _triangularity_table(n, variable)
        for lam in index:
            if dominance_leq(reference, lam):
                continue
            row = [to_intpoly(table[nu].get(lam, ZERO)) for nu in unknowns]
            row.append(-to_intpoly(table[top].get(lam, ZERO)))
            rows.append([QT_RING(entry) for entry in row])

    logger.debug("macH(%s): %d conditions in %d unknowns", mu, len(rows), len(unknowns))
    matrix = DomainMatrix(rows, (len(rows), len(unknowns) + 1), _POLY_DOMAIN)
    reduced, den, pivots = matrix.rref_den(method="FF")
    if tuple(pivots) != tuple(range(len(unknowns))):
        raise ArithmeticInconsistencyError(
            f"Macdonald characterization of {mu} does not have a unique solution (pivots {pivots})")

    entries = reduced.to_list()
    denominator = ratfunc(den)
    coeffs = {top: ONE}
    for i, lam in enumerate(unknowns):
        coeffs[lam] = ratfunc(entries[i][-1]) / denominator
    return SymFunc(coeffs)


def satisfies_characterization(mu, value: SymFunc) -> bool:
    """⟨value, s_n⟩ = 1 and value[X(1-q)] has no s_lam component with lam not dominating mu."""
    mu = Partition(mu)
    n = mu.size
    if not value or not value.is_homogeneous() or value.degree != n:
        return False
    index = partitions_of(n)
    if value.coefficient(index[0]) != ONE:
        return False
    table = _triangularity_table(n, "q")
    for lam in index:
        if dominance_leq(mu, lam):
            continue
        total = ZERO
        for nu, c in value.items():
            total = total + c * table[nu].get(lam, ZERO)
        if total:
            return False
    return True


def macH(mu) -> SymFunc:
    """The modified Macdonald polynomial H̃_mu, Schur-expanded and memoized."""
    mu = Partition(mu)
    cached = _MACH_MEMO.get(mu)
    if cached is not None:
        return cached
    if not mu:
        value = SymFunc.constant(1)
    else:
        value = _solve_macH(mu)
    with _MACH_LOCK:
        return _MACH_MEMO.setdefault(mu, value)


def seed_macH(mu, value: SymFunc) -> None:
    """Install a previously computed H̃_mu (from the persistent cache)."""
    mu = Partition(mu)
    with _MACH_LOCK:
        _MACH_MEMO.setdefault(mu, value)


def macH_memo() -> Dict[Partition, SymFunc]:
    """A snapshot of every H̃ computed or seeded so far."""
    with _MACH_LOCK:
        return dict(_MACH_MEMO)


def clear_macH_memo() -> None:
    with _MACH_LOCK:
        _MACH_MEMO.clear()
    _mac_inverse.cache_clear()


def macH_hat(mu) -> SymFunc:
    """Ĥ_mu = H̃_mu / w_mu, the ⋆-dual of H̃_mu."""
    return macH(mu) / ratfunc(qt_invariants(Partition(mu)).w)


# --- Kostka matrices ---

@dataclass(frozen=True)
class KostkaMatrix:
    """Rows and columns indexed by partitions of n in decreasing lexicographic order."""

    n: int
    kind: str
    index: Tuple[Partition, ...]
    rows: Tuple[Tuple[RatFunc, ...], ...]

    def entry(self, lam, mu) -> RatFunc:
        return self.rows[self.index.index(Partition(lam))][self.index.index(Partition(mu))]

    def render(self) -> str:
        lines = []
        for lam, row in zip(self.index, self.rows):
            lines.append(f"{lam}: " + " | ".join(render(c) for c in row))
        return "\n".join(lines)


def kostka_matrix(n: int, kind: str = "modified") -> KostkaMatrix:
    """
    (q,t)-Kostka matrix of degree n.

    "modified" has entries K̃_{lam,mu} with H̃_lam = Σ K̃_{lam,mu} s_mu;
    "classical" has K_{lam,mu}(q,t) = t^η(lam) K̃_{lam,mu}(q, 1/t).
    """
    if n < 1:
        raise InvalidInputError(f"Kostka matrices need n >= 1, got {n}")
    if kind not in ("modified", "classical"):
        raise InvalidInputError(f"unknown Kostka convention '{kind}'. Available: modified, classical")
    index = tuple(partitions_of(n))
    rows = []
    for lam in index:
        H = macH(lam)
        row = []
        for mu in index:
            value = H.coefficient(mu)
            if kind == "classical":
                value = specialize(value, {"t": ONE / t}) * t ** eta(lam)
            row.append(value)
        rows.append(tuple(row))
    return KostkaMatrix(n, kind, index, tuple(rows))


# --- change of basis ---

@dataclass(frozen=True)
class MacExpansion:
    """A homogeneous symmetric function written in the H̃ basis."""

    n: int
    coeffs: Mapping[Partition, RatFunc]

    def coefficient(self, mu) -> RatFunc:
        return self.coeffs.get(Partition(mu), ZERO)

    def to_symfunc(self) -> SymFunc:
        result = SymFunc()
        for mu, c in self.coeffs.items():
            result = result + macH(mu).scale(c)
        return result


@lru_cache(maxsize=None)
def _mac_inverse(n: int) -> Dict[Partition, Dict[Partition, RatFunc]]:
    """inverse[lam][mu]: s_lam = Σ_mu inverse[lam][mu] H̃_mu."""
    index = list(partitions_of(n))
    # K̃ has polynomial entries; rows mu, columns lam
    rows = [[to_intpoly(macH(mu).coefficient(lam)) for lam in index] for mu in index]
    matrix = DomainMatrix([[QT_RING(x) for x in row] for row in rows], (len(index), len(index)), _POLY_DOMAIN)
    inverse, den = matrix.inv_den()
    if not den:
        raise ArithmeticInconsistencyError(f"the H̃ basis of degree {n} is singular")
    entries = inverse.to_list()
    denominator = ratfunc(den)
    result: Dict[Partition, Dict[Partition, RatFunc]] = {}
    # f = c K, so c_mu = Σ_lam f_lam (K^-1)[lam][mu]
    for j, lam in enumerate(index):
        result[lam] = {}
        for i, mu in enumerate(index):
            value = ratfunc(entries[j][i]) / denominator
            if value:
                result[lam][mu] = value
    return result


def to_mac_basis(f: SymFunc, n: Optional[int] = None) -> MacExpansion:
    """Coefficients c_mu with f = Σ c_mu H̃_mu; f must be homogeneous."""
    if not f.is_homogeneous():
        raise InvalidInputError(f"to_mac_basis needs a homogeneous input, got degrees {f.degrees()}")
    degree = f.degree if f else (n or 0)
    if n is not None and f and n != degree:
        raise InvalidInputError(f"input has degree {degree}, not {n}")
    if degree == 0:
        return MacExpansion(0, {EMPTY: f.coefficient(EMPTY)} if f else {})
    inverse = _mac_inverse(degree)
    coeffs: Dict[Partition, RatFunc] = {}
    for lam, c in f.items():
        for mu, entry in inverse[lam].items():
            coeffs[mu] = coeffs.get(mu, ZERO) + c * entry
    return MacExpansion(degree, {mu: c for mu, c in coeffs.items() if c})


def en_mac_coefficient(mu) -> RatFunc:
    """(1-t)(1-q) B_mu Π_mu / w_mu, the H̃_mu coefficient of e_n."""
    inv = qt_invariants(Partition(mu))
    return M * ratfunc(inv.B) * ratfunc(inv.Pi) / ratfunc(inv.w)


# --- eigenoperators ---

_EIGEN_KINDS = ("delta", "delta_bar", "delta_prime", "M", "M_bar", "nabla")
_INVERTED = {"q": ONE / q, "t": ONE / t}


@dataclass(frozen=True)
class EigenSpec:
    """
    A Macdonald eigenoperator.

    delta(f) acts on H̃_mu by f[B_mu], delta_bar(f) by f[B_mu(1/q, 1/t)],
    delta_prime(f) by f[B_mu - 1], M and M_bar by the scalars M and M(1/q, 1/t),
    nabla by T_mu ** power.
    """

    kind: str
    f: Optional[SymFunc] = None
    power: int = 1

    def __post_init__(self):
        if self.kind not in _EIGEN_KINDS:
            raise InvalidInputError(f"unknown eigenoperator '{self.kind}'. Available: {', '.join(_EIGEN_KINDS)}")
        if self.kind.startswith("delta") and self.f is None:
            raise InvalidInputError(f"eigenoperator '{self.kind}' needs a symmetric function")

    def eigenvalue(self, mu) -> RatFunc:
        inv = qt_invariants(Partition(mu))
        if self.kind == "nabla":
            return power(ratfunc(inv.T), self.power)
        if self.kind == "M":
            return M
        if self.kind == "M_bar":
            return specialize(M, _INVERTED)
        B = ratfunc(inv.B)
        if self.kind == "delta_bar":
            B = specialize(B, _INVERTED)
        elif self.kind == "delta_prime":
            B = B - 1
        return plethysm_scalar(self.f, Alphabet.scalar(B))


def eigen_apply(spec: EigenSpec, f: SymFunc) -> SymFunc:
    """Apply an eigenoperator degree by degree through the H̃ basis."""
    result = SymFunc()
    for n, part in f.homogeneous_parts().items():
        expansion = to_mac_basis(part, n)
        for mu, c in expansion.coeffs.items():
            eigen = spec.eigenvalue(mu)
            if eigen:
                result = result + macH(mu).scale(c * eigen)
    return result


def nabla(f: SymFunc, power: int = 1) -> SymFunc:
    return eigen_apply(EigenSpec("nabla", power=power), f)


def delta(g: SymFunc, f: SymFunc) -> SymFunc:
    """Δ_g f: H̃_mu -> g[B_mu] H̃_mu."""
    return eigen_apply(EigenSpec("delta", f=g), f)


def delta_prime(g: SymFunc, f: SymFunc) -> SymFunc:
    """Δ'_g f: H̃_mu -> g[B_mu - 1] H̃_mu."""
    return eigen_apply(EigenSpec("delta_prime", f=g), f)


def nabla_en(n: int) -> SymFunc:
    return nabla(e(n))


def nabla_t_inv_q_check(mu) -> bool:
    """At t = 1/q, ∇ s_mu[X/(1-q)] = q^(η(mu') - η(mu)) s_mu[X/(1-q)]."""
    mu = Partition(mu)
    f = plethysm(SymFunc({mu: ONE}), X / Alphabet.scalar(1 - q))
    lhs = nabla(f).specialize({"t": ONE / q})
    return lhs == f.scale(power(q, eta(conjugate(mu)) - eta(mu)))
