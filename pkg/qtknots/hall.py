"""
Operators of the positive elliptic Hall algebra acting on symmetric functions.

X^(1,0) is D_0 and X^(0,1) is multiplication by p_1; every other X^(k,n) is
the bracket (1/M)[X^(k-r,n-s), X^(r,s)] along the lattice splitting of its
ray. Operator expressions are trees evaluated lazily on the power-sum basis,
memoized per (node, basis element).
"""

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Dict, Tuple, Union

from .coeff import M, ONE, ZERO, RatFunc, adams, divide, power, q, ratfunc, t
from .errors import ArithmeticInconsistencyError, InvalidInputError
from .partitions import Partition, hook, iota, partitions_of
from .plethysm import Alphabet, X, plethysm, plethysm_scalar
from .symfunc import (
    PowerSumDict, SymFunc, convert, e, from_powersum, h, hall_inner, m, p, ps_add, ps_mul, ps_perp, ps_scale,
)

logger = logging.getLogger(__name__)


# --- operator expressions ---

class OperatorExpr:
    """Base class of operator expression nodes; nodes are immutable and hashable."""

    def __call__(self, f: SymFunc) -> SymFunc:
        return apply(self, f)


@dataclass(frozen=True)
class MulBy(OperatorExpr):
    f: SymFunc


@dataclass(frozen=True)
class Perp(OperatorExpr):
    f: SymFunc


@dataclass(frozen=True)
class D(OperatorExpr):
    k: int


@dataclass(frozen=True)
class Scalar(OperatorExpr):
    c: RatFunc


@dataclass(frozen=True)
class Bracket(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr


@dataclass(frozen=True)
class Compose(OperatorExpr):
    """left ∘ right: right is applied first."""

    left: OperatorExpr
    right: OperatorExpr


def scaled(c: RatFunc, node: OperatorExpr) -> OperatorExpr:
    return Compose(Scalar(ratfunc(c)), node)


# --- the D_k series ---

@lru_cache(maxsize=None)
def _e_powersum(i: int) -> Tuple[Tuple[Partition, RatFunc], ...]:
    return tuple(e(i).powersum().items())


def _shift_by_M(rho: Partition) -> Dict[int, PowerSumDict]:
    """p_rho[X + M/z] = Σ_j z^-j g_j, returned as {j: g_j} in power sums."""
    pieces: Dict[int, PowerSumDict] = {}
    for mask in product((False, True), repeat=len(rho)):
        moved = [part for part, bit in zip(rho, mask) if bit]
        kept = Partition(part for part, bit in zip(rho, mask) if not bit)
        coefficient = ONE
        for part in moved:
            coefficient = coefficient * adams(M, part)
        g = pieces.setdefault(sum(moved), {})
        g[kept] = g.get(kept, ZERO) + coefficient
    return pieces


def _d_series_basis(k: int, rho: Partition) -> PowerSumDict:
    result: PowerSumDict = {}
    for j, g in _shift_by_M(rho).items():
        i = k + j
        if i < 0:
            continue
        sign = ratfunc((-1) ** i)
        result = ps_add(result, ps_mul(dict(_e_powersum(i)), g), sign)
    return result


def d_series(k: int, f: SymFunc) -> SymFunc:
    """
    D_k f: the z^k coefficient of H[-zX] f[X + M/z].

    With f[X + M/z] = Σ_j z^-j g_j this is Σ_j (-1)^(k+j) e_(k+j) g_j.
    """
    return apply(D(k), f)


# --- evaluation ---

class OperatorEvaluator:
    """
    Evaluates operator trees on symmetric functions.

    Results on single power sums are memoized per (node, rho). Entries are
    published once and never mutated, so concurrent evaluations may race to
    compute the same entry but never observe a partial one.
    """

    def __init__(self):
        self._memo: Dict[Tuple[OperatorExpr, Partition], PowerSumDict] = {}
        self._lock = threading.Lock()
        self.stats = {"hits": 0, "misses": 0}

    def clear(self):
        with self._lock:
            self._memo.clear()
            self.stats = {"hits": 0, "misses": 0}

    def apply(self, node: OperatorExpr, f: SymFunc) -> SymFunc:
        return from_powersum(self.apply_powersum(node, f.powersum()))

    def apply_powersum(self, node: OperatorExpr, ps: PowerSumDict) -> PowerSumDict:
        result: PowerSumDict = {}
        for rho, c in ps.items():
            result = ps_add(result, self._apply_basis(node, rho), c)
        return result

    def _apply_basis(self, node: OperatorExpr, rho: Partition) -> PowerSumDict:
        key = (node, rho)
        with self._lock:
            cached = self._memo.get(key)
            self.stats["hits" if cached is not None else "misses"] += 1
        if cached is not None:
            return cached
        value = self._evaluate(node, rho)
        with self._lock:
            return self._memo.setdefault(key, value)

    def _evaluate(self, node: OperatorExpr, rho: Partition) -> PowerSumDict:
        basis = {rho: ONE}
        if isinstance(node, MulBy):
            return ps_mul(node.f.powersum(), basis)
        if isinstance(node, Perp):
            return ps_perp(node.f.powersum(), basis)
        if isinstance(node, D):
            return _d_series_basis(node.k, rho)
        if isinstance(node, Scalar):
            return ps_scale(basis, node.c)
        if isinstance(node, Compose):
            return self.apply_powersum(node.left, self._apply_basis(node.right, rho))
        if isinstance(node, Bracket):
            left_right = self.apply_powersum(node.left, self._apply_basis(node.right, rho))
            right_left = self.apply_powersum(node.right, self._apply_basis(node.left, rho))
            return ps_add(left_right, right_left, -ONE)
        raise InvalidInputError(f"unknown operator node {node!r}")


EVALUATOR = OperatorEvaluator()


def apply(node: OperatorExpr, f: SymFunc) -> SymFunc:
    """Evaluate an operator expression on f (linear in f)."""
    return EVALUATOR.apply(node, f)


# --- lattice splitting and the X^(k,n) ---

def split(a: int, b: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    The splitting (a,b) = (r,s) + (u,v) with r*v - s*u = 1.

    Raises:
        InvalidInputError: unless a, b >= 1 and gcd(a, b) = 1
    """
    if a < 1 or b < 1:
        raise InvalidInputError(f"split needs a, b >= 1, got ({a},{b})")
    if gcd(a, b) != 1:
        raise InvalidInputError(f"split needs a coprime pair, got ({a},{b}) with gcd {gcd(a, b)}")
    if a == 1:
        r, s_ = 1, b - 1
    else:
        r = pow(b, -1, a)
        s_ = (b * r - 1) // a
    return (r, s_), (a - r, b - s_)


@lru_cache(maxsize=None)
def pi(n: int) -> SymFunc:
    """π_n = h_n[(1-qt)X] / e_n[1-qt] = Σ_{a+l=n-1} (-qt)^-a s_(a|l)."""
    if n < 1:
        raise InvalidInputError(f"π_n needs n >= 1, got {n}")
    return SymFunc({hook(a, n - 1 - a): power(-q * t, -a) for a in range(n)})


def pi_mu(mu) -> SymFunc:
    result = SymFunc.constant(1)
    for part in Partition(mu):
        result = result * pi(part)
    return result


@lru_cache(maxsize=None)
def xkn_expr(k: int, n: int) -> OperatorExpr:
    """
    The expression tree of X^(k,n).

    X^(0,d) is multiplication by π_d; X^(k,0) exists only for k = 1.
    """
    if k < 0 or n < 0 or (k, n) == (0, 0):
        raise InvalidInputError(f"X^(k,n) needs k, n >= 0 and not both zero, got ({k},{n})")
    if (k, n) == (1, 0):
        return D(0)
    if n == 0:
        raise InvalidInputError(f"X^({k},0) is only defined for k = 1")
    if k == 0:
        return MulBy(pi(n))
    d = gcd(k, n)
    (r, s_), _ = split(k // d, n // d)
    return scaled(divide(ONE, M), Bracket(xkn_expr(k - r, n - s_), xkn_expr(r, s_)))


def xkn_apply(k: int, n: int, f: SymFunc) -> SymFunc:
    """X^(k,n) f; raises the degree by n."""
    return apply(xkn_expr(k, n), f)


def axis_ray_expr(k: int, axis: str) -> OperatorExpr:
    """
    Bracket forms of X^(k,1) ("x": nested against D_0 on the right) and
    X^(1,k) ("y": nested under p_1 on the left), both scaled by 1/M^(k-1).
    """
    if k < 1:
        raise InvalidInputError(f"axis rays need k >= 1, got {k}")
    if axis not in ("x", "y"):
        raise InvalidInputError(f"unknown axis '{axis}'. Available: x, y")
    node = xkn_expr(1, 1)
    for _ in range(k - 1):
        node = Bracket(node, D(0)) if axis == "x" else Bracket(MulBy(p(1)), node)
    return scaled(power(M, -(k - 1)), node)


def compact_xkn_expr(k: int) -> OperatorExpr:
    """X^(k+1,k) = (1/M^k)[D1, [D1, ... [D1, D0]]] with D1 = X^(1,1)."""
    if k < 1:
        raise InvalidInputError(f"compact form needs k >= 1, got {k}")
    d1 = xkn_expr(1, 1)
    node: OperatorExpr = D(0)
    for _ in range(k):
        node = Bracket(d1, node)
    return scaled(power(M, -k), node)


# --- seeds and the π basis ---

def shat(mu) -> SymFunc:
    """ŝ_mu = (-1)^ι(mu) (qt)^-(|mu|-l(mu)) s_mu."""
    mu = Partition(mu)
    return SymFunc({mu: (-1) ** iota(mu) * power(q * t, -(mu.size - mu.length))})


_SEED_KINDS = ("pi", "phat", "e", "hhat", "shat")


@dataclass(frozen=True)
class Seed:
    """A creation seed: pi_d, phat_d, e_d, hhat_d or shat(mu)."""

    kind: str
    mu: Partition

    def __post_init__(self):
        if self.kind not in _SEED_KINDS:
            raise InvalidInputError(f"unknown seed '{self.kind}'. Available: {', '.join(_SEED_KINDS)}")
        if self.kind != "shat" and len(self.mu) != 1:
            raise InvalidInputError(f"seed '{self.kind}' takes a single degree, got {self.mu}")
        if not self.mu:
            raise InvalidInputError("seeds have positive degree")

    @property
    def degree(self) -> int:
        return self.mu.size

    def value(self) -> SymFunc:
        d = self.degree
        if self.kind == "pi":
            return pi(d)
        if self.kind == "phat":
            return p(d).scale((-1) ** (d - 1))
        if self.kind == "e":
            return e(d)
        if self.kind == "hhat":
            return h(d).scale(power(-q * t, -d + 1))
        return shat(self.mu)


def seed(kind: str, arg) -> Seed:
    """seed("e", 3), seed("shat", (2, 1))."""
    parts = (arg,) if isinstance(arg, int) else tuple(arg)
    return Seed(kind, Partition(parts))


_ONE_MINUS_QT = Alphabet.scalar(1 - q * t)


@lru_cache(maxsize=None)
def e_mu_one_minus_qt(mu: Partition) -> RatFunc:
    return plethysm_scalar(e(Partition(mu)), _ONE_MINUS_QT)


def pi_expand(f: SymFunc) -> Dict[Partition, RatFunc]:
    """
    Coefficients c_mu with f = Σ c_mu π_mu.

    f[X/(1-qt)] = Σ c_mu h_mu / e_mu[1-qt], so the h-coefficients are rescaled.
    """
    if not f.is_homogeneous():
        raise InvalidInputError(f"pi_expand needs a homogeneous input, got degrees {f.degrees()}")
    shifted = plethysm(f, X / _ONE_MINUS_QT)
    return {mu: c * e_mu_one_minus_qt(mu) for mu, c in convert(shifted, "h").coeffs.items() if c}


def rho_basis(mu) -> SymFunc:
    """ρ_mu = e_mu[1-qt] m_mu[X/(1-qt)], the Hall dual of π_mu."""
    mu = Partition(mu)
    return plethysm(m(mu), X / _ONE_MINUS_QT).scale(e_mu_one_minus_qt(mu))


def pi_expand_dual(f: SymFunc) -> Dict[Partition, RatFunc]:
    """pi_expand through the dual basis: c_mu = ⟨f, ρ_mu⟩."""
    if not f:
        return {}
    return {mu: c for mu in partitions_of(f.degree) if (c := hall_inner(f, rho_basis(mu)))}


# --- creation ---

def _as_symfunc(value: Union[Seed, SymFunc]) -> SymFunc:
    return value.value() if isinstance(value, Seed) else value


def ray_product(mu: Partition, a: int, b: int, reverse: bool = False) -> SymFunc:
    """Π_i X^(a mu_i, b mu_i) applied to 1, largest part leftmost."""
    parts = list(Partition(mu))
    order = parts if reverse else list(reversed(parts))
    g = SymFunc.constant(1)
    for part in order:
        g = xkn_apply(a * part, b * part, g)
    return g


def create(seed_value: Union[Seed, SymFunc], a: int, b: int, check_commutation: bool = False) -> SymFunc:
    """
    f_(ad,bd) = Σ c_mu Π_i X^(a mu_i, b mu_i) · 1 with c_mu from pi_expand(seed).

    Raises:
        InvalidInputError: for a non-coprime or degenerate ray
        ArithmeticInconsistencyError: when check_commutation finds two orders that differ
    """
    f = _as_symfunc(seed_value)
    if a < 0 or b < 1 or gcd(a, b) != 1:
        raise InvalidInputError(f"create needs a coprime ray with a >= 0, b >= 1, got ({a},{b})")
    result = SymFunc()
    for mu, c in pi_expand(f).items():
        term = ray_product(mu, a, b)
        if check_commutation and len(set(mu)) > 1 and term != ray_product(mu, a, b, reverse=True):
            raise ArithmeticInconsistencyError(f"operators on the ray ({a},{b}) fail to commute for {mu}")
        result = result + term.scale(c)
    logger.debug("create on ray (%d,%d): evaluator stats %s", a, b, EVALUATOR.stats)
    return result


_FAMILY_MEMO: Dict[Tuple[int, int], SymFunc] = {}
_FAMILY_LOCK = threading.Lock()


def e_kn(k: int, n: int) -> SymFunc:
    """e_(k,n) = create(e_d, k/d, n/d) with d = gcd(k, n); homogeneous of degree n. Memoized."""
    if k < 1 or n < 1:
        raise InvalidInputError(f"e_(k,n) needs k, n >= 1, got ({k},{n})")
    cached = _FAMILY_MEMO.get((k, n))
    if cached is not None:
        return cached
    d = gcd(k, n)
    value = create(e(d), k // d, n // d)
    with _FAMILY_LOCK:
        return _FAMILY_MEMO.setdefault((k, n), value)


def seed_e_kn(k: int, n: int, value: SymFunc) -> None:
    """Install a previously computed e_(k,n) (from the persistent cache)."""
    with _FAMILY_LOCK:
        _FAMILY_MEMO.setdefault((k, n), value)


def e_kn_memo() -> Dict[Tuple[int, int], SymFunc]:
    with _FAMILY_LOCK:
        return dict(_FAMILY_MEMO)


def nabla_by_creation(f: SymFunc) -> SymFunc:
    """∇f computed as create(f, 1, 1) degree by degree."""
    result = SymFunc()
    for degree, part in f.homogeneous_parts().items():
        if degree == 0:
            result = result + part
        else:
            result = result + create(part, 1, 1)
    return result
