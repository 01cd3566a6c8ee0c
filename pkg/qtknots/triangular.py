"""
Triangular partitions and their (area, sim) enumerators.

A cell with arm a and leg l has hook slope interval (l/(a+l+1), (l+1)/(a+l+1)).
A partition is triangular when the intersection of these intervals over its
cells is a nonempty open interval. All slope arithmetic is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Dict, Iterator, List, Tuple

from .coeff import A, QT_RING, IntPoly, RatFunc, is_qt_symmetric, q, ratfunc, schur_qt_expand, t
from .errors import ArithmeticInconsistencyError, InvalidInputError
from .knots import SuperPoly, split_by_A
from .partitions import Partition, arm, leg, partitions_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlopeInterval:
    lo: Fraction
    hi: Fraction

    @property
    def is_empty(self) -> bool:
        return self.lo >= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self):
        return f"({self.lo}, {self.hi})"


def cell_slopes(mu: Partition, cell) -> Tuple[Fraction, Fraction]:
    """(t', t'') = (l/(a+l+1), (l+1)/(a+l+1)) for a cell of mu."""
    a, l = arm(mu, cell), leg(mu, cell)
    return Fraction(l, a + l + 1), Fraction(l + 1, a + l + 1)


@lru_cache(maxsize=None)
def slope_interval(mu) -> SlopeInterval:
    """Max of t' and min of t'' over the cells; the empty partition gets (0, 1)."""
    mu = Partition(mu)
    lo, hi = Fraction(0), Fraction(1)
    for cell in mu.cells():
        low, high = cell_slopes(mu, cell)
        lo, hi = max(lo, low), min(hi, high)
    return SlopeInterval(lo, hi)


def is_triangular(mu) -> bool:
    return not slope_interval(mu).is_empty


@dataclass(frozen=True)
class TriangularPartition:
    tau: Partition
    interval: SlopeInterval

    @property
    def tbar(self) -> Fraction:
        return self.interval.midpoint

    @property
    def size(self) -> int:
        return self.tau.size

    def __str__(self):
        return str(self.tau)


def triangular(tau) -> TriangularPartition:
    """Wrap tau, rejecting partitions whose slope interval is empty."""
    tau = Partition(tau)
    interval = slope_interval(tau)
    if interval.is_empty:
        raise InvalidInputError(f"{tau} is not triangular (slope interval {interval} is empty)")
    return TriangularPartition(tau, interval)


def enumerate_triangular(N: int) -> List[List[Partition]]:
    """Triangular partitions of each size 0..N, in decreasing lexicographic order."""
    if N < 0:
        raise InvalidInputError(f"maximum size must be nonnegative, got {N}")
    return [[mu for mu in partitions_of(size) if is_triangular(mu)] for size in range(N + 1)]


def staircase(n: int) -> Partition:
    """(n, n-1, ..., 1)."""
    if n < 0:
        raise InvalidInputError(f"staircase size must be nonnegative, got {n}")
    return Partition(range(n, 0, -1))


def cut_partition(r: Fraction, s: Fraction) -> Partition:
    """Cells lying under the line through (r, 0) and (0, s): row j has ⌊r - (j+1) r/s⌋ cells."""
    r, s = Fraction(r), Fraction(s)
    if r <= 0 or s <= 0:
        raise InvalidInputError("line intercepts must be positive")
    rows = []
    j = 1
    while True:
        row = floor(r - j * r / s)
        if row <= 0:
            break
        rows.append(row)
        j += 1
    return Partition(rows)


def subpartitions(tau) -> Iterator[Partition]:
    """Every mu ⊆ tau, the empty partition included."""
    tau = Partition(tau)

    def walk(j: int, bound: int, rows: List[int]):
        yield Partition(rows)
        if j == len(tau):
            return
        for row in range(1, min(bound, tau[j]) + 1):
            yield from walk(j + 1, row, rows + [row])

    yield from walk(0, tau[0] if tau else 0, [])


def _as_triangular(tau) -> TriangularPartition:
    return tau if isinstance(tau, TriangularPartition) else triangular(tau)


def sim(tau, mu) -> int:
    """
    Number of cells c of mu with t'(c) < t̄ <= t''(c), t̄ the midpoint of tau's slope interval.

    Raises:
        InvalidInputError: when mu is not contained in tau
    """
    tau = _as_triangular(tau)
    mu = Partition(mu)
    if not tau.tau.contains(mu):
        raise InvalidInputError(f"{mu} is not contained in {tau}")
    tbar = tau.tbar
    count = 0
    for cell in mu.cells():
        low, high = cell_slopes(mu, cell)
        if low < tbar <= high:
            count += 1
    return count


def d_tau(tau) -> IntPoly:
    """𝒟_τ(q,t) = Σ_{mu ⊆ τ} q^(|τ|-|mu|) t^sim(τ,mu)."""
    tau = _as_triangular(tau)
    terms: Dict[Tuple[int, ...], int] = {}
    for mu in subpartitions(tau.tau):
        key = (tau.size - mu.size, sim(tau, mu), 0, 0, 0, 0)
        terms[key] = terms.get(key, 0) + 1
    return QT_RING.from_dict(terms)


def d_tau_schur(tau):
    """𝒟_τ in two-variable Schur form."""
    return schur_qt_expand(d_tau(tau))


def descents(mu: Partition, n: int) -> List[int]:
    """1-based i <= n with mu_i > mu_(i+1), mu padded with zeros (the last nonzero row counts)."""
    mu = Partition(mu)
    return [i for i in range(1, n + 1) if mu.part(i - 1) > mu.part(i)]


def delta_comb(tau, schur: bool = True) -> SuperPoly:
    """
    𝔻_τ(q,t;A) = Σ_mu t^sim Σ_{des(mu) ⊆ J ⊆ [n]} q^(Σ_{j∈J} τ_j - mu_j) A^(n-|J|).

    n is the number of nonzero parts of τ. Rows outside des(mu) contribute a
    factor (q^(τ_j - mu_j) + A), rows in des(mu) a factor q^(τ_j - mu_j).
    """
    tau = _as_triangular(tau)
    n = tau.tau.length
    total: RatFunc = ratfunc(0)
    for mu in subpartitions(tau.tau):
        required = set(descents(mu, n))
        term = t ** sim(tau, mu)
        for j in range(1, n + 1):
            gap = q ** (tau.tau.part(j - 1) - mu.part(j - 1))
            term = term * (gap if j in required else gap + A)
        total = total + term

    split = split_by_A(total)
    coeffs = tuple(split.get(i, QT_RING.zero) for i in range(n + 1))
    if coeffs[-1] != QT_RING.one:
        raise ArithmeticInconsistencyError(f"top coefficient of 𝔻_{tau} is not 1")
    schur_form = None
    if schur and all(is_qt_symmetric(ratfunc(c)) for c in coeffs):
        schur_form = tuple(schur_qt_expand(c) for c in coeffs)
    elif schur:
        logger.warning("𝔻_%s has a coefficient that is not symmetric in q, t", tau)
    return SuperPoly(coeffs, schur_form, f"D[{tau}]")


def fully_similar(tau) -> Dict[int, List[Partition]]:
    """For each size k, the mu ⊆ τ of size k with sim(τ, mu) = k."""
    tau = _as_triangular(tau)
    found: Dict[int, List[Partition]] = {k: [] for k in range(tau.size + 1)}
    for mu in subpartitions(tau.tau):
        if sim(tau, mu) == mu.size:
            found[mu.size].append(mu)
    return found


def fully_similar_chain(tau) -> List[Partition]:
    """
    The unique fully similar mu of each size 0..|τ|.

    Raises:
        ArithmeticInconsistencyError: when some size has no or several such mu
    """
    chain = []
    for k, options in fully_similar(tau).items():
        if len(options) != 1:
            raise ArithmeticInconsistencyError(f"size {k} has {len(options)} fully similar sub-partitions of {tau}")
        chain.append(options[0])
    return chain


def subpartition_count(tau) -> int:
    """𝒟_τ(1, 1)."""
    return sum(1 for _ in subpartitions(Partition(tau)))


def top_term_check(tau) -> bool:
    """𝒟_τ = s_N(q,t) + terms of lower degree, N = |τ|."""
    form = d_tau_schur(tau)
    size = Partition(tau.tau if isinstance(tau, TriangularPartition) else tau).size
    pairs = form.signed_pairs()
    top = [pair for pair in pairs if pair[0] + pair[1] == size]
    rest_degrees = [pair[0] + pair[1] for pair in pairs if pair[0] + pair[1] != size]
    return top == [(size, 0, 1)] and all(d < size for d in rest_degrees)
