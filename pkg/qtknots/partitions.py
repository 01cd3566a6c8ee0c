"""
Integer partitions, their cell geometry and the (q,t) invariants of Macdonald theory.

Cells are 0-based cartesian pairs (i, j): i is the column, j the row, and
(i, j) belongs to mu iff j < len(mu) and i < mu[j].
"""

import re
from collections import Counter, namedtuple
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from .coeff import QT_RING, q, t
from .errors import ArithmeticInconsistencyError, InvalidInputError

Cell = Tuple[int, int]
CellData = namedtuple("CellData", ["arm", "leg", "hook"])
QtInvariants = namedtuple("QtInvariants", ["B", "T", "Pi", "w"])


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts=()):
        if isinstance(parts, str):
            return parse_partition(parts)
        try:
            parts = tuple(int(p) for p in parts)
        except (TypeError, ValueError) as e:
            raise InvalidInputError(f"partition parts must be integers: {parts!r}") from e
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise InvalidInputError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int) -> int:
        """mu_j in 0-based row numbering, zero past the last row."""
        return self[j] if j < len(self) else 0

    def cells(self) -> Iterator[Cell]:
        for j, row in enumerate(self):
            for i in range(row):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """Cell-wise containment other ⊆ self."""
        return len(other) <= len(self) and all(other[j] <= self[j] for j in range(len(other)))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})" if self else "Partition()"

    def __str__(self):
        return format_partition(self)

    def __getnewargs__(self):
        return (tuple(self),)


EMPTY = Partition()


@lru_cache(maxsize=None)
def conjugate(mu: Partition) -> Partition:
    mu = Partition(mu)
    return Partition(sum(1 for row in mu if row > i) for i in range(mu[0] if mu else 0))


def hook(arm: int, leg: int) -> Partition:
    """The hook (a|l): one row of a+1 cells on top of l rows of length one."""
    if arm < 0 or leg < 0:
        raise InvalidInputError(f"hook arm and leg must be nonnegative, got ({arm}|{leg})")
    return Partition((arm + 1,) + (1,) * leg)


def hook_arm_leg(mu: Partition) -> Tuple[int, int]:
    """(a, l) with mu = (a|l); raises for non-hooks."""
    if not mu or not mu.is_hook():
        raise InvalidInputError(f"{format_partition(mu)} is not a hook")
    return mu[0] - 1, len(mu) - 1


def hooks_of_size(n: int) -> List[Partition]:
    """Hooks (a|n-1-a) for a = 0..n-1."""
    return [hook(a, n - 1 - a) for a in range(n)]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order: 4, 31, 22, 211, 1111."""
    if n < 0:
        raise InvalidInputError(f"cannot partition a negative number: {n}")
    if n == 0:
        return (EMPTY,)
    found = []
    for mult in _sympy_partitions(n):
        parts = []
        for value in sorted(mult, reverse=True):
            parts.extend([value] * mult[value])
        found.append(Partition(parts))
    return tuple(sorted(found, reverse=True))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for size in range(n + 1):
        yield from partitions_of(size)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """lam ⪯ mu in dominance order."""
    if sum(lam) != sum(mu):
        raise InvalidInputError(f"dominance compares partitions of equal size, got {lam} and {mu}")
    lam_sum = mu_sum = 0
    for j in range(max(len(lam), len(mu))):
        lam_sum += lam[j] if j < len(lam) else 0
        mu_sum += mu[j] if j < len(mu) else 0
        if lam_sum > mu_sum:
            return False
    return True


def dominance_covers(n: int) -> List[Tuple[Partition, Partition]]:
    """Cover relations (lam, mu), lam ⋖ mu, of the dominance order on partitions of n."""
    parts = partitions_of(n)
    below = {(a, b) for a in parts for b in parts if a != b and dominance_leq(a, b)}
    return sorted((a, b) for a, b in below
                  if not any((a, c) in below and (c, b) in below for c in parts))


def arm(mu: Partition, cell: Cell) -> int:
    i, j = cell
    return mu[j] - i - 1


def leg(mu: Partition, cell: Cell) -> int:
    i, j = cell
    return conjugate(mu)[i] - j - 1


def eta(mu: Partition) -> int:
    """η(mu) = Σ (j-1) mu_j over 1-based rows."""
    return sum((j - 1) * part for j, part in enumerate(mu, start=1))


def iota(mu: Partition) -> int:
    """Number of cells strictly right of the diagonal (i > j)."""
    return sum(1 for i, j in Partition(mu).cells() if i > j)


def cell_stats(mu: Partition) -> Dict:
    """
    Per-cell arm/leg/hook data plus η(mu'), η(mu) and ι(mu).

    The returned dict has keys "cells" (cell -> CellData), "eta", "eta_conj" and "iota".
    """
    mu = Partition(mu)
    cells = {}
    for cell in mu.cells():
        a, l = arm(mu, cell), leg(mu, cell)
        cells[cell] = CellData(a, l, a + l + 1)
    eta_mu, eta_conj = eta(mu), eta(conjugate(mu))
    if mu and (eta_conj, eta_mu) != tuple(map(sum, zip(*mu.cells()))):
        raise ArithmeticInconsistencyError(f"cell coordinate sum disagrees with η for {mu}")
    return {"cells": cells, "eta": eta_mu, "eta_conj": eta_conj, "iota": iota(mu)}


def hook_lengths(mu: Partition) -> List[int]:
    return [arm(mu, c) + leg(mu, c) + 1 for c in Partition(mu).cells()]


@lru_cache(maxsize=None)
def qt_invariants(mu: Partition) -> QtInvariants:
    """B_mu, T_mu, Pi_mu and w_mu as IntPolys."""
    mu = Partition(mu)
    one = QT_RING.one
    qr, tr = q.numer, t.numer
    B = QT_RING.zero
    Pi = one
    w = one
    for i, j in mu.cells():
        B = B + qr ** i * tr ** j
        if (i, j) != (0, 0):
            Pi = Pi * (one - qr ** i * tr ** j)
        a, l = arm(mu, (i, j)), leg(mu, (i, j))
        w = w * (qr ** a - tr ** (l + 1)) * (tr ** l - qr ** (a + 1))
    T = qr ** eta(conjugate(mu)) * tr ** eta(mu)
    return QtInvariants(B, T, Pi, w)


def z_lambda(mu: Partition) -> int:
    """z_mu = Π k^{m_k} m_k!, the norm of p_mu."""
    result = 1
    for k, m in Counter(mu).items():
        result *= k ** m * factorial(m)
    return result


def vertical_strips(lam: Partition, k: int) -> List[Partition]:
    """All mu ⊆ lam with lam/mu a vertical strip of size k (at most one cell removed per row)."""
    lam = Partition(lam)
    found = []

    def walk(j: int, removed: int, rows: List[int]):
        if removed > k:
            return
        if j == len(lam):
            if removed == k:
                found.append(Partition(rows))
            return
        for drop in (0, 1):
            row = lam[j] - drop
            if j > 0 and row > rows[-1]:
                continue
            walk(j + 1, removed + drop, rows + [row])

    walk(0, 0, [])
    return sorted(set(found), reverse=True)


def horizontal_strips(lam: Partition, k: int) -> List[Partition]:
    """All mu ⊆ lam with lam/mu a horizontal strip of size k (lam_{j+1} <= mu_j <= lam_j)."""
    lam = Partition(lam)
    found = []

    def walk(j: int, removed: int, rows: List[int]):
        if removed > k:
            return
        if j == len(lam):
            if removed == k:
                found.append(Partition(rows))
            return
        low = lam.part(j + 1)
        for row in range(lam[j], low - 1, -1):
            walk(j + 1, removed + lam[j] - row, rows + [row])

    walk(0, 0, [])
    return sorted(found, reverse=True)


def vertical_additions(mu: Partition, k: int) -> List[Partition]:
    """All lam ⊇ mu with lam/mu a vertical strip of size k."""
    mu = Partition(mu)
    return [lam for lam in partitions_of(mu.size + k)
            if lam.contains(mu) and mu in vertical_strips(lam, k)]


def horizontal_additions(mu: Partition, k: int) -> List[Partition]:
    """All lam ⊇ mu with lam/mu a horizontal strip of size k."""
    mu = Partition(mu)
    result = []
    for lam in partitions_of(mu.size + k):
        if lam.contains(mu) and all(mu.part(j) >= lam.part(j + 1) for j in range(len(lam))):
            result.append(lam)
    return result


# --- text forms ---

_MULTIPLICITY_RE = re.compile(r"^\s*(\d+)\^(\d+)\s*$")


def parse_partition(text: str) -> Partition:
    """
    Parse "3,2", "3 2", "[3,2]", "0" (empty) or the multiplicity form "1^2 3^1".
    """
    cleaned = text.strip().strip("[]()").strip()
    if cleaned in ("", "0", "∅"):
        return EMPTY
    tokens = [tok for tok in re.split(r"[,\s]+", cleaned) if tok]
    try:
        if any("^" in tok for tok in tokens):
            parts = []
            for tok in tokens:
                match = _MULTIPLICITY_RE.match(tok)
                if not match:
                    raise InvalidInputError(f"bad multiplicity token {tok!r} in {text!r}")
                parts.extend([int(match.group(1))] * int(match.group(2)))
            return Partition(sorted(parts, reverse=True))
        return Partition([int(tok) for tok in tokens])
    except ValueError as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f"cannot parse partition {text!r}") from e


def format_partition(mu: Partition) -> str:
    return ",".join(map(str, mu)) if mu else "0"
