"""
Symmetric functions over Q(q, t).

SymFunc stores coefficients in the Schur basis. Every other basis (m, e, h,
p and the forgotten basis f = ω m) is reached through per-degree transition
tables that are computed once and cached. Products, adjoints and the star
scalar product go through the power-sum basis.
"""

import ast
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import sympy
from sympy.utilities.iterables import multiset_permutations

from .coeff import (
    ONE, ZERO, RatFunc, Coercible, divide, eval_coefficient_node, is_atomic,
    power, q, ratfunc, render, specialize, t,
)
from .errors import ArithmeticInconsistencyError, InvalidInputError
from .partitions import (
    EMPTY, Partition, conjugate, eta, horizontal_additions, partitions_of,
    vertical_additions, z_lambda,
)

logger = logging.getLogger(__name__)

BASES = ("s", "m", "e", "h", "p", "f")
BASIS_NAMES = {
    "s": "schur", "m": "monomial", "e": "elementary",
    "h": "complete", "p": "power", "f": "forgotten",
}

PowerSumDict = Dict[Partition, RatFunc]


@lru_cache(maxsize=None)
def _as_ratfunc(value: Fraction) -> RatFunc:
    return ratfunc(value)


def _as_partition(parts) -> Partition:
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        return Partition(parts[0])
    return Partition(parts)


class SymFunc:
    """
    A symmetric function: a finite map Partition -> RatFunc in the Schur basis.

    Values are immutable; arithmetic returns new instances. Inhomogeneous
    values are allowed.
    """

    __slots__ = ("_coeffs", "_hash", "_powersum")

    def __init__(self, coeffs: Optional[Mapping] = None):
        clean: Dict[Partition, RatFunc] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            c = clean.get(lam, ZERO) + ratfunc(c)
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self._coeffs = clean
        self._hash = None
        self._powersum = None

    @classmethod
    def _trusted(cls, coeffs: Dict[Partition, RatFunc]) -> "SymFunc":
        obj = cls.__new__(cls)
        obj._coeffs = {lam: c for lam, c in coeffs.items() if c}
        obj._hash = None
        obj._powersum = None
        return obj

    @classmethod
    def constant(cls, c: Coercible) -> "SymFunc":
        return cls._trusted({EMPTY: ratfunc(c)})

    # --- mapping view ---

    def items(self):
        return self._coeffs.items()

    def support(self) -> List[Partition]:
        return sorted(self._coeffs, key=lambda lam: (sum(lam), lam), reverse=True)

    def coefficient(self, lam) -> RatFunc:
        return self._coeffs.get(Partition(lam), ZERO)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.support())

    def __bool__(self):
        return bool(self._coeffs)

    def degrees(self) -> List[int]:
        return sorted({sum(lam) for lam in self._coeffs})

    @property
    def degree(self) -> int:
        """The degree of a homogeneous value (0 for zero)."""
        degrees = self.degrees()
        if len(degrees) > 1:
            raise InvalidInputError(f"{self} is not homogeneous (degrees {degrees})")
        return degrees[0] if degrees else 0

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, n: int) -> "SymFunc":
        return SymFunc._trusted({lam: c for lam, c in self._coeffs.items() if sum(lam) == n})

    def homogeneous_parts(self) -> Dict[int, "SymFunc"]:
        return {n: self.homogeneous_part(n) for n in self.degrees()}

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc._trusted({lam: ratfunc(fn(c)) for lam, c in self._coeffs.items()})

    def specialize(self, bindings: Mapping) -> "SymFunc":
        return self.map_coefficients(lambda c: specialize(c, bindings))

    def powersum(self) -> PowerSumDict:
        """Power-sum coefficients, computed once per value."""
        if self._powersum is None:
            self._powersum = to_powersum(self)
        return dict(self._powersum)

    # --- arithmetic ---

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == SymFunc.constant(other)._coeffs
        except InvalidInputError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other)
        result = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            result[lam] = result.get(lam, ZERO) + c
        return SymFunc._trusted(result)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._trusted({lam: -c for lam, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, SymFunc) else SymFunc.constant(other)))

    def __rsub__(self, other):
        return SymFunc.constant(other) - self

    def scale(self, c: Coercible) -> "SymFunc":
        c = ratfunc(c)
        if not c:
            return SymFunc()
        return SymFunc._trusted({lam: c * v for lam, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, SymFunc):
            if other.degrees() != [0]:
                raise InvalidInputError("can only divide by scalars")
            other = other.coefficient(EMPTY)
        c = divide(ONE, other)
        return self.scale(c)

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInputError("negative powers of symmetric functions are not defined")
        result = SymFunc.constant(1)
        for _ in range(n):
            result = multiply(result, self)
        return result

    def __str__(self):
        return render_symfunc(self)

    def __repr__(self):
        return f"SymFunc({render_symfunc(self)!r})"


# --- characters and transition tables ---

@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """χ^lam(rho) by the Murnaghan-Nakayama rule on beta-numbers."""
    lam, rho = Partition(lam), Partition(rho)
    if sum(lam) != sum(rho):
        return 0
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((beta_set - {b}) | {target}, reverse=True)
        new_lam = Partition(x - (length - 1 - i) for i, x in enumerate(new_beta))
        total += (-1) ** height * character(new_lam, rest)
    return total


@lru_cache(maxsize=None)
def _kostka_integers(n: int) -> Dict[Partition, Dict[Partition, int]]:
    """h_mu in the Schur basis (Kostka numbers), by iterated Pieri."""
    table = {}
    for mu in partitions_of(n):
        current = Counter({EMPTY: 1})
        for part in mu:
            nxt = Counter()
            for lam, c in current.items():
                for bigger in horizontal_additions(lam, part):
                    nxt[bigger] += c
            current = nxt
        table[mu] = dict(current)
    return table


def _invert(table: Dict[Partition, Dict[Partition, Fraction]], n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    index = list(partitions_of(n))
    entries = [[table[mu].get(lam, Fraction(0)) for lam in index] for mu in index]
    matrix = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in entries])
    inverse = matrix.inv()
    result = {}
    for r, lam in enumerate(index):
        row = {}
        for c, mu in enumerate(index):
            value = inverse[r, c]
            if value != 0:
                row[mu] = Fraction(int(value.p), int(value.q))
        result[lam] = row
    return result


def _transpose(table: Dict[Partition, Dict[Partition, Fraction]]) -> Dict[Partition, Dict[Partition, Fraction]]:
    result: Dict[Partition, Dict[Partition, Fraction]] = {key: {} for key in table}
    for row_key, row in table.items():
        for col_key, value in row.items():
            result.setdefault(col_key, {})[row_key] = value
    return result


@lru_cache(maxsize=None)
def basis_in_schur(basis: str, n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    """Schur coefficients of every basis element b_mu of degree n: table[mu][lam]."""
    if basis == "s":
        return {mu: {mu: Fraction(1)} for mu in partitions_of(n)}
    if basis == "p":
        return {rho: {lam: Fraction(character(lam, rho)) for lam in partitions_of(n) if character(lam, rho)}
                for rho in partitions_of(n)}
    if basis == "h":
        return {mu: {lam: Fraction(c) for lam, c in row.items()} for mu, row in _kostka_integers(n).items()}
    if basis == "e":
        return {mu: {conjugate(lam): Fraction(c) for lam, c in row.items()}
                for mu, row in _kostka_integers(n).items()}
    if basis == "m":
        # m is Hall-dual to h, so its Schur rows are those of the inverse Kostka matrix
        return _transpose(_invert(basis_in_schur("h", n), n))
    if basis == "f":
        return {mu: {conjugate(lam): c for lam, c in row.items()} for mu, row in basis_in_schur("m", n).items()}
    raise InvalidInputError(f"unknown basis '{basis}'. Available: {', '.join(BASES)}")


@lru_cache(maxsize=None)
def schur_in_basis(basis: str, n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    """Inverse tables: table[lam][mu] with s_lam = Σ table[lam][mu] b_mu."""
    if basis == "p":
        return {lam: {rho: Fraction(character(lam, rho), z_lambda(rho))
                      for rho in partitions_of(n) if character(lam, rho)}
                for lam in partitions_of(n)}
    if basis == "s":
        return basis_in_schur("s", n)
    return _invert(basis_in_schur(basis, n), n)


# --- conversions ---

@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients of a symmetric function in one of the classical bases."""

    basis: str
    coeffs: Dict[Partition, RatFunc]

    def __post_init__(self):
        if self.basis not in BASES:
            raise InvalidInputError(f"unknown basis '{self.basis}'. Available: {', '.join(BASES)}")

    def coefficient(self, mu) -> RatFunc:
        return self.coeffs.get(Partition(mu), ZERO)

    def __str__(self):
        return render_terms(self.coeffs, self.basis)


def convert(x: SymFunc, basis: str) -> BasisExpansion:
    """Expand x in the given basis ("s", "m", "e", "h", "p" or "f")."""
    if basis not in BASES:
        raise InvalidInputError(f"unknown basis '{basis}'. Available: {', '.join(BASES)}")
    result: Dict[Partition, RatFunc] = {}
    for lam, c in x.items():
        for mu, entry in schur_in_basis(basis, sum(lam))[lam].items():
            result[mu] = result.get(mu, ZERO) + c * _as_ratfunc(entry)
    return BasisExpansion(basis, {mu: c for mu, c in result.items() if c})


def from_basis(expansion: Union[BasisExpansion, Tuple[str, Mapping]]) -> SymFunc:
    """Inverse of convert: back to the Schur basis."""
    if not isinstance(expansion, BasisExpansion):
        expansion = BasisExpansion(expansion[0], {Partition(k): ratfunc(v) for k, v in expansion[1].items()})
    result: Dict[Partition, RatFunc] = {}
    for mu, c in expansion.coeffs.items():
        for lam, entry in basis_in_schur(expansion.basis, sum(mu))[mu].items():
            result[lam] = result.get(lam, ZERO) + c * _as_ratfunc(entry)
    return SymFunc._trusted(result)


def to_powersum(x: SymFunc) -> PowerSumDict:
    """Power-sum coefficients of x, keyed by rho."""
    sums: Dict[Partition, RatFunc] = {}
    for lam, c in x.items():
        for rho in partitions_of(sum(lam)):
            chi = character(lam, rho)
            if chi:
                sums[rho] = sums.get(rho, ZERO) + c * chi
    return {rho: c / z_lambda(rho) for rho, c in sums.items() if c}


def from_powersum(coeffs: Mapping[Partition, RatFunc]) -> SymFunc:
    result: Dict[Partition, RatFunc] = {}
    for rho, c in coeffs.items():
        if not c:
            continue
        rho = Partition(rho)
        for lam in partitions_of(sum(rho)):
            chi = character(lam, rho)
            if chi:
                result[lam] = result.get(lam, ZERO) + c * chi
    return SymFunc._trusted(result)


# --- constructors ---

def basis_element(basis: str, mu) -> SymFunc:
    mu = Partition(mu)
    if basis == "s":
        return SymFunc._trusted({mu: ONE})
    return from_basis(BasisExpansion(basis, {mu: ONE}))


def s(*parts) -> SymFunc:
    return basis_element("s", _as_partition(parts))


def h(*parts) -> SymFunc:
    return basis_element("h", _as_partition(parts))


def e(*parts) -> SymFunc:
    return basis_element("e", _as_partition(parts))


def p(*parts) -> SymFunc:
    return basis_element("p", _as_partition(parts))


def m(*parts) -> SymFunc:
    return basis_element("m", _as_partition(parts))


def forgotten(*parts) -> SymFunc:
    return basis_element("f", _as_partition(parts))


# --- power-sum arithmetic ---

def merge_parts(rho: Partition, sigma: Partition) -> Partition:
    return Partition(sorted(rho + sigma, reverse=True))


def remove_parts(sigma: Partition, rho: Partition) -> Optional[Partition]:
    """sigma minus the multiset rho, or None when rho is not a sub-multiset."""
    remaining = Counter(sigma)
    remaining.subtract(Counter(rho))
    if any(v < 0 for v in remaining.values()):
        return None
    return Partition(sorted(remaining.elements(), reverse=True))


def ps_add(a: Mapping, b: Mapping, scale: RatFunc = ONE) -> PowerSumDict:
    result = dict(a)
    for rho, c in b.items():
        value = result.get(rho, ZERO) + scale * c
        if value:
            result[rho] = value
        else:
            result.pop(rho, None)
    return result


def ps_scale(a: Mapping, c: RatFunc) -> PowerSumDict:
    c = ratfunc(c)
    if not c:
        return {}
    return {rho: c * v for rho, v in a.items()}


def ps_mul(a: Mapping, b: Mapping) -> PowerSumDict:
    result: PowerSumDict = {}
    for rho, x in a.items():
        for sigma, y in b.items():
            key = merge_parts(rho, sigma)
            result[key] = result.get(key, ZERO) + x * y
    return {k: v for k, v in result.items() if v}


def ps_perp(a: Mapping, b: Mapping) -> PowerSumDict:
    """(Σ a_rho p_rho)^⊥ applied to Σ b_sigma p_sigma, using p_rho^⊥ p_sigma = z_sigma/z_(sigma-rho) p_(sigma-rho)."""
    result: PowerSumDict = {}
    for rho, x in a.items():
        for sigma, y in b.items():
            rest = remove_parts(sigma, rho)
            if rest is None:
                continue
            factor = Fraction(z_lambda(sigma), z_lambda(rest))
            result[rest] = result.get(rest, ZERO) + x * y * _as_ratfunc(factor)
    return {k: v for k, v in result.items() if v}


# --- products, scalar products, adjoints ---

def multiply(x: SymFunc, y: SymFunc) -> SymFunc:
    if not x or not y:
        return SymFunc()
    return from_powersum(ps_mul(x.powersum(), y.powersum()))


def pieri_h(k: int, f: SymFunc) -> SymFunc:
    """h_k · f through horizontal-strip additions."""
    result: Dict[Partition, RatFunc] = {}
    for mu, c in f.items():
        for lam in horizontal_additions(mu, k):
            result[lam] = result.get(lam, ZERO) + c
    return SymFunc._trusted(result)


def pieri_e(k: int, f: SymFunc) -> SymFunc:
    """e_k · f through vertical-strip additions."""
    result: Dict[Partition, RatFunc] = {}
    for mu, c in f.items():
        for lam in vertical_additions(mu, k):
            result[lam] = result.get(lam, ZERO) + c
    return SymFunc._trusted(result)


def hall_inner(x: SymFunc, y: SymFunc) -> RatFunc:
    """Hall scalar product; Schur functions are orthonormal."""
    total = ZERO
    for lam, c in x.items():
        other = y.coefficient(lam)
        if other:
            total = total + c * other
    return total


@lru_cache(maxsize=None)
def star_norm(rho: Partition) -> RatFunc:
    """Z_rho = (-1)^(|rho|-l(rho)) z_rho Π (1-q^k)(1-t^k)."""
    rho = Partition(rho)
    value = ratfunc((-1) ** (sum(rho) - len(rho)) * z_lambda(rho))
    for k in rho:
        value = value * (1 - q ** k) * (1 - t ** k)
    return value


def star_inner(x: SymFunc, y: SymFunc) -> RatFunc:
    """The ⋆-scalar product, diagonal on power sums with norms Z_rho."""
    px, py = x.powersum(), y.powersum()
    total = ZERO
    for rho, c in px.items():
        other = py.get(rho)
        if other:
            total = total + c * other * star_norm(rho)
    return total


def perp(f: SymFunc, g: SymFunc) -> SymFunc:
    """f^⊥ g, the Hall adjoint of multiplication by f."""
    if not f or not g:
        return SymFunc()
    return from_powersum(ps_perp(f.powersum(), g.powersum()))


def e_perp(k: int, g: SymFunc) -> SymFunc:
    """e_k^⊥ g by removing vertical strips."""
    from .partitions import vertical_strips

    result: Dict[Partition, RatFunc] = {}
    for lam, c in g.items():
        for mu in vertical_strips(lam, k):
            result[mu] = result.get(mu, ZERO) + c
    return SymFunc._trusted(result)


def h_perp(k: int, g: SymFunc) -> SymFunc:
    """h_k^⊥ g by removing horizontal strips."""
    from .partitions import horizontal_strips

    result: Dict[Partition, RatFunc] = {}
    for lam, c in g.items():
        for mu in horizontal_strips(lam, k):
            result[mu] = result.get(mu, ZERO) + c
    return SymFunc._trusted(result)


_INVERT_QT = {"q": ONE / q, "t": ONE / t}


def omega(f: SymFunc) -> SymFunc:
    return SymFunc._trusted({conjugate(lam): c for lam, c in f.items()})


def down(f: SymFunc) -> SymFunc:
    """↓f(q,t;x) = ω f(1/q, 1/t; x)."""
    return SymFunc._trusted({conjugate(lam): specialize(c, _INVERT_QT) for lam, c in f.items()})


def involution(kind: str, f: SymFunc) -> SymFunc:
    if kind == "omega":
        return omega(f)
    if kind == "down":
        return down(f)
    raise InvalidInputError(f"unknown involution '{kind}'. Available: omega, down")


# --- compositions ---

def straighten_schur(alpha: Iterable[int]) -> Optional[Tuple[int, Partition]]:
    """
    Reduce s_alpha for a composition alpha to ±s_lam, or None when it vanishes.

    Uses s_(..., a, b, ...) = -s_(..., b-1, a+1, ...) and s_(..., a, a+1, ...) = 0.
    """
    parts = [int(a) for a in alpha]
    if any(a < 0 for a in parts):
        raise InvalidInputError(f"compositions have nonnegative entries, got {parts}")
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(parts) - 1):
            a, b = parts[i], parts[i + 1]
            if a >= b:
                continue
            if b == a + 1:
                return None
            parts[i], parts[i + 1] = b - 1, a + 1
            sign = -sign
            changed = True
            break
    return sign, Partition(parts)


def _permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def jacobi_trudi(alpha: Iterable[int], kind: str = "h") -> SymFunc:
    """det(h_{alpha_i - i + j}) (or with e) for a composition alpha."""
    if kind not in ("h", "e"):
        raise InvalidInputError(f"Jacobi-Trudi takes kind 'h' or 'e', got '{kind}'")
    alpha = [int(a) for a in alpha]
    k = len(alpha)
    accumulated: Counter = Counter()
    for perm in permutations(range(k)):
        entries = [alpha[i] - i + perm[i] for i in range(k)]
        if any(v < 0 for v in entries):
            continue
        accumulated[Partition(sorted((v for v in entries if v), reverse=True))] += _permutation_sign(perm)
    return from_basis(BasisExpansion(kind, {mu: ratfunc(c) for mu, c in accumulated.items() if c}))


# --- principal specializations ---

def _schur_hook_formula(lam: Partition, k: int, mode: str) -> RatFunc:
    value = ONE
    conj = conjugate(lam)
    if mode == "qpowers":
        value = q ** eta(lam)
    for i, j in lam.cells():
        content = i - j
        hook_length = lam[j] - i + conj[i] - j - 1
        if mode == "ones":
            value = value * (k + content) / hook_length
        else:
            value = value * (1 - power(q, k + content)) / (1 - q ** hook_length)
    return value


def _monomial_evaluation(mu: Partition, k: int, mode: str) -> RatFunc:
    if len(mu) > k:
        return ZERO
    padded = list(mu) + [0] * (k - len(mu))
    total = ZERO
    for arrangement in multiset_permutations(padded):
        if mode == "ones":
            total = total + 1
        else:
            total = total + q ** sum(i * a for i, a in enumerate(arrangement))
    return total


def principal_spec(f: SymFunc, k: int, mode: str = "ones", method: str = "both") -> RatFunc:
    """
    Evaluate f at k variables equal to 1 ("ones") or at 1, q, ..., q^(k-1) ("qpowers").

    method "hook" uses the hook-content product on Schur terms, "monomial" sums
    monomial evaluations; "both" computes the two and requires them to agree.
    """
    if mode not in ("ones", "qpowers"):
        raise InvalidInputError(f"unknown specialization mode '{mode}'. Available: ones, qpowers")
    if k < 0:
        raise InvalidInputError("number of variables must be nonnegative")

    hook_value = monomial_value = None
    if method in ("hook", "both"):
        hook_value = ZERO
        for lam, c in f.items():
            hook_value = hook_value + c * _schur_hook_formula(lam, k, mode)
    if method in ("monomial", "both"):
        monomial_value = ZERO
        for mu, c in convert(f, "m").coeffs.items():
            monomial_value = monomial_value + c * _monomial_evaluation(mu, k, mode)
    if method == "both" and hook_value != monomial_value:
        raise ArithmeticInconsistencyError(
            f"principal specialization routes disagree for {f}: {render(hook_value)} vs {render(monomial_value)}")
    if hook_value is None and monomial_value is None:
        raise InvalidInputError(f"unknown method '{method}'. Available: hook, monomial, both")
    return hook_value if hook_value is not None else monomial_value


# --- text form ---

def _format_term(c: RatFunc, label: str) -> str:
    if label == "":
        return render(c) if is_atomic(c) or c.denom == 1 else f"({render(c)})"
    if c == 1:
        return label
    if c == -1:
        return f"-{label}"
    if is_atomic(c):
        return f"{render(c)}*{label}"
    return f"({render(c)})*{label}"


def render_terms(coeffs: Mapping[Partition, RatFunc], basis: str = "s") -> str:
    """Render e.g. "s[3,1] + (q + t)*s[2,2]"; degree-zero terms print as bare coefficients."""
    if not coeffs:
        return "0"
    ordered = sorted(coeffs, key=lambda lam: (sum(lam), lam), reverse=True)
    out = ""
    for lam in ordered:
        label = f"{basis}[{','.join(map(str, lam))}]" if lam else ""
        term = _format_term(coeffs[lam], label)
        if not out:
            out = term
        elif term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out


def render_symfunc(f: SymFunc) -> str:
    return render_terms(dict(f.items()), "s")


def _eval_symfunc_node(node: ast.AST):
    if isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name) and node.value.id in BASES:
        index = node.slice
        if isinstance(index, ast.Index):  # Python 3.8
            index = index.value
        elements = index.elts if isinstance(index, ast.Tuple) else [index]
        parts = []
        for element in elements:
            if not (isinstance(element, ast.Constant) and isinstance(element.value, int)):
                raise InvalidInputError("basis indices must be integer partitions")
            parts.append(element.value)
        return basis_element(node.value.id, Partition(parts))
    if isinstance(node, ast.BinOp):
        left, right = _eval_symfunc_node(node.left), _eval_symfunc_node(node.right)
        left_sym, right_sym = isinstance(left, SymFunc), isinstance(right, SymFunc)
        if not (left_sym or right_sym):
            return eval_coefficient_node(node)
        if isinstance(node.op, ast.Add):
            return left + right if left_sym else right + left
        if isinstance(node.op, ast.Sub):
            return left - right if left_sym else -(right - left)
        if isinstance(node.op, ast.Mult):
            if left_sym and right_sym:
                return multiply(left, right)
            return left.scale(right) if left_sym else right.scale(left)
        if isinstance(node.op, ast.Div) and left_sym and not right_sym:
            return left / right
        if isinstance(node.op, ast.Pow) and left_sym and not right_sym:
            if right.denom != 1 or not right.numer.is_ground:
                raise InvalidInputError("powers of symmetric functions take integer exponents")
            return left ** int(right.numer.LC)
        raise InvalidInputError(f"unsupported operation on symmetric functions: {ast.dump(node.op)}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = _eval_symfunc_node(node.operand)
        return -value if isinstance(node.op, ast.USub) else value
    return eval_coefficient_node(node)


def parse_symfunc(text: str) -> SymFunc:
    """Parse "e[4]", "h[2,2]", "s[3,1] + (q + t)*s[2,2]", "p[2]+q*s[1,1]"."""
    try:
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as e:
        raise InvalidInputError(f"cannot parse symmetric function {text!r}: {e.msg}") from e
    value = _eval_symfunc_node(tree.body)
    return value if isinstance(value, SymFunc) else SymFunc.constant(value)
