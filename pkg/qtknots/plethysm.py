"""
Alphabets and plethystic substitution.

An Alphabet is an expression tree over the main alphabet X, an optional
second main alphabet Y, the sign alphabet ε, and scalars from the
coefficient field. Its meaning is its power-sum evaluation p_k[A], stored as
a map (rho_X, rho_Y) -> coefficient, so f[A] is obtained by expanding f in
power sums and substituting.
"""

import ast
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple, Union

from .coeff import ONE, ZERO, Coercible, RatFunc, adams, divide, eval_coefficient_node, q, ratfunc, render
from .errors import InvalidInputError
from .partitions import EMPTY, Partition, hook_arm_leg
from .symfunc import SymFunc, e, from_powersum, h, merge_parts, render_terms

logger = logging.getLogger(__name__)

# (rho_X, rho_Y) -> coefficient: a polynomial in the power sums of X and Y
BiPowerSum = Dict[Tuple[Partition, Partition], RatFunc]

_SCALAR_KEY = (EMPTY, EMPTY)
_ATOMS = ("X", "Y", "eps")
_BINARY = {"add": "+", "sub": "-", "mul": "*", "div": "/"}


@dataclass(frozen=True)
class Alphabet:
    """
    A node of an alphabet expression.

    kind is one of "X", "Y", "eps", "scalar", "neg", "add", "sub", "mul", "div".
    """

    kind: str
    children: Tuple["Alphabet", ...] = ()
    value: Optional[RatFunc] = None

    # --- construction ---

    @staticmethod
    def scalar(c: Coercible) -> "Alphabet":
        return Alphabet("scalar", value=ratfunc(c))

    def _binary(self, kind: str, other) -> "Alphabet":
        if not isinstance(other, Alphabet):
            other = Alphabet.scalar(other)
        return Alphabet(kind, (self, other))

    def __add__(self, other):
        return self._binary("add", other)

    def __radd__(self, other):
        return Alphabet.scalar(other)._binary("add", self)

    def __sub__(self, other):
        return self._binary("sub", other)

    def __rsub__(self, other):
        return Alphabet.scalar(other)._binary("sub", self)

    def __mul__(self, other):
        return self._binary("mul", other)

    def __rmul__(self, other):
        return Alphabet.scalar(other)._binary("mul", self)

    def __truediv__(self, other):
        return self._binary("div", other)

    def __rtruediv__(self, other):
        return Alphabet.scalar(other)._binary("div", self)

    def __neg__(self):
        return Alphabet("neg", (self,))

    # --- inspection ---

    def uses(self, atom: str) -> bool:
        return self.kind == atom or any(child.uses(atom) for child in self.children)

    @property
    def is_scalar(self) -> bool:
        """True when p_k[A] never involves X or Y."""
        return not (self.uses("X") or self.uses("Y"))

    def __str__(self):
        if self.kind in _ATOMS:
            return self.kind
        if self.kind == "scalar":
            return render(self.value) if self.value.denom == 1 and len(self.value.numer) <= 1 \
                else f"({render(self.value)})"
        if self.kind == "neg":
            return f"-({self.children[0]})"
        left, right = self.children
        return f"({left}{_BINARY[self.kind]}{right})"


X = Alphabet("X")
Y = Alphabet("Y")
EPS = Alphabet("eps")


def _bi_add(a: Mapping, b: Mapping, sign: int = 1) -> BiPowerSum:
    result = dict(a)
    for key, c in b.items():
        value = result.get(key, ZERO) + (c if sign > 0 else -c)
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


def _bi_mul(a: Mapping, b: Mapping) -> BiPowerSum:
    result: BiPowerSum = {}
    for (ax, ay), x in a.items():
        for (bx, by), y in b.items():
            key = (merge_parts(ax, bx), merge_parts(ay, by))
            result[key] = result.get(key, ZERO) + x * y
    return {key: c for key, c in result.items() if c}


def _scalar_part(terms: Mapping, alphabet: Alphabet) -> RatFunc:
    if any(key != _SCALAR_KEY for key in terms):
        raise InvalidInputError(f"cannot divide by the non-scalar alphabet {alphabet}")
    return terms.get(_SCALAR_KEY, ZERO)


@lru_cache(maxsize=4096)
def pk_terms(alphabet: Alphabet, k: int) -> BiPowerSum:
    """p_k[A] as a polynomial in the power sums of X and Y."""
    if k < 1:
        raise InvalidInputError(f"power-sum index must be positive, got {k}")
    kind = alphabet.kind
    if kind == "X":
        return {(Partition((k,)), EMPTY): ONE}
    if kind == "Y":
        return {(EMPTY, Partition((k,))): ONE}
    if kind == "eps":
        return {_SCALAR_KEY: ratfunc((-1) ** k)}
    if kind == "scalar":
        value = adams(alphabet.value, k)
        return {_SCALAR_KEY: value} if value else {}
    if kind == "neg":
        return {key: -c for key, c in pk_terms(alphabet.children[0], k).items()}

    left, right = (pk_terms(child, k) for child in alphabet.children)
    if kind == "add":
        return _bi_add(left, right)
    if kind == "sub":
        return _bi_add(left, right, sign=-1)
    if kind == "mul":
        return _bi_mul(left, right)
    if kind == "div":
        denominator = _scalar_part(right, alphabet.children[1])
        factor = divide(ONE, denominator)
        return {key: c * factor for key, c in left.items()}
    raise InvalidInputError(f"unknown alphabet node '{kind}'")


def pk_eval(alphabet: Alphabet, k: int) -> SymFunc:
    """p_k[A] as a symmetric function in X."""
    if alphabet.uses("Y"):
        raise InvalidInputError("pk_eval takes single-alphabet expressions; use pk_terms for X and Y")
    return from_powersum({rho: c for (rho, _), c in pk_terms(alphabet, k).items()})


def _substitute(f: SymFunc, alphabet: Alphabet) -> BiPowerSum:
    result: BiPowerSum = {}
    for rho, c in f.powersum().items():
        product: BiPowerSum = {_SCALAR_KEY: c}
        for part in rho:
            product = _bi_mul(product, pk_terms(alphabet, part))
            if not product:
                break
        result = _bi_add(result, product)
    return result


def plethysm(f: SymFunc, alphabet: Alphabet) -> SymFunc:
    """
    f[A] for an alphabet in X (and scalars, ε).

    Raises:
        InvalidInputError: for alphabets that involve Y (see plethysm_tensor)
        ZeroDenominatorError: when a scalar denominator of A vanishes
    """
    if alphabet.uses("Y"):
        raise InvalidInputError(f"{alphabet} involves Y; use plethysm_tensor")
    terms = _substitute(f, alphabet)
    return from_powersum({rho: c for (rho, _), c in terms.items()})


def plethysm_scalar(f: SymFunc, alphabet: Alphabet) -> RatFunc:
    """f[A] for an alphabet without X or Y: a coefficient."""
    if not alphabet.is_scalar:
        raise InvalidInputError(f"{alphabet} is not a scalar alphabet")
    return _substitute(f, alphabet).get(_SCALAR_KEY, ZERO)


class TensorSymFunc:
    """
    An element of Λ(X) ⊗ Λ(Y), stored as Schur ⊗ Schur coefficients.

    Produced by two-alphabet plethysms such as s_2[X·Y] or h_n[X+Y].
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping] = None):
        self._coeffs: Dict[Tuple[Partition, Partition], RatFunc] = {}
        for (lam, mu), c in (coeffs or {}).items():
            key = (Partition(lam), Partition(mu))
            value = self._coeffs.get(key, ZERO) + ratfunc(c)
            if value:
                self._coeffs[key] = value
            else:
                self._coeffs.pop(key, None)

    @classmethod
    def from_bipowersum(cls, terms: Mapping) -> "TensorSymFunc":
        by_y: Dict[Partition, Dict[Partition, RatFunc]] = {}
        for (rho_x, rho_y), c in terms.items():
            by_y.setdefault(rho_y, {})[rho_x] = c
        result: Dict[Tuple[Partition, Partition], RatFunc] = {}
        for rho_y, x_part in by_y.items():
            x_schur = from_powersum(x_part)
            y_schur = from_powersum({rho_y: ONE})
            for lam, a in x_schur.items():
                for mu, b in y_schur.items():
                    result[(lam, mu)] = result.get((lam, mu), ZERO) + a * b
        return cls(result)

    def coefficient(self, lam, mu) -> RatFunc:
        return self._coeffs.get((Partition(lam), Partition(mu)), ZERO)

    def items(self):
        return self._coeffs.items()

    def x_component(self, mu) -> SymFunc:
        """The X-factor paired with s_mu(Y)."""
        mu = Partition(mu)
        return SymFunc({lam: c for (lam, nu), c in self._coeffs.items() if nu == mu})

    def __add__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        merged = dict(self._coeffs)
        for key, c in other._coeffs.items():
            merged[key] = merged.get(key, ZERO) + c
        return TensorSymFunc(merged)

    def __eq__(self, other):
        return isinstance(other, TensorSymFunc) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        by_y: Dict[Partition, Dict[Partition, RatFunc]] = {}
        for (lam, mu), c in self._coeffs.items():
            by_y.setdefault(mu, {})[lam] = c
        pieces = []
        for mu in sorted(by_y, key=lambda p: (sum(p), p), reverse=True):
            x_text = render_terms(by_y[mu], "s").replace("s[", "sX[")
            y_text = f"sY[{','.join(map(str, mu))}]" if mu else "1"
            pieces.append(f"({x_text})*{y_text}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"TensorSymFunc({str(self)!r})"


def tensor(f: SymFunc, g: SymFunc) -> TensorSymFunc:
    """f(X)·g(Y)."""
    return TensorSymFunc({(lam, mu): a * b for lam, a in f.items() for mu, b in g.items()})


def plethysm_tensor(f: SymFunc, alphabet: Alphabet) -> TensorSymFunc:
    """f[A] for an alphabet in X and Y, e.g. s_2[X*Y] or h_n[X+Y]."""
    return TensorSymFunc.from_bipowersum(_substitute(f, alphabet))


def hook_eval_1mq(mu: Partition) -> RatFunc:
    """s_mu[1-q]: (-q)^leg (1-q) for a hook (arm|leg), zero otherwise."""
    mu = Partition(mu)
    if not mu:
        return ONE
    if not mu.is_hook():
        return ZERO
    _, leg = hook_arm_leg(mu)
    return (-q) ** leg * (1 - q)


def series_eval(kind: str, alphabet: Alphabet, n: int) -> Union[SymFunc, TensorSymFunc]:
    """The degree-n term h_n[A] (kind "H") or e_n[A] (kind "E")."""
    if kind not in ("H", "E"):
        raise InvalidInputError(f"unknown series '{kind}'. Available: H, E")
    base = h(n) if kind == "H" else e(n)
    if alphabet.uses("Y"):
        return plethysm_tensor(base, alphabet)
    return plethysm(base, alphabet)


# --- text form ---

def _eval_alphabet_node(node: ast.AST) -> Alphabet:
    if isinstance(node, ast.Name) and node.id in ("X", "Y"):
        return Alphabet(node.id)
    if isinstance(node, ast.Name) and node.id in ("eps", "epsilon", "ε"):
        return EPS
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        operand = _eval_alphabet_node(node.operand)
        return -operand if isinstance(node.op, ast.USub) else operand
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
        base = _eval_alphabet_node(node.left)
        exponent = eval_coefficient_node(node.right)
        if exponent.denom != 1 or not exponent.numer.is_ground or int(exponent.numer.LC) < 0:
            raise InvalidInputError("alphabet powers take nonnegative integer exponents")
        result = Alphabet.scalar(1)
        for _ in range(int(exponent.numer.LC)):
            result = result * base
        return result
    if isinstance(node, ast.BinOp):
        ops = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul", ast.Div: "div"}
        kind = ops.get(type(node.op))
        if kind is None:
            raise InvalidInputError(f"unsupported operator in alphabet: {ast.dump(node.op)}")
        return Alphabet(kind, (_eval_alphabet_node(node.left), _eval_alphabet_node(node.right)))
    return Alphabet.scalar(eval_coefficient_node(node))


def parse_alphabet(text: str) -> Alphabet:
    """Parse "X", "eps", "1-eps*A", "X/(1-q*t)", "1-q", "X+Y", "X*Y"."""
    try:
        tree = ast.parse(text.strip().replace("^", "**").replace("ε", "eps"), mode="eval")
    except SyntaxError as exc:
        raise InvalidInputError(f"cannot parse alphabet {text!r}: {exc.msg}") from exc
    return _eval_alphabet_node(tree.body)
