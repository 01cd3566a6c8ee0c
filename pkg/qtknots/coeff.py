"""
Exact coefficient arithmetic over Q(q, t) and its auxiliary indeterminates.

RatFunc values are sympy FracElements of QT_FIELD: numerator and denominator
are sparse integer polynomials, cancelled by their gcd, with the leading
coefficient of the denominator (graded lexicographic order, q > t > A > u > y > z)
kept positive. IntPoly values are the PolyElements of QT_RING.
"""

import ast
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from .errors import InvalidInputError, ZeroDenominatorError

logger = logging.getLogger(__name__)

INDETERMINATES = ("q", "t", "A", "u", "y", "z")
QT_FIELD, q, t, A, u, y, z = field(",".join(INDETERMINATES), ZZ, grlex)
QT_RING = QT_FIELD.ring

IntPoly = PolyElement
RatFunc = FracElement
Coercible = Union[RatFunc, IntPoly, int, Fraction, str]

ZERO = QT_FIELD.zero
ONE = QT_FIELD.one
GENERATORS: Dict[str, RatFunc] = dict(zip(INDETERMINATES, QT_FIELD.gens))

# M = (1-q)(1-t), the scalar that drives every Hall-algebra bracket
M = (1 - q) * (1 - t)

_FIELD_OPS = ("add", "sub", "mul", "div")


def ratfunc(value: Coercible) -> RatFunc:
    """Coerce ints, Fractions, polynomials and text into the coefficient field."""
    if isinstance(value, FracElement):
        if value.field != QT_FIELD:
            raise InvalidInputError(f"rational function over a foreign field: {value}")
        return value
    if isinstance(value, PolyElement):
        return QT_FIELD(value.set_ring(QT_RING))
    if isinstance(value, bool):
        raise InvalidInputError("booleans are not coefficients")
    if isinstance(value, int):
        return QT_FIELD(value)
    if isinstance(value, Fraction):
        return QT_FIELD(value.numerator) / value.denominator
    if isinstance(value, str):
        return parse_ratfunc(value)
    if isinstance(value, sympy.Basic):
        try:
            return QT_FIELD.from_expr(value)
        except ValueError as e:
            raise InvalidInputError(str(e)) from e
    raise InvalidInputError(f"cannot use {type(value).__name__} as a coefficient")


def field_op(kind: str, x: Coercible, y: Coercible) -> RatFunc:
    """Exact field operation on canonical forms; division by zero raises ZeroDenominatorError."""
    x, y = ratfunc(x), ratfunc(y)
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return divide(x, y)
    raise InvalidInputError(f"unknown field operation '{kind}'. Available: {', '.join(_FIELD_OPS)}")


def divide(x: Coercible, y: Coercible) -> RatFunc:
    x, y = ratfunc(x), ratfunc(y)
    if not y:
        raise ZeroDenominatorError(f"division of {render(x)} by zero")
    return x / y


def power(x: Coercible, n: int) -> RatFunc:
    """x**n for any integer n; negative powers invert first so the denominator stays canonical."""
    x = ratfunc(x)
    if n >= 0:
        return x ** n
    return divide(ONE, x) ** (-n)


def normalize(x: RatFunc) -> RatFunc:
    """Re-cancel numerator and denominator; the identity on canonical forms."""
    x = ratfunc(x)
    return QT_FIELD.new(x.numer, x.denom)


def is_polynomial(x: Coercible) -> bool:
    return ratfunc(x).denom == 1


def to_intpoly(x: Coercible) -> IntPoly:
    """The numerator of x, provided x is a polynomial."""
    if isinstance(x, PolyElement):
        return x.set_ring(QT_RING)
    x = ratfunc(x)
    if x.denom != 1:
        raise InvalidInputError(f"expected a polynomial, got {render(x)}")
    return x.numer


def _generator_index(name) -> int:
    if isinstance(name, FracElement):
        for i, gen in enumerate(QT_FIELD.gens):
            if gen == name:
                return i
    elif name in GENERATORS:
        return INDETERMINATES.index(name)
    raise InvalidInputError(f"unknown indeterminate {name!r}. Available: {', '.join(INDETERMINATES)}")


def _substitute(poly: IntPoly, values: List[Optional[RatFunc]]) -> RatFunc:
    bound = [i for i, v in enumerate(values) if v is not None]
    groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
    for monom, coeff in poly.iterterms():
        key = tuple(monom[i] for i in bound)
        free = tuple(0 if values[i] is not None else e for i, e in enumerate(monom))
        groups.setdefault(key, {})[free] = coeff

    powers: Dict[Tuple[int, int], RatFunc] = {}
    result = ZERO
    for key, free_terms in groups.items():
        factor = ONE
        for i, e in zip(bound, key):
            if e:
                pw = powers.get((i, e))
                if pw is None:
                    pw = powers[(i, e)] = values[i] ** e
                factor = factor * pw
        result = result + QT_FIELD(QT_RING.from_dict(free_terms)) * factor
    return result


def specialize(x: Coercible, bindings: Mapping) -> RatFunc:
    """
    Substitute values for indeterminates and renormalize.

    Args:
        x: the rational function
        bindings: map from indeterminate (name or generator) to a coercible value

    Raises:
        ZeroDenominatorError: if the substituted denominator vanishes
    """
    x = ratfunc(x)
    values: List[Optional[RatFunc]] = [None] * len(INDETERMINATES)
    for name, value in bindings.items():
        values[_generator_index(name)] = ratfunc(value)
    if all(v is None for v in values):
        return x

    denom = _substitute(x.denom, values)
    if not denom:
        raise ZeroDenominatorError(f"substitution {dict(bindings)} sends the denominator of {render(x)} to zero")
    return _substitute(x.numer, values) / denom


def adams(x: Coercible, k: int) -> RatFunc:
    """Replace every indeterminate by its k-th power (p_k of a scalar alphabet)."""
    x = ratfunc(x)
    if k == 1:
        return x

    def scale(poly: IntPoly) -> IntPoly:
        return QT_RING.from_dict({tuple(e * k for e in monom): c for monom, c in poly.iterterms()})

    return QT_FIELD.new(scale(x.numer), scale(x.denom))


def _swap_qt_poly(poly: IntPoly) -> IntPoly:
    return QT_RING.from_dict({(m[1], m[0]) + tuple(m[2:]): c for m, c in poly.iterterms()})


def swap_qt(x: Coercible) -> RatFunc:
    """Exchange q and t."""
    x = ratfunc(x)
    return QT_FIELD.new(_swap_qt_poly(x.numer), _swap_qt_poly(x.denom))


def is_qt_symmetric(x: Coercible) -> bool:
    x = ratfunc(x)
    return swap_qt(x) == x


def monomial(**exponents: int) -> RatFunc:
    """monomial(q=2, t=1) -> q^2*t."""
    result = ONE
    for name, e in exponents.items():
        result = result * power(GENERATORS[name], e)
    return result


# --- rendering and parsing ---

def render_poly(poly: IntPoly) -> str:
    """Canonical text: terms in descending graded-lex order, e.g. "q^3 + q^2*t + q*t^2 + t^3"."""
    if not poly:
        return "0"
    pieces = []
    for monom, coeff in poly.terms():
        c = int(coeff)
        mono = "*".join(name if e == 1 else f"{name}^{e}"
                        for name, e in zip(INDETERMINATES, monom) if e)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def render(x: Coercible) -> str:
    """Canonical text for a RatFunc: the numerator alone, or "(num)/(den)"."""
    x = ratfunc(x)
    if x.denom == 1:
        return render_poly(x.numer)
    return f"({render_poly(x.numer)})/({render_poly(x.denom)})"


def is_atomic(x: RatFunc) -> bool:
    """True when the rendering needs no parentheses as a multiplicative factor."""
    x = ratfunc(x)
    return x.denom == 1 and len(x.numer) == 1


def eval_coefficient_node(node: ast.AST) -> RatFunc:
    """Evaluate a parsed arithmetic expression over the indeterminates."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return QT_FIELD(node.value)
    if isinstance(node, ast.Name):
        if node.id not in GENERATORS:
            raise InvalidInputError(f"unknown indeterminate '{node.id}'")
        return GENERATORS[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = eval_coefficient_node(node.operand)
        return -value if isinstance(node.op, ast.USub) else value
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exponent = eval_coefficient_node(node.right)
            if exponent.denom != 1 or not exponent.numer.is_ground:
                raise InvalidInputError("exponents must be integers")
            return power(eval_coefficient_node(node.left), int(exponent.numer.LC))
        left, right = eval_coefficient_node(node.left), eval_coefficient_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return divide(left, right)
    raise InvalidInputError(f"unsupported syntax in coefficient: {ast.dump(node)}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse canonical (or any arithmetic) text such as "(q^2 - t)/(1 - q*t)"."""
    try:
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as e:
        raise InvalidInputError(f"cannot parse coefficient {text!r}: {e.msg}") from e
    return eval_coefficient_node(tree.body)


# --- two-variable Schur polynomials ---

def schur_qt(a: int, b: int) -> IntPoly:
    """s_{ab}(q,t) = q^a t^b + q^(a-1) t^(b+1) + ... + q^b t^a, for a >= b."""
    if a < b or b < 0:
        raise InvalidInputError(f"s_(a,b)(q,t) needs a >= b >= 0, got ({a},{b})")
    return QT_RING.from_dict({(a - i, b + i, 0, 0, 0, 0): 1 for i in range(a - b + 1)})


def schur_qt_quotient(a: int, b: int) -> RatFunc:
    """s_{ab}(q,t) through the quotient (q^(a+1) t^b - q^b t^(a+1))/(q - t)."""
    return divide(q ** (a + 1) * t ** b - q ** b * t ** (a + 1), q - t)


def render_schur_qt_terms(terms) -> str:
    """Render (a, b, mult) triples as "s[3] + s[1,1]"; s[0] renders as 1."""
    pieces = []
    for a, b, mult in terms:
        if a == 0 and b == 0:
            body = "1" if abs(mult) == 1 else str(abs(mult))
        else:
            label = f"s[{a}]" if b == 0 else f"s[{a},{b}]"
            body = label if abs(mult) == 1 else f"{abs(mult)}*{label}"
        if not pieces:
            pieces.append(body if mult > 0 else f"-{body}")
        else:
            pieces.append(("+ " if mult > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class SchurQT:
    """
    Expansion of a q,t-symmetric polynomial in the s_{ab}(q,t).

    pairs holds the positive terms; remainder is the (non-positive) rest, so
    that sum(mult * s_ab) + remainder reconstructs the input exactly.
    """

    pairs: Tuple[Tuple[int, int, int], ...]
    remainder: IntPoly
    negative: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def is_positive(self) -> bool:
        return not self.remainder

    def signed_pairs(self) -> Tuple[Tuple[int, int, int], ...]:
        """The full signed expansion, largest (a, b) first."""
        return tuple(sorted(self.pairs + self.negative, key=lambda p: (p[0] + p[1], p[0]), reverse=True))

    def reconstruct(self) -> IntPoly:
        total = QT_RING.zero
        for a, b, mult in self.pairs:
            total = total + schur_qt(a, b) * mult
        return total + self.remainder

    def render(self) -> str:
        return render_schur_qt_terms(self.signed_pairs())


def schur_qt_expand(p: Coercible) -> SchurQT:
    """
    Greedy expansion of a q,t-symmetric polynomial into two-variable Schur polynomials.

    Raises:
        InvalidInputError: if p involves other indeterminates or is not symmetric in q, t
    """
    poly = to_intpoly(p)
    if any(any(monom[2:]) for monom in poly.itermonoms()):
        raise InvalidInputError(f"schur_qt_expand takes polynomials in q and t only, got {render_poly(poly)}")
    if _swap_qt_poly(poly) != poly:
        raise InvalidInputError(f"{render_poly(poly)} is not symmetric in q and t")

    signed = []
    remaining = poly
    while remaining:
        monom, mult = remaining.LT
        a, b = monom[0], monom[1]
        signed.append((a, b, int(mult)))
        remaining = remaining - schur_qt(a, b) * mult

    negative = tuple(p for p in signed if p[2] < 0)
    remainder = QT_RING.zero
    for a, b, mult in negative:
        remainder = remainder + schur_qt(a, b) * mult
    return SchurQT(pairs=tuple(p for p in signed if p[2] > 0), remainder=remainder, negative=negative)
