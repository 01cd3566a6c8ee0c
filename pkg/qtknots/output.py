"""
JSON and text encodings of command results.

A JsonPoly is ``{"vars": [...], "terms": [{"coeff": "3", "powers": [...]}]}``
over the indeterminates that occur, in the fixed order q, t, A, u, y, z.
Rational coefficients carry a second term list under ``"denominator"``.
Symmetric functions are lists of ``{"lambda": parts, "coeff": JsonPoly}``
under ``"schur_x"``; superpolynomials list one JsonPoly per power of A and,
when known, their two-variable Schur form under ``"schur_qt"``.
"""

import json
from typing import Any, Dict, List, Sequence

from .coeff import INDETERMINATES, QT_RING, Coercible, IntPoly, RatFunc, parse_ratfunc, ratfunc, schur_qt, to_intpoly
from .errors import InvalidInputError
from .knots import SuperPoly
from .partitions import Partition
from .symfunc import SymFunc


def _used_vars(*polys: IntPoly) -> List[str]:
    used = set()
    for poly in polys:
        for monom in poly.itermonoms():
            used.update(i for i, e in enumerate(monom) if e)
    return [INDETERMINATES[i] for i in sorted(used)]


def _encode_terms(poly: IntPoly, names: Sequence[str]) -> List[Dict[str, Any]]:
    positions = [INDETERMINATES.index(name) for name in names]
    return [{"coeff": str(int(c)), "powers": [monom[i] for i in positions]} for monom, c in poly.terms()]


def encode_poly(x: Coercible) -> Dict[str, Any]:
    """Encode a coefficient as a JsonPoly."""
    x = ratfunc(x)
    names = _used_vars(x.numer, x.denom)
    encoded: Dict[str, Any] = {"vars": names, "terms": _encode_terms(x.numer, names)}
    if x.denom != 1:
        encoded["denominator"] = _encode_terms(x.denom, names)
    return encoded


def _decode_terms(terms: List[Dict[str, Any]], names: Sequence[str]) -> IntPoly:
    positions = [INDETERMINATES.index(name) for name in names]
    data = {}
    for term in terms:
        powers = term["powers"]
        if len(powers) != len(names):
            raise InvalidInputError(f"term {term} does not match vars {list(names)}")
        monom = [0] * len(INDETERMINATES)
        for i, e in zip(positions, powers):
            monom[i] = int(e)
        data[tuple(monom)] = int(term["coeff"])
    return QT_RING.from_dict(data) if data else QT_RING.zero


def decode_poly(obj: Dict[str, Any]) -> RatFunc:
    """Inverse of encode_poly."""
    try:
        names = list(obj["vars"])
        if any(name not in INDETERMINATES for name in names):
            raise InvalidInputError(f"unknown indeterminate in {names}")
        value = ratfunc(_decode_terms(obj["terms"], names))
        if "denominator" in obj:
            value = value / ratfunc(_decode_terms(obj["denominator"], names))
        return value
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed JsonPoly: {obj!r}") from e


def encode_symfunc(f: SymFunc) -> Dict[str, Any]:
    return {"schur_x": [{"lambda": list(lam), "coeff": encode_poly(f.coefficient(lam))} for lam in f.support()]}


def decode_symfunc(obj: Dict[str, Any]) -> SymFunc:
    try:
        return SymFunc({Partition(entry["lambda"]): decode_poly(entry["coeff"]) for entry in obj["schur_x"]})
    except (KeyError, TypeError) as e:
        raise InvalidInputError(f"malformed symmetric function: {obj!r}") from e


def encode_superpoly(sp: SuperPoly) -> Dict[str, Any]:
    encoded: Dict[str, Any] = {"label": sp.label, "A": [encode_poly(c) for c in sp.coeffs]}
    if sp.schur_form is not None:
        encoded["schur_qt"] = [
            [{"a": a, "b": b, "mult": mult} for a, b, mult in form.signed_pairs()]
            for form in sp.schur_form
        ]
    return encoded


def decode_superpoly(obj: Dict[str, Any]) -> List[IntPoly]:
    """The A-coefficients of an encoded superpolynomial, cross-checked against its Schur form."""
    try:
        coeffs = [to_intpoly(decode_poly(c)) for c in obj["A"]]
        for i, form in enumerate(obj.get("schur_qt", [])):
            total = QT_RING.zero
            for term in form:
                total = total + schur_qt(term["a"], term["b"]) * term["mult"]
            if total != coeffs[i]:
                raise InvalidInputError(f"schur_qt form of A^{i} does not match its terms")
        return coeffs
    except (KeyError, TypeError, IndexError) as e:
        raise InvalidInputError(f"malformed superpolynomial: {obj!r}") from e


def parse_superpoly_text(text: str) -> List[IntPoly]:
    """Parse "A^0: q + t ; A^1: 1" (monomial text form)."""
    coeffs: Dict[int, IntPoly] = {}
    for piece in text.split(";"):
        head, sep, body = piece.partition(":")
        head = head.strip()
        if not sep or not head.startswith("A^"):
            raise InvalidInputError(f"cannot parse superpolynomial piece {piece!r}")
        try:
            index = int(head[2:])
        except ValueError as e:
            raise InvalidInputError(f"bad power of A in {piece!r}") from e
        coeffs[index] = to_intpoly(parse_ratfunc(body))
    if sorted(coeffs) != list(range(len(coeffs))):
        raise InvalidInputError(f"powers of A in {text!r} are not 0..{len(coeffs) - 1}")
    return [coeffs[i] for i in range(len(coeffs))]


def dumps(payload: Any) -> str:
    """Deterministic JSON text for stdout."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)
