import json

import pytest

from qtknots.coeff import divide, q, t
from qtknots.errors import InvalidInputError
from qtknots.knots import superpoly
from qtknots.output import (
    decode_poly, decode_superpoly, decode_symfunc, dumps, encode_poly, encode_superpoly, encode_symfunc,
    parse_superpoly_text,
)
from qtknots.symfunc import s


class TestJsonPoly:
    def test_encode(self):
        assert encode_poly(q + t) == {
            "vars": ["q", "t"],
            "terms": [{"coeff": "1", "powers": [1, 0]}, {"coeff": "1", "powers": [0, 1]}],
        }

    def test_constant_has_no_vars(self):
        assert encode_poly(3) == {"vars": [], "terms": [{"coeff": "3", "powers": []}]}

    def test_rational_value(self):
        value = divide(q ** 2 - t, 1 - q * t)
        encoded = encode_poly(value)
        assert "denominator" in encoded
        assert decode_poly(json.loads(dumps(encoded))) == value

    @pytest.mark.parametrize(
        "obj",
        [
            {"terms": []},
            {"vars": ["x"], "terms": []},
            {"vars": ["q"], "terms": [{"coeff": "1", "powers": [1, 2]}]},
        ],
    )
    def test_malformed(self, obj):
        with pytest.raises(InvalidInputError):
            decode_poly(obj)


class TestSymFunc:
    def test_symfunc(self):
        f = s(2, 1).scale(q + t) + s(3)
        assert decode_symfunc(encode_symfunc(f)) == f


class TestSuperpoly:
    def test_text_and_json_agree(self):
        sp = superpoly(4, 3)
        from_json = decode_superpoly(json.loads(dumps(encode_superpoly(sp))))
        assert from_json == parse_superpoly_text(sp.render("monomial")) == list(sp.coeffs)

    def test_schur_form_is_cross_checked(self):
        encoded = encode_superpoly(superpoly(3, 2))
        encoded["schur_qt"][0] = [{"a": 2, "b": 0, "mult": 1}]
        with pytest.raises(InvalidInputError):
            decode_superpoly(encoded)

    @pytest.mark.parametrize("text", ["q + t", "A^0: q ; A^2: 1", "A^x: 1"])
    def test_bad_text(self, text):
        with pytest.raises(InvalidInputError):
            parse_superpoly_text(text)

    def test_dumps_is_deterministic(self):
        assert dumps({"b": 1, "a": [1, 2]}) == '{"a": [1, 2], "b": 1}'
