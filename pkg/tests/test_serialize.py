import json

import numpy as np
import pytest

from octe6 import serialize as sz
from octe6.octonion import conj, unit
from conftest import random_hermitian


class TestRoundTrip:
    def test_diagonal(self):
        obj = {"diag": [1, 2, 3], "o12": [0.0] * 8, "o13": [0.0] * 8, "o23": [0.0] * 8}
        x = sz.matrix_from_obj(obj)
        assert x[0, 0, 0] == 1.0 and x[1, 1, 0] == 2.0 and x[2, 2, 0] == 3.0
        assert np.abs(x[0, 1]).max() == 0.0

    def test_bit_exact_array_round_trip(self, rng):
        for x in random_hermitian(rng, 20):
            back = sz.matrix_from_obj(sz.matrix_to_obj(x))
            assert np.array_equal(back, x)  # bitwise

    def test_bit_exact_text_round_trip(self, rng):
        x = random_hermitian(rng, 1)[0]
        text = sz.dumps(sz.matrix_to_obj(x))
        text2 = sz.dumps(sz.matrix_to_obj(sz.loads_matrix(text)))
        assert text == text2

    def test_accepts_consistent_lower_triangle(self, rng):
        x = random_hermitian(rng, 1)[0]
        obj = sz.matrix_to_obj(x)
        obj["o21"] = sz.octonion_to_list(conj(np.array(obj["o12"])))
        assert np.array_equal(sz.matrix_from_obj(obj), x)


class TestValidation:
    def valid(self):
        return {"diag": [1, 2, 3], "o12": [0.0] * 8, "o13": [0.0] * 8, "o23": [0.0] * 8}

    def test_wrong_length_o12(self):
        obj = self.valid()
        obj["o12"] = [0.0] * 7
        with pytest.raises(sz.MalformedMatrixError, match="o12"):
            sz.matrix_from_obj(obj)

    def test_wrong_length_diag(self):
        obj = self.valid()
        obj["diag"] = [1, 2]
        with pytest.raises(sz.MalformedMatrixError, match="diag"):
            sz.matrix_from_obj(obj)

    def test_missing_key(self):
        obj = self.valid()
        del obj["o23"]
        with pytest.raises(sz.MalformedMatrixError, match="o23"):
            sz.matrix_from_obj(obj)

    def test_unknown_key(self):
        obj = self.valid()
        obj["o99"] = [0.0] * 8
        with pytest.raises(sz.MalformedMatrixError, match="o99"):
            sz.matrix_from_obj(obj)

    def test_non_finite(self):
        obj = self.valid()
        obj["o12"][3] = float("nan")
        with pytest.raises(sz.MalformedMatrixError, match="finite"):
            sz.matrix_from_obj(obj)
        obj = self.valid()
        obj["diag"][0] = float("inf")
        with pytest.raises(sz.MalformedMatrixError, match="finite"):
            sz.matrix_from_obj(obj)

    def test_non_numeric(self):
        obj = self.valid()
        obj["diag"] = [1, "two", 3]
        with pytest.raises(sz.MalformedMatrixError):
            sz.matrix_from_obj(obj)

    def test_not_an_object(self):
        with pytest.raises(sz.MalformedMatrixError):
            sz.matrix_from_obj([1, 2, 3])

    def test_invalid_json_text(self):
        with pytest.raises(sz.MalformedMatrixError, match="invalid JSON"):
            sz.loads_matrix("{not json")

    def test_inconsistent_lower_triangle(self):
        obj = self.valid()
        obj["o12"] = sz.octonion_to_list(unit("k"))
        obj["o21"] = sz.octonion_to_list(unit("k"))  # should be conj = -k
        with pytest.raises(sz.NotHermitianError, match="o21"):
            sz.matrix_from_obj(obj)

    def test_error_codes_distinct(self):
        assert sz.MalformedMatrixError.code != sz.NotHermitianError.code


class TestCanonicalDumps:
    def test_sorted_and_newline_terminated(self):
        text = sz.dumps({"b": 1, "a": 2})
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("\n")

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            sz.dumps({"x": float("nan")})

    def test_float_repr_round_trips(self):
        value = 0.1 + 0.2
        again = json.loads(sz.dumps({"v": value}))["v"]
        assert again == value
