import json

import pytest
from hypothesis import given, strategies as st

from conftest import higgs
from cyclicspec.cli.instances import InstanceSpec, random_instance
from cyclicspec.correspondence import forward_spectral_data
from cyclicspec.polyalg.fields import GF, QQ
from cyclicspec.serialize import (SchemaError, dumps, higgs_from_json, higgs_to_json, loads,
                                  poly_to_json, read_poly_tx, spectral_data_from_json,
                                  spectral_data_to_json)

F7 = GF(7)


def test_higgs_schema_shape():
    H = higgs(QQ, (2, 1), [[1, [0, "1/2"]]], [[1], [-1]])
    doc = higgs_to_json(H)
    assert doc == {"m": 2, "field": {"type": "Q"}, "dims": [2, 1],
                   "phi": [[[["1"], ["0", "1/2"]]], [[["1"]], [["-1"]]]]}
    assert higgs_from_json(json.loads(dumps(doc))) == H


@given(st.integers(1, 4), st.lists(st.integers(1, 3), min_size=4, max_size=4), st.integers(0, 10 ** 6),
       st.sampled_from([F7, GF(10007), QQ]))
def test_higgs_round_trip(m, ps, seed, F):
    H = random_instance(InstanceSpec(m, tuple(ps[:m]), F, 2, seed))
    assert higgs_from_json(loads(dumps(higgs_to_json(H)))) == H


def test_spectral_data_round_trip():
    H = higgs(F7, (1, 1, 1), [[[0, 1]]], [[[1, 1]]], [[[2, 1]]])
    sd = forward_spectral_data(H)
    doc = spectral_data_to_json(sd)
    sd2 = spectral_data_from_json(loads(dumps(doc)))
    assert sd2.c == sd.c and sd2.divisors == sd.divisors and sd2.L0.T == sd.L0.T


def test_poly_in_t_nested():
    c = read_poly_tx(F7, [["0", "6", "1"], ["1"]], "$.c")
    assert poly_to_json(c) == [["0", "6", "1"], ["1"]]


@pytest.mark.parametrize("doc,path", [
    ({"field": {"type": "Q"}, "dims": [1], "phi": [[[["1"]]]]}, "$.m"),
    ({"m": 1, "field": {"type": "Fp", "p": 8}, "dims": [1], "phi": [[[["1"]]]]}, "$.field"),
    ({"m": 2, "field": {"type": "Q"}, "dims": [1], "phi": []}, "$.dims"),
    ({"m": 1, "field": {"type": "Q"}, "dims": [2], "phi": [[[["1"]]]]}, "$.phi[0]"),
    ({"m": 1, "field": {"type": "Q"}, "dims": [1], "phi": [[[["a"]]]]}, "$.phi[0][0][0][0]"),
])
def test_schema_errors_carry_paths(doc, path):
    with pytest.raises(SchemaError) as e:
        higgs_from_json(doc)
    assert e.value.path == path


def test_decode_error_position():
    with pytest.raises(SchemaError) as e:
        loads('{"m": 1,\n  "dims": [1,]}', "H.json")
    assert e.value.path.startswith("H.json:2:")


def test_spectral_schema_errors():
    with pytest.raises(SchemaError):
        spectral_data_from_json({"field": {"type": "Q"}, "c": [["0"], ["2"]], "L0": {"rank": 1, "T": [[["0"]]]},
                                 "divisors": [[[["1"]]]]})
    with pytest.raises(SchemaError):
        spectral_data_from_json({"field": {"type": "Q"}, "c": [["0"], ["1"]], "L0": {"rank": 1, "T": [[["0"]]]},
                                 "divisors": [[[[]]]]})
