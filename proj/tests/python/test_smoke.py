import json

import pytest

import homalg

BINDINGS = {"a4": "2", "lambda1": "3", "b3": "5"}


def test_examples_are_listed():
    names = homalg.example_names()
    assert "malcev4" in names
    assert "octonions" in names


def test_malcev4_is_hom_malcev():
    alg = homalg.load_example("malcev4").algebra
    report = homalg.check_structure(alg, "hom-malcev")
    assert report.passed
    assert report.summary() == "PASS (3 identities, 288 tuples)"


def test_corrupted_table_is_caught():
    alg = homalg.load_example("corrupted-malcev4").algebra
    report = homalg.check_structure(alg, "hom-malcev", stop_early=True)
    assert not report
    v = report.violations[0]
    assert v["identity"] == "antisymmetry"
    assert v["residual"] != "0"


def test_morphic_twist_and_split():
    e = homalg.load_example("alpha4-morphic", BINDINGS)
    base = homalg.load_example("alpha4", BINDINGS)
    twisted = homalg.twist(e.algebra, e.op("alpha"))
    assert homalg.check_structure(twisted, "hom-malcev").passed
    assert homalg.check_rota_baxter(twisted, "hom-malcev", base.op("R")).passed
    pre = homalg.split(twisted, "malcev-to-pre-malcev", base.op("R"))
    assert homalg.check_structure(pre, "hom-pre-malcev").passed


def test_adjoint_is_a_representation():
    alg = homalg.load_example("malcev4").algebra
    mod = homalg.adjoint(alg)
    assert mod.dim == 4
    assert homalg.check_module(alg, mod, "hom-malcev").passed


def test_octonions_are_alternative():
    alg = homalg.load_example("octonions").algebra
    assert homalg.check_structure(alg, "hom-alternative").passed


def test_json_round_trip():
    alg = homalg.load_example("alpha4", BINDINGS).algebra
    text = alg.to_json()
    assert json.loads(text)["dim"] == 4
    again = homalg.Algebra.from_json(text)
    assert again.to_json() == text
    assert again.product("bracket", 2, 3) == alg.product("bracket", 2, 3)


def test_operator_from_rows():
    op = homalg.Operator("f", [["1", "0"], ["t", "1"]], params=["t"])
    assert op.rows == [["1", "0"], ["t", "1"]]
    with pytest.raises(homalg.InputError):
        homalg.Operator("g", [["1", "0"], ["1"]])


def test_errors_map_to_exceptions():
    with pytest.raises(homalg.InputError):
        homalg.load_example("no-such-example")
    with pytest.raises(homalg.InputError):
        homalg.Algebra.from_json("{")
    assert issubclass(homalg.MathError, homalg.Error)
