import json
from fractions import Fraction

import pytest

from ninthpoint.documents import (
    DocumentError,
    canonical_json,
    handle_compute,
    handle_degeneracy,
    parse_points_document,
    parse_rational,
    serialize_points_document,
)

PRIME_DOC = {
    "points": [
        ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"],
        ["1", "2", "3"], ["1", "5", "7"], ["1", "11", "13"], ["1", "17", "19"],
    ]
}


def doc_with_point(i, triple):
    doc = json.loads(json.dumps(PRIME_DOC))
    doc["points"][i] = triple
    return doc


def test_parse_rational_forms():
    assert parse_rational("7", "f") == 7
    assert parse_rational("-12", "f") == -12
    assert parse_rational("22/7", "f") == Fraction(22, 7)
    assert parse_rational("3.25", "f") == Fraction(13, 4)
    assert parse_rational("-0.5", "f") == Fraction(-1, 2)


@pytest.mark.parametrize("bad", ["", "abc", "1.2.3", "1/0", "1e3", "0x10", "nan", "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(DocumentError):
        parse_rational(bad, "f")


def test_parse_rational_rejects_non_string():
    with pytest.raises(DocumentError) as err:
        parse_rational(1.5, "points[3][y]")
    assert err.value.field == "points[3][y]"


def test_parse_document_happy_path():
    config = parse_points_document(PRIME_DOC)
    assert config.pt(5).coords() == (1, 2, 3)


def test_parse_document_errors_name_fields():
    with pytest.raises(DocumentError) as err:
        parse_points_document({"points": PRIME_DOC["points"][:7]})
    assert err.value.field == "points"

    with pytest.raises(DocumentError) as err:
        parse_points_document(doc_with_point(2, ["1", "2"]))
    assert err.value.field == "points[3]"

    with pytest.raises(DocumentError) as err:
        parse_points_document(doc_with_point(4, ["1", "x", "3"]))
    assert err.value.field == "points[5][y]"

    with pytest.raises(DocumentError) as err:
        parse_points_document(doc_with_point(0, ["0", "0", "0"]))
    assert err.value.field == "points[1]"

    with pytest.raises(DocumentError):
        parse_points_document([1, 2, 3])


def test_round_trip_is_lossless():
    config = parse_points_document(PRIME_DOC)
    doc = serialize_points_document(config)
    again = parse_points_document(doc)
    assert again == config
    assert serialize_points_document(again) == doc


def test_round_trip_preserves_fractions():
    doc = doc_with_point(4, ["1/3", "-7/5", "0.25"])
    config = parse_points_document(doc)
    assert config.pt(5).coords() == (Fraction(1, 3), Fraction(-7, 5), Fraction(1, 4))
    recovered = parse_points_document(serialize_points_document(config))
    assert recovered == config


def test_compute_prime_frame_certified():
    config = parse_points_document(PRIME_DOC)
    result = handle_compute(config, "det")
    assert result["p9"] == ["196511", "126161", "112711"]
    assert result["certification"]["certified"] is True
    assert result["degeneracy"]["collinear_triples"] == [[6, 7, 8]]
    assert result["pencil_nullity"] == 2
    assert len(result["cubic_basis"]) == 2
    assert result["triple"] == [1, 2, 3]


def test_compute_duplicate_points_reports_pair():
    config = parse_points_document(doc_with_point(1, ["1", "0", "0"]))
    result = handle_compute(config, "det")
    assert result["p9"] is None
    assert [1, 2] in result["degeneracy"]["coincident_pairs"]
    assert result["certification"] is None


def test_compute_fano_zero_vector_signal():
    config = parse_points_document(doc_with_point(1, ["1", "0", "0"]))
    result = handle_compute(config, "fano")
    assert result["p9"] is None
    assert result["zero_vector"] is True
    assert result["counters"]["fano_evaluations"] == 2880


def test_compute_methods_give_identical_point():
    config = parse_points_document(PRIME_DOC)
    values = {
        m: handle_compute(config, m)["p9"]
        for m in ("det", "reduced", "crossratio", "fano")
    }
    assert len({tuple(v) for v in values.values()}) == 1


def test_compute_response_deterministic():
    config = parse_points_document(PRIME_DOC)
    a = canonical_json(handle_compute(config, "det"))
    b = canonical_json(handle_compute(config, "det"))
    assert a == b


def test_compute_rejects_unknown_method():
    config = parse_points_document(PRIME_DOC)
    with pytest.raises(DocumentError) as err:
        handle_compute(config, "average")
    assert err.value.field == "method"


def test_compute_overdegenerate_pencil():
    doc = {
        "points": [["1", str(t), str(t * t)] for t in range(8)]
    }
    doc["points"][0] = ["1", "0", "0"]
    config = parse_points_document(doc)
    result = handle_compute(config, "det")
    assert result["pencil_nullity"] > 2
    assert result["cubic_basis"] is None
    assert result["p9"] is None


def test_handle_degeneracy():
    config = parse_points_document(PRIME_DOC)
    out = handle_degeneracy(config)
    assert out["degeneracy"]["collinear_triples"] == [[6, 7, 8]]


def test_canonical_json_stable_key_order():
    assert canonical_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'
