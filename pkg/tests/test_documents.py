import json

import pytest

from bolext import documents as docs
from bolext.bol import validate_bol
from bolext.errors import ParseError
from bolext.extensions import validate_extension
from bolext.representation import validate_representation

from conftest import corpus_dir


def _roundtrip(path, kind, serialize):
    obj = docs.parse_document(str(path), kind)
    text = path.read_text()
    assert docs.canonical_json(serialize(obj)) == text
    return obj


def test_corpus_roundtrip_algebras():
    for p in sorted(corpus_dir().glob("*.bol")):
        a = _roundtrip(p, "algebra", docs.algebra_to_doc)
        assert validate_bol(a).valid, p.name


def test_corpus_roundtrip_reps():
    manifest = json.loads((corpus_dir() / "manifest.json").read_text())
    for name, meta in manifest["representations"].items():
        r = _roundtrip(corpus_dir() / name, "representation",
                       docs.representation_to_doc)
        a = docs.parse_document(str(corpus_dir() / meta["algebra"]), "algebra")
        assert validate_representation(a, r).valid, name


def test_corpus_roundtrip_extensions():
    for name in ("e_h3.ext", "e_h3_q.ext"):
        e = _roundtrip(corpus_dir() / name, "extension", docs.extension_to_doc)
        assert validate_extension(e).valid, name


def test_parse_rejects_char_2_3(tmp_path):
    doc = {"field": {"p": 3}, "dim": 1, "bilinear": [[[0]]],
           "trilinear": [[[[0]]]]}
    p = tmp_path / "bad.bol"
    p.write_text(json.dumps(doc))
    with pytest.raises(ParseError, match="characteristic"):
        docs.parse_document(str(p), "algebra")


def test_parse_rejects_skew_violation(tmp_path):
    doc = {"field": {"p": 5}, "dim": 2,
           "bilinear": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
           "trilinear": [[[[0, 0]] * 2] * 2] * 2}
    p = tmp_path / "bad.bol"
    p.write_text(json.dumps(doc))
    with pytest.raises(ParseError, match="skew"):
        docs.parse_document(str(p), "algebra")


def test_parse_rejects_out_of_range_residue(tmp_path):
    doc = {"field": {"p": 5}, "dim": 1, "bilinear": [[[7]]],
           "trilinear": [[[[0]]]]}
    p = tmp_path / "bad.bol"
    p.write_text(json.dumps(doc))
    with pytest.raises(ParseError, match="residue"):
        docs.parse_document(str(p), "algebra")


def test_parse_rejects_bad_shape(tmp_path):
    doc = {"field": "Q", "dim": 2, "bilinear": [[[0, 0]]],
           "trilinear": [[[[0, 0]] * 2] * 2] * 2}
    p = tmp_path / "bad.bol"
    p.write_text(json.dumps(doc))
    with pytest.raises(ParseError):
        docs.parse_document(str(p), "algebra")


def test_parse_rejects_bad_json(tmp_path):
    p = tmp_path / "bad.bol"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        docs.parse_document(str(p), "algebra")


def test_missing_file():
    with pytest.raises(ParseError):
        docs.parse_document("no/such/file.bol", "algebra")


def test_rational_scalars_roundtrip(tmp_path, Q):
    doc = {"field": "Q", "dim": 2,
           "bilinear": [[["0", "0"], ["1/2", "-2/3"]],
                        [["-1/2", "2/3"], ["0", "0"]]],
           "trilinear": [[[["0", "0"]] * 2] * 2] * 2}
    p = tmp_path / "frac.bol"
    p.write_text(json.dumps(doc))
    a = docs.parse_document(str(p), "algebra")
    assert a.bil[0][1][0] == Q.scalar(1) / Q.scalar(2)
    again = docs.algebra_to_doc(a)
    assert again["bilinear"][0][1] == ["1/2", "-2/3"]


def test_nab_doc_with_file_references(tmp_path, F5):
    from bolext.extensions import theta_map, e_h3
    c = theta_map(e_h3(F5))
    doc = docs.nab_to_doc(c)
    (tmp_path / "base.bol").write_text(
        docs.canonical_json(docs.algebra_to_doc(c.base)))
    (tmp_path / "fiber.bol").write_text(
        docs.canonical_json(docs.algebra_to_doc(c.fiber)))
    doc["base"] = "base.bol"
    doc["fiber"] = "fiber.bol"
    p = tmp_path / "c.nab"
    p.write_text(json.dumps(doc))
    c2 = docs.parse_document(str(p), "nab-cocycle")
    assert c2 == c


def test_aut_pair_doc(F5):
    from bolext.exactlin import Matrix
    from bolext.wells import AutPair
    pair = AutPair(Matrix.identity(F5, 2), Matrix.from_int_rows(F5, [[2]]))
    doc = docs.aut_pair_to_doc(pair)
    back = docs.aut_pair_from_doc(doc, F5, 2, 1, "<mem>")
    assert back.alpha == pair.alpha and back.beta == pair.beta
