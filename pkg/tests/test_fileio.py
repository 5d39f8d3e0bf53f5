import json

import numpy as np
import pytest

from gyrolab import (
    NotAssociative,
    NotLatinSquare,
    ParseError,
    catalog_group,
    parse_group_file,
    report_document,
    resolve_group,
    verify_suite,
    write_group_file,
)
from gyrolab.fileio import (
    dumps_json,
    export_text,
    gather_sources,
    matrix_csv,
)


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return p


def test_parse_table_file(tmp_path):
    p = _write(tmp_path, "c2.json", {"order": 2, "table": [[0, 1], [1, 0]]})
    G = parse_group_file(p)
    assert G.order == 2
    assert G.name == "c2"              # falls back to the file stem


def test_parse_trivial(tmp_path):
    p = _write(tmp_path, "t.json", {"order": 1, "table": [[0]]})
    assert parse_group_file(p).order == 1


def test_parse_permutation_file(tmp_path):
    p = _write(tmp_path, "d16.json", {
        "degree": 8,
        "generators": [[1, 2, 3, 4, 5, 6, 7, 0], [0, 7, 6, 5, 4, 3, 2, 1]],
    })
    G = parse_group_file(p)
    assert G.order == 16


def test_roundtrip(tmp_path, d16):
    out = tmp_path / "d16.json"
    write_group_file(d16, out)
    H = parse_group_file(out)
    assert np.array_equal(H.table, d16.table)
    assert H.names == d16.names
    # a second write is byte-identical
    out2 = tmp_path / "again.json"
    write_group_file(H, out2)
    assert out.read_text() == out2.read_text()


def test_identity_relocated_on_load(tmp_path):
    # C3 written with the identity at index 1
    t = [[2, 0, 1], [0, 1, 2], [1, 2, 0]]
    p = _write(tmp_path, "c3moved.json", {"order": 3, "table": t})
    G = parse_group_file(p)
    assert G.relabeled_from == 1
    assert G.mul(0, 2) == 2


@pytest.mark.parametrize("doc,fragment", [
    ("{not json", "invalid JSON"),
    ("[1,2]", "JSON object"),
    ({"order": 2}, "exactly one"),
    ({"order": 2, "table": [[0, 1], [1, 0]], "generators": [[0, 1]]}, "exactly one"),
    ({"order": 0, "table": []}, "positive integer"),
    ({"order": 2, "table": [[0, 1]]}, "shape"),
    ({"order": 2, "table": [[0, 1], [1, 0]], "names": ["e"]}, "names"),
    ({"degree": 3, "generators": []}, "non-empty"),
    ({"degree": 3, "generators": [[0, 1]]}, "generator 0"),
    ({"order": 2, "table": [["a", "b"], ["b", "a"]]}, "table"),
])
def test_parse_errors(tmp_path, doc, fragment):
    p = _write(tmp_path, "bad.json", doc)
    with pytest.raises(ParseError) as exc:
        parse_group_file(p)
    assert fragment in str(exc.value)


def test_math_validation_propagates(tmp_path):
    latin_bad = _write(tmp_path, "lat.json",
                       {"order": 3, "table": [[0, 1, 2], [1, 1, 1], [2, 2, 2]]})
    with pytest.raises(NotLatinSquare):
        parse_group_file(latin_bad)
    nonassoc = _write(tmp_path, "na.json", {"order": 5, "table": [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]})
    with pytest.raises(NotAssociative):
        parse_group_file(nonassoc)


def test_resolve_group(tmp_path):
    assert resolve_group("cyclic:5").order == 5
    p = _write(tmp_path, "k.json", {"order": 2, "table": [[0, 1], [1, 0]]})
    assert resolve_group(f"file:{p}").order == 2


def test_gather_sources_dir(tmp_path):
    for name in ("b.json", "a.json", "skip.txt"):
        (tmp_path / name).write_text("{}")
    got = gather_sources(str(tmp_path))
    assert got == [f"file:{tmp_path/'a.json'}", f"file:{tmp_path/'b.json'}"]


def test_gather_sources_list_file(tmp_path):
    lst = tmp_path / "specs.txt"
    lst.write_text("cyclic:3\n\n# a comment\nwreath33\n")
    assert gather_sources(str(lst)) == ["cyclic:3", "wreath33"]


def test_gather_sources_missing(tmp_path):
    with pytest.raises(ParseError):
        gather_sources(str(tmp_path / "nope"))


def test_report_document_shape(d16):
    reports = verify_suite(d16, ["char-commutant", "two-engel-implies-class2"])
    doc = report_document(d16, reports, source="dihedral:16")
    assert doc["schema"] == "gyrolab-report/1"
    assert doc["group"]["order"] == 16
    assert doc["summary"] == {"pass": 1, "fail": 0, "skipped": 1}
    for entry in doc["checks"]:
        assert "timing" not in entry
    # serialization is stable
    assert dumps_json(doc) == dumps_json(json.loads(dumps_json(doc)))


def test_matrix_csv():
    assert matrix_csv([[0, 1], [2, 3]]) == "0,1\n2,3\n"


def test_export_circ_table_csv(d16):
    text = export_text(d16, "circ-table", "csv")
    rows = text.strip().split("\n")
    assert len(rows) == 16
    assert rows[0] == ",".join(str(i) for i in range(16))


def test_export_gyration_json(d16):
    doc = json.loads(export_text(d16, "gyration-table", "json"))
    assert doc["kind"] == "gyration-table"
    assert len(doc["gyrations"]) == 2
    assert doc["ids"][0][0] == 0


def test_export_factor_set_json(d16):
    doc = json.loads(export_text(d16, "factor-set", "json"))
    assert doc["center"] == [0, 4]
    assert doc["quotient_order"] == 8
    assert len(doc["plain"]) == 8 and len(doc["twisted"]) == 8
    flat = {v for row in doc["plain"] for v in row}
    assert flat <= {0, 1}              # indices into the two-element center


def test_export_bad_kind(d16):
    with pytest.raises(ValueError):
        export_text(d16, "nope", "json")
    with pytest.raises(ValueError):
        export_text(d16, "circ-table", "xml")
