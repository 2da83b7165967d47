import json

import pytest

from depcat.document import StructureDocument, deserialize, load, save, serialize
from depcat.errors import IntegrityError, LayerMissing, ParseError
from depcat.fincat import FinSetSkeleton
from depcat.instances import generate

MINIMAL = """{
  "version": 1,
  "kind": "monoid",
  "params": {"table": [[0]]},
  "notes": [],
  "category": {
    "objects": [[0, "*"]],
    "arrows": [[0, "1", 0, 0]],
    "identities": [[0, 0]],
    "composition": [[0, 0, 0]]
  },
  "fam": {"construction": "constant", "sets": [[0, [0]]], "restrict": [[0, 0, 0]]}
}
"""


@pytest.mark.parametrize(
    "kind, params",
    [
        ("finset", {"max_size": 3, "fiber_cap": 1}),
        ("finset", {"max_size": 3, "fiber_cap": 2}),
        ("finset", {"max_size": 2, "fam": "topos"}),
        ("ring", {"modulus": 4}),
        ("ring", {"modulus": 1}),
        ("poset", {"chain": 3, "fam": "coslice"}),
        ("poset", {"divisors": 12, "sigma": "product"}),
        ("monoid", {"table": [[0, 1], [1, 0]]}),
        ("discrete", {"n": 2}),
    ],
)
def test_roundtrip_is_bit_exact(kind, params):
    doc = generate(kind, params)
    data = serialize(doc)
    back = deserialize(data)
    assert back == doc
    assert serialize(back) == data


def test_roundtrip_restores_skeleton_class(fs_doc):
    back = deserialize(serialize(fs_doc))
    assert isinstance(back.category, FinSetSkeleton)
    assert back.layers().dep.sigma is back.layers().sigma


def test_serialization_is_sorted_and_line_per_row(fs_doc):
    text = serialize(fs_doc).decode()
    raw = json.loads(text)
    assert list(raw) == sorted(raw)
    rows = raw["sigma"]["pr1"]
    assert rows == sorted(rows, key=lambda r: json.dumps(r, separators=(",", ":"), sort_keys=True))
    assert text.count("\n") > len(rows)


def test_minimal_document_parses():
    doc = deserialize(MINIMAL)
    assert doc.layers().fam.fam(0) == (0,)
    assert doc.sigma is None
    with pytest.raises(LayerMissing):
        doc.require("sigma")


def test_truncated_file_is_a_parse_error(fs_doc):
    data = serialize(fs_doc)
    with pytest.raises(ParseError) as exc:
        deserialize(data[: len(data) // 2])
    assert exc.value.line is not None and exc.value.column is not None


@pytest.mark.parametrize(
    "edit",
    [
        lambda r: r["category"]["arrows"].__setitem__(0, [0, "1", 0, 7]),
        lambda r: r["category"]["composition"].append([0, 0, 5]),
        lambda r: r["fam"]["restrict"].append([9, 0, 0]),
        lambda r: r["category"]["identities"].clear(),
    ],
)
def test_dangling_ids_are_integrity_errors(edit):
    raw = json.loads(MINIMAL)
    edit(raw)
    with pytest.raises(IntegrityError):
        deserialize(json.dumps(raw))


def test_bad_version_and_shape():
    raw = json.loads(MINIMAL)
    raw["version"] = 99
    with pytest.raises(ParseError):
        deserialize(json.dumps(raw))
    with pytest.raises(ParseError):
        deserialize("[1, 2]")
    with pytest.raises(ParseError):
        deserialize(b"\xff\xfe")


def test_sigma_without_fam_is_rejected():
    raw = json.loads(MINIMAL)
    del raw["fam"]
    raw["sigma"] = {"construction": "x", "obj": [], "pr1": [], "arr": []}
    with pytest.raises(IntegrityError):
        deserialize(json.dumps(raw))


def test_single_entry_edit_changes_equality(fs_doc):
    key = next(iter(fs_doc.sigma["arr"]))
    other = fs_doc.with_entry("sigma", "arr", key, fs_doc.sigma["arr"][key] + 1)
    assert other != fs_doc
    assert fs_doc.sigma["arr"][key] != other.sigma["arr"][key]


def test_save_and_load(tmp_path, z4_doc):
    path = tmp_path / "z4.json"
    save(z4_doc, path)
    assert load(path) == z4_doc
    assert isinstance(load(path), StructureDocument)
