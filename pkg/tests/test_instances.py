import pytest

from depcat.errors import InvalidSpec
from depcat.fincat import terminal
from depcat.instances import InstanceSpec, generate


def test_finset_shape():
    doc = generate(InstanceSpec("finset", {"max_size": 3, "fiber_cap": 2}))
    assert len(doc.category.obj_names) == 4 and len(doc.category.arrow_names) == 60


def test_finset_cap_two_has_no_sigma_layer():
    doc = generate("finset", {"max_size": 3, "fiber_cap": 2})
    assert doc.sigma is None and doc.depsigma is None
    assert doc.dep["construction"] == "choice"
    assert any("sum object" in n for n in doc.notes)


def test_ring_shapes(z4_doc):
    C = z4_doc.category
    assert (len(C.obj_names), len(C.arrow_names)) == (1, 4)
    assert len(z4_doc.fam["sets"][0]) == 16
    assert z4_doc.depsigma["construction"] == "canonical"
    assert terminal(generate("ring", {"modulus": 1}).category) is not None


def test_explicit_ring_tables():
    z2 = {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]]}
    assert generate("ring", z2).summary()["arrows"] == 2


@pytest.mark.parametrize(
    "kind, params",
    [
        ("ring", {"add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 1]]}),
        ("ring", {"add": [[0, 1], [1, 0]]}),
        ("ring", {"modulus": 0}),
        ("finset", {"max_size": "three"}),
        ("finset", {"max_size": 9}),
        ("poset", {}),
        ("poset", {"elements": ["a", "b"], "relation": [["a", "b"], ["b", "a"]]}),
        ("monoid", {"table": [[0, 1], [0, 0]]}),
        ("monoid", {}),
        ("mystery", {}),
        ("finset", {"fam": "nonsense"}),
        ("ring", {"modulus": 3, "sigma": "product"}),
        ("discrete", {"n": 2, "sigma": "product"}),
        ("discrete", {"n": 2, "dep": "sections", "sigma": "none"}),
        ("poset", {"chain": 2, "fam": "finset"}),
    ],
)
def test_invalid_specs(kind, params):
    with pytest.raises(InvalidSpec):
        generate(kind, params)


def test_selectable_layers():
    doc = generate("poset", {"chain": 3, "fam": "coslice", "sigma": "none", "dep": "none"})
    assert doc.fam["construction"] == "coslice" and doc.sigma is None and doc.dep is None
    doc = generate("discrete", {"n": 2, "dep": "constant", "sigma": "none"})
    assert doc.dep["construction"] == "constant"


def test_choice_instance_gets_zero_pr2():
    doc = generate("finset", {"max_size": 2, "fiber_cap": 2, "min_fiber": 1, "sigma": "trivial", "dep": "choice"})
    assert doc.depsigma["construction"] == "zeros"
    doc = generate("finset", {"max_size": 2, "fiber_cap": 2, "sigma": "trivial", "dep": "choice"})
    assert doc.depsigma is None and doc.notes


def test_file_kind(tmp_path, z4_doc):
    from depcat.document import save

    path = tmp_path / "d.json"
    save(z4_doc, path)
    assert generate("file", {"path": str(path)}) == z4_doc
    with pytest.raises(InvalidSpec):
        generate("file", {})
