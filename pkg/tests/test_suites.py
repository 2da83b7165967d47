import pytest

from depcat.document import serialize
from depcat.errors import LayerMissing
from depcat.instances import generate
from depcat.suites import (
    MUTATION_LAWS,
    SUITES,
    applicable_suites,
    designated_instance,
    find_mutation,
    mutation_candidates,
    run_suites,
    suite_of,
)


def test_finset_doc_all_suites_pass(fs_doc):
    rep = run_suites(fs_doc)
    assert rep.passed, rep.to_text()
    laws = {e.law for e in rep.entries}
    assert {"s1", "s2", "elsigma.pr4", "count.sigma", "exdo2.bij", "cofam2"} <= laws


def test_z4_named_suites_pass(z4_doc):
    rep = run_suites(z4_doc, {"sigma", "dep", "depsigma"})
    assert rep.passed and rep.suite == "sigma+dep+depsigma"


def test_missing_layer_is_named():
    doc = generate("finset", {"max_size": 3, "fiber_cap": 2})
    with pytest.raises(LayerMissing, match="sigma"):
        run_suites(doc, {"sigma"})
    with pytest.raises(LayerMissing, match="terminal"):
        run_suites(generate("ring", {"modulus": 4}), {"transport"})
    with pytest.raises(LayerMissing):
        run_suites(doc, {"bogus"})


def test_weak_needs_pullbacks(fs_doc):
    assert "weak" not in applicable_suites(fs_doc)
    assert "weak" in applicable_suites(generate("finset", {"max_size": 2, "injective": True}))


def test_mutated_s2_entry_fails(fs_doc):
    C = fs_doc.category
    lam = (1, 1)
    f = C.arrow_of(1, 2, (1,))
    bad = fs_doc.with_entry("sigma", "arr", (lam, f), C.arrow_of(1, 2, (0,)))
    rep = run_suites(bad, {"sigma"})
    assert not rep.passed
    assert all(e.witness is not None for e in rep.failures)


def test_reports_identical_across_jobs(fs_doc):
    suites = {"cat", "fam", "sigma", "dep", "depsigma", "transport"}
    one = run_suites(fs_doc, suites, jobs=1)
    many = run_suites(fs_doc, suites, jobs=3)
    assert one.to_json() == many.to_json()
    assert one.to_text() == run_suites(fs_doc, suites).to_text()


def test_witness_iff_failure(fs_doc):
    key = next(iter(fs_doc.dep["apply"]))
    bad = fs_doc.with_entry("dep", "apply", key, "__mutant__")
    for e in run_suites(bad, {"dep"}).entries:
        assert (e.witness is not None) == (not e.passed)


def test_aborted_suite_is_reported(fs_doc):
    C = fs_doc.category
    f = C.arrow_of(1, 2, (0,))
    bad = fs_doc.with_category(C.with_composite(C.identity(2), f, -1))
    rep = run_suites(bad, {"elsigma"})
    assert not rep.passed


def test_suite_of_covers_registry():
    for law in MUTATION_LAWS:
        assert suite_of(law) in SUITES
    with pytest.raises(KeyError):
        suite_of("nonsense.law")


def test_no_candidates_when_layer_absent():
    doc = generate("finset", {"max_size": 3, "fiber_cap": 2})
    assert list(mutation_candidates(doc, "s2")) == []
    res = find_mutation(doc, "s2")
    assert not res.applied and not res.detected


@pytest.mark.parametrize("law", ["s2", "dep2", "depsigma.compat", "sigma.pullback", "weak.fam2", "exdo2.bij"])
def test_designated_mutations_detected(law):
    res = find_mutation(designated_instance(law), law)
    assert res.detected, law
    entry = res.report.entry(law)
    assert entry.status == "fail" and entry.witness is not None


def test_mutations_are_single_entry(fs_doc):
    for desc, mutant in list(mutation_candidates(fs_doc, "s1"))[:5]:
        diff = [k for k in fs_doc.sigma["arr"] if fs_doc.sigma["arr"][k] != mutant.sigma["arr"][k]]
        assert len(diff) == 1, desc
        assert serialize(mutant) != serialize(fs_doc)
