import pytest

from depcat.algebra import divisor_poset, ring_category, zmod
from depcat.depsigma import (
    DepSigmaStruct,
    analyze_element,
    canonical_pr2,
    check_depsigma_laws,
    check_elements,
    element_equality,
    pr2_prime_check,
    product_pr2,
    trivial_pr2,
)
from depcat.deparrows import finset_dep
from depcat.famcat import finset_fam
from depcat.fincat import FinSetCategory, finset_skeleton, global_elements
from depcat.sigmacat import finset_sigma, product_sigma, ring_sigma, trivial_sigma


@pytest.fixture(scope="module")
def DS3():
    return canonical_pr2(finset_sigma(finset_fam(finset_skeleton(3), 1)))


def test_canonical_pr2_is_a_section(DS3):
    C, S = DS3.base, DS3.sigma
    for a in C.objects:
        for lam in DS3.fam.fam(a):
            sa = S.sigma_obj(a, lam)
            p2 = DS3.pr2(a, lam)
            assert C.compose(S.pr1(sa, DS3.pr2_family(a, lam)), p2) == C.identity(sa)


def test_canonical_pr2_laws(DS3):
    rep = check_depsigma_laws(DS3)
    assert rep.passed
    assert rep.entry("depsigma.compat").checked > 0


@pytest.mark.parametrize("n", [4, 5])
def test_canonical_on_rings(n):
    assert check_depsigma_laws(canonical_pr2(ring_sigma(ring_category(zmod(n))))).passed


def test_product_and_trivial_pr2():
    C = divisor_poset(12)
    assert check_depsigma_laws(product_pr2(C)).passed
    assert check_depsigma_laws(canonical_pr2(product_sigma(C))).passed
    assert check_depsigma_laws(trivial_pr2(trivial_sigma(finset_fam(finset_skeleton(2), 1)))).passed


def test_zero_choice_pr2_and_its_mutation():
    F = finset_fam(finset_skeleton(2), 2, min_fiber=1)
    S = trivial_sigma(F)
    DS = DepSigmaStruct(S, finset_dep(F), lambda a, lam: (0,) * len(lam))
    assert check_depsigma_laws(DS).passed
    bad = DS.mutated(1, (2,), (1,))
    assert check_depsigma_laws(bad).status("depsigma.compat") == "fail"


def test_pr2_prime_examples():
    U = FinSetCategory([0, 1, 2, 3, 4, 6, 8, 9])
    for a, b in [(1, 2), (2, 2), (2, 1), (1, 3)]:
        assert pr2_prime_check(U, U.object_of_size(a), U.object_of_size(b)).passed


def test_elements_props(DS3):
    rep = check_elements(DS3)
    assert rep.passed
    assert rep.entry("elsigma.pr3").checked > rep.entry("elsigma.pr0").checked > 0


def test_element_equality_oracle(DS3):
    C, S = DS3.base, DS3.sigma
    checked = 0
    for a in C.objects:
        for lam in DS3.fam.fam(a):
            zs = global_elements(C, S.sigma_obj(a, lam))
            for z in zs:
                ea = analyze_element(DS3, a, lam, z)
                assert ea.ok
                for w in zs:
                    v = element_equality(DS3, a, lam, z, w)
                    assert v.equal == (z == w) == v.criterion
                    checked += 1
    assert checked > 0


def test_distinct_elements_have_distinct_points(DS3):
    # over 2 with lam = (1, 1) the two elements of Sigma differ in pr1
    C, S = DS3.base, DS3.sigma
    two = C.object_of_size(2)
    z, w = global_elements(C, S.sigma_obj(two, (1, 1)))
    v = element_equality(DS3, two, (1, 1), z, w)
    assert not v.equal and not v.criterion and v.pr3
