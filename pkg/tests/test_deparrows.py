import math

import pytest

from depcat.algebra import chain_poset, divisor_poset, ring_category, zmod
from depcat.deparrows import (
    category_of_dep_arrows,
    check_counts,
    check_dep_laws,
    check_section_counts,
    check_sections,
    constant_dep,
    dep_object_bijection,
    dep_presheaf,
    finset_dep,
    global_sections_dep,
    trivial_dep,
)
from depcat.errors import TypeMismatch
from depcat.famcat import constant_fam, finset_fam
from depcat.fincat import FinSetCategory, check_category_laws, finset_skeleton
from depcat.sigmacat import finset_sigma, product_sigma, ring_sigma


@pytest.fixture(scope="module")
def fs2():
    return finset_skeleton(2)


def test_choice_functions(fs3):
    F = finset_fam(fs3, 2)
    D = finset_dep(F)
    for a in fs3.objects:
        for lam in F.fam(a):
            assert len(D.dhom(a, lam)) == math.prod(lam)
    assert check_dep_laws(D).passed
    f = fs3.arrow_of(2, 3, (2, 2))
    assert D.apply((1, 1, 2), (0, 0, 1), f) == (1, 1)


def test_apply_checks_membership(fs2):
    D = finset_dep(finset_fam(fs2, 2))
    with pytest.raises(TypeMismatch):
        D.apply((1,), (1,), fs2.identity(1))


def test_global_sections_finset(fs3):
    S = finset_sigma(finset_fam(fs3, 1))
    D = global_sections_dep(S)
    assert check_dep_laws(D).passed
    assert check_sections(D).passed
    for a in fs3.objects:
        for lam in S.fam.fam(a):
            assert len(D.dhom(a, lam)) == math.prod(lam)


@pytest.mark.parametrize("n", [4, 5])
def test_ring_sections(n):
    S = ring_sigma(ring_category(zmod(n)))
    D = global_sections_dep(S)
    assert check_dep_laws(D).passed and check_sections(D).passed
    # pr1 o phi = 0 means phi + a*b = 0: one section per family
    for a, b in S.fam.fam(0):
        assert D.dhom(0, (a, b)) == ((-a * b) % n,)


def test_sections_over_thin_products():
    S = product_sigma(divisor_poset(12))
    D = global_sections_dep(S)
    assert check_dep_laws(D).passed and check_sections(D).passed


def test_constant_and_trivial_dep():
    C = chain_poset(3)
    assert check_dep_laws(constant_dep(C)).passed
    assert check_dep_laws(trivial_dep(constant_fam(C))).passed


def test_mutated_apply_breaks_dep2(fs2):
    F = finset_fam(fs2, 2)
    D = finset_dep(F)
    f = fs2.arrow_of(1, 2, (0,))
    bad = D.mutated((2, 1), (1, 0), f, (0,))
    rep = check_dep_laws(bad)
    assert rep.status("dep2") == "fail"


def test_exdo2_bijection_all_pairs():
    U = FinSetCategory([0, 1, 2, 3, 4, 6, 9])
    for na in range(4):
        for nb in range(4):
            bij = dep_object_bijection(U, U.object_of_size(na), U.object_of_size(nb))
            assert bij.report.passed
            assert len(bij.sections) == len(bij.hom) == nb**na


def test_exdo2_detects_bad_j():
    U = FinSetCategory([0, 1, 2, 4])
    one, two = U.object_of_size(1), U.object_of_size(2)
    zero_map = U.hom(one, two)[0]
    bij = dep_object_bijection(U, one, two, j=lambda phi: zero_map)
    assert not bij.report.passed


def test_section_counts():
    U = FinSetCategory([0, 1, 2, 3, 4, 6, 9])
    pairs = [(U.object_of_size(a), U.object_of_size(b)) for a in range(4) for b in range(4)]
    assert check_section_counts(U, pairs).passed


def test_counts(fs3):
    F = finset_fam(fs3, 2)
    assert check_counts(fs3, F, finset_dep(F)).passed


def test_dep_presheaf_category(fs2):
    D = finset_dep(finset_fam(fs2, 1))
    E, P = dep_presheaf(D)
    assert sum(len(P.at(k)) for k in E.objects) == sum(
        len(D.dhom(a, lam)) for a in fs2.objects for lam in D.fam.fam(a)
    )
    assert check_category_laws(category_of_dep_arrows(D)).passed
