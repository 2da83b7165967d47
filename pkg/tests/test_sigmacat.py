import itertools

import pytest

from depcat.algebra import divisor_poset, monoid_category, ring_category, zmod
from depcat.errors import MissingSigmaObject, NotEqualElements
from depcat.famcat import constant_fam, coslice_fam, finset_fam, slice_wfam, twisted_chooser
from depcat.fincat import finset_injections, finset_skeleton, global_elements
from depcat.sigmacat import (
    check_sigma_counts,
    check_sigma_laws,
    check_transport,
    finset_decode,
    finset_index,
    finset_sigma,
    product_sigma,
    ring_sigma,
    transport,
    trivial_sigma,
    weak_slice_sigma,
)


@pytest.fixture(scope="module")
def S3():
    return finset_sigma(finset_fam(finset_skeleton(3), 1))


def _disjoint_union(lam):
    return [(i, x) for i, n in enumerate(lam) for x in range(n)]


def test_finset_sigma_matches_disjoint_union(S3):
    C, F = S3.base, S3.fam
    for a in C.objects:
        for lam in F.fam(a):
            elems = _disjoint_union(lam)
            assert C.size(S3.sigma_obj(a, lam)) == len(elems)
            assert C.table(S3.pr1(a, lam)) == tuple(i for i, _ in elems)
            for f in itertools.chain.from_iterable(C.hom(b, a) for b in C.objects):
                lf = F.restrict(lam, f)
                src = _disjoint_union(lf)
                want = tuple(elems.index((C.table(f)[j], x)) for j, x in src)
                assert C.table(S3.sigma_arr(lam, f)) == want


def test_index_encoding_roundtrip():
    lam = (2, 0, 3, 1)
    for k, (i, x) in enumerate(_disjoint_union(lam)):
        assert finset_index(lam, i, x) == k
        assert finset_decode(lam, k) == (i, x)


def test_finset_sigma_laws(S3):
    rep = check_sigma_laws(S3)
    assert rep.passed
    assert rep.entry("sigma.pullback").checked > 0


def test_cap_two_needs_missing_objects():
    with pytest.raises(MissingSigmaObject):
        finset_sigma(finset_fam(finset_skeleton(3), 2))


@pytest.mark.parametrize("n", [4, 5])
def test_ring_sigma(n):
    S = ring_sigma(ring_category(zmod(n)))
    assert check_sigma_laws(S).passed


def test_ring_sigma_z4_entries():
    S = ring_sigma(ring_category(zmod(4)))
    assert S.pr1(0, (1, 2)) == 2
    assert S.sigma_arr((1, 2), 3) == (3 * (1 + 3 + 2 + 1)) % 4


def test_trivial_sigma_everywhere():
    for C in (finset_skeleton(2), divisor_poset(6), monoid_category([[0, 1], [1, 0]])):
        assert check_sigma_laws(trivial_sigma(constant_fam(C))).passed
        assert check_sigma_laws(trivial_sigma(coslice_fam(C))).passed


def test_product_sigma_on_thin_categories():
    for C in (finset_skeleton(1), divisor_poset(12)):
        assert check_sigma_laws(product_sigma(C)).passed


def test_single_arr_flip_breaks_s2(S3):
    C = S3.base
    lam = (1, 1)
    f = C.arrow_of(1, 2, (1,))
    bad = S3.mutated("arr", (lam, f), C.arrow_of(1, 2, (0,)))
    rep = check_sigma_laws(bad)
    assert not rep.passed
    assert rep.failures[0].witness is not None


def test_pullback_failure_with_commuting_square():
    # monoid {1, e} with e o e = e: pr1 := e keeps squares commuting but (1, 1) has no mediator
    C = monoid_category([[0, 1], [1, 1]])
    S = trivial_sigma(constant_fam(C)).mutated("pr1", (0, 0), 1)
    rep = check_sigma_laws(S)
    assert rep.status("sigma.square") == "pass"
    assert rep.status("sigma.pullback") == "fail"


def test_transport_identities(S3):
    rep = check_transport(S3)
    assert rep.passed and rep.entry("transp.iso").checked > 0
    C = S3.base
    i = global_elements(C, 2)[1]
    tp = transport(S3, (1, 1), i, i)
    one = S3.sigma_obj(C.object_of_size(1), (1,))
    assert tp.ok and tp.lam_ij == tp.lam_ji == C.identity(one)
    with pytest.raises(NotEqualElements):
        transport(S3, (1, 1), global_elements(C, 2)[0], i)


def test_sigma_counts(S3):
    assert check_sigma_counts(S3).passed


def test_weak_slice_sigma_is_not_strict():
    FI = finset_injections(2)
    S = weak_slice_sigma(slice_wfam(FI, twisted_chooser(FI)))
    rep = check_sigma_laws(S)
    assert {"s1", "s2"} & {e.law for e in rep.failures}
