"""Second projections and element-level facts about Sigma-objects.

``pr2(a, lam)`` is a dependent arrow in ``dHom(Sigma_a lam, lam o pr1)``.
Compatibility asks ``pr2(b, lam f) == pr2(a, lam)(Sigma_lam f)``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable

from .deparrows import DepStruct, constant_dep, dep_object_bijection, global_sections_dep, trivial_dep
from .errors import DepcatError
from .famcat import _arrows_into, label
from .fincat import global_elements, require_product, require_terminal
from .report import LawReport, LawTally, make_report
from .sigmacat import SigmaStruct, product_sigma, transport


class DepSigmaStruct:
    def __init__(
        self,
        sigma: SigmaStruct,
        dep: DepStruct,
        pr2: Callable,
        *,
        name: str = "depsigma",
        overrides: Mapping | None = None,
    ):
        if dep.fam is not sigma.fam:
            raise ValueError("sigma and dep layers must share one family structure")
        self.sigma = sigma
        self.dep = dep
        self.fam = sigma.fam
        self.base = sigma.base
        self.name = name
        self._pr2 = pr2
        self.overrides = dict(overrides or {})
        self._cache: dict = {}

    def pr2(self, a, lam):
        key = (a, lam)
        if key in self.overrides:
            return self.overrides[key]
        if key not in self._cache:
            self._cache[key] = self._pr2(a, lam)
        return self._cache[key]

    def pr2_family(self, a, lam):
        """``lam o pr1^{a, lam}``, the family ``pr2(a, lam)`` lives over."""
        return self.fam.restrict(lam, self.sigma.pr1(a, lam))

    def apply_pr2(self, a, lam, f):
        """``pr2(a, lam)(f)``."""
        return self.dep.apply(self.pr2_family(a, lam), self.pr2(a, lam), f)

    def mutated(self, a, lam, value) -> "DepSigmaStruct":
        ov = dict(self.overrides)
        ov[(a, lam)] = value
        return DepSigmaStruct(self.sigma, self.dep, self._pr2, name=self.name, overrides=ov)

    def __repr__(self):
        return f"DepSigmaStruct({self.name!r})"


def check_depsigma_laws(DS: DepSigmaStruct, suite: str = "depsigma") -> LawReport:
    C, F, S, D = DS.base, DS.fam, DS.sigma, DS.dep
    typing = LawTally(suite, "depsigma.typing")
    compat = LawTally(suite, "depsigma.compat")
    tallies = [typing, compat]
    section = None
    if hasattr(D, "sigma") and D.sigma is S:
        section = LawTally(suite, "depsigma.section")
        tallies.append(section)
    for a in C.objects:
        for lam in F.fam(a):
            sa = S.sigma_obj(a, lam)
            fam_a = DS.pr2_family(a, lam)
            p2 = DS.pr2(a, lam)
            if section is not None:
                section.check(
                    _compose_or_none(C, S.pr1(sa, fam_a), p2) == C.identity(sa), (C.obj_names[a], lam), "pr1 o pr2 != 1"
                )
            if not typing.check(D.contains(sa, fam_a, p2), ("pr2", C.obj_names[a], lam), "pr2 not in dHom(Sigma, lam o pr1)"):
                continue
            for f in _arrows_into(C, a):
                b = C.dom(f)
                lf = F.restrict(lam, f)
                arr = S.sigma_arr(lam, f)
                # lam o (pr1 o Sigma_lam f) = (lam o f) o pr1^{b, lam f}
                chain_l = F.restrict(lam, C.compose(S.pr1(a, lam), arr))
                chain_r = F.restrict(lf, S.pr1(b, lf))
                if not typing.check(chain_l == chain_r, (lam, label(C, f)), "dHom(Sigma_b(lam f), ...) ill-defined"):
                    continue
                lhs = DS.pr2(b, lf)
                rhs = D.apply(fam_a, p2, arr)
                compat.check(lhs == rhs, (lam, label(C, f)), f"pr2^(b, lam f) = {lhs!r} != pr2(Sigma_lam f) = {rhs!r}")
    return make_report(suite, tallies)


# ---------------------------------------------------------------------------
# constructions


def trivial_pr2(S: SigmaStruct) -> DepSigmaStruct:
    return DepSigmaStruct(S, trivial_dep(S.fam), lambda a, lam: "*", name="trivial")


def product_pr2(C) -> DepSigmaStruct:
    """Over the product Sigma and the constant dependent arrows: ``pr2^{a, b} = pr_b``."""
    S = product_sigma(C)
    return DepSigmaStruct(S, constant_dep(C, S.fam), lambda a, b: S.product(a, b).pr_b, name="product")


def canonical_pr2(S: SigmaStruct) -> DepSigmaStruct:
    """``pr2(a, lam)`` = mediator of the ``(lam, pr1)`` square at the cone ``(1, 1)``."""
    C = S.base
    D = global_sections_dep(S)

    def pr2(a, lam):
        p = S.pr1(a, lam)
        one = C.identity(S.sigma_obj(a, lam))
        return S.square(lam, p).mediator(one, one)

    return DepSigmaStruct(S, D, pr2, name=f"canonical({S.name})")


def pr2_prime_check(
    C, a, b, j: Callable | None = None, suite: str = "expr22", pr2_override=None
) -> LawReport:
    """Canonical ``pr2'`` of the product Sigma at ``(a, b)`` against ``<1_{a x b}, pr_b>``.

    ``<1_{a x b}, pr_b>`` is ``e(pr_b)`` for the pair ``(a x b, b)``; the
    second check is ``j(pr2') = pr_b``.  ``j`` and the computed ``pr2'`` may be
    replaced for mutation.
    """
    S = product_sigma(C)
    DS = canonical_pr2(S)
    w = require_product(C, a, b)
    p2 = DS.pr2(a, b) if pr2_override is None else pr2_override
    eq = LawTally(suite, "expr22.pr2")
    jt = LawTally(suite, "expr22.j")
    expected = S.product(w.apex, b).pairing(C.identity(w.apex), w.pr_b)
    eq.check(p2 == expected, (label(C, p2), label(C, expected)), "pr2' != <1, pr_b>")
    bij = dep_object_bijection(C, w.apex, b, j=j)
    jt.check(bij.j.get(p2) == w.pr_b, (label(C, p2),), "j(pr2') != pr_b")
    return make_report(suite, [eq, jt])


# ---------------------------------------------------------------------------
# global elements of Sigma-objects


@dataclass
class ElementAnalysis:
    a: object
    lam: object
    z: object
    i: object
    u: object
    pr0: bool
    pr1: bool
    pr2: bool
    values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.pr0 and self.pr1 and self.pr2


def analyze_element(DS: DepSigmaStruct, a, lam, z) -> ElementAnalysis:
    """Split ``z: 1 -> Sigma_a lam`` into ``i = pr1 o z`` and ``u: 1 -> Sigma_1 lam(i)``."""
    C, S, F = DS.base, DS.sigma, DS.fam
    t = require_terminal(C)
    one = t.obj
    i = C.compose(S.pr1(a, lam), z)
    li = F.restrict(lam, i)
    try:
        u = S.square(lam, i).mediator(C.identity(one), z)
    except DepcatError:
        # no element over i reaches z: (pr1) fails and the rest is undefined
        return ElementAnalysis(a, lam, z, i, None, False, False, False, {})
    s1 = S.sigma_obj(one, li)
    pr0 = C.compose(t.bang[s1], u) == C.identity(one)
    pr1 = z == C.compose(S.sigma_arr(lam, i), u)
    left = DS.apply_pr2(a, lam, z)
    right = DS.apply_pr2(one, li, u)
    return ElementAnalysis(a, lam, z, i, u, pr0, pr1, left == right, {"pr2_z": left, "pr2_u": right})


@dataclass
class EqualityVerdict:
    equal: bool  # z == w as arrows
    criterion: bool  # pr1 z == pr1 w and u' == lam_ij o u
    pr3: bool
    pr4: bool
    failed_step: str = ""


def _pr4_chain(DS: DepSigmaStruct, a, lam, ez: ElementAnalysis, ew: ElementAnalysis, lam_ij) -> str:
    """Re-derive ``pr2(z) = pr2(w)`` step by step; returns the first failing step or ''."""
    C, S, F, D = DS.base, DS.sigma, DS.fam, DS.dep
    one = require_terminal(C).obj
    i, j, u, u2 = ez.i, ew.i, ez.u, ew.u
    li, lj = F.restrict(lam, i), F.restrict(lam, j)
    fam_a, fam_i, fam_j = DS.pr2_family(a, lam), DS.pr2_family(one, li), DS.pr2_family(one, lj)
    p2a, p2i, p2j = DS.pr2(a, lam), DS.pr2(one, li), DS.pr2(one, lj)
    si, sj = S.sigma_arr(lam, i), S.sigma_arr(lam, j)
    steps = []
    # pr2(z) = pr2^{1, lam i}(u) and pr2(w) = pr2^{1, lam j}(u')
    steps.append(("s1", ez.values["pr2_z"] == ez.values["pr2_u"]))
    steps.append(("s2", ew.values["pr2_z"] == ew.values["pr2_u"]))
    steps.append(("s3", u2 == C.compose(lam_ij, u)))
    # dep2: pr2^{1, lam j}(lam_ij o u) = [pr2^{1, lam j}(lam_ij)](u)
    inner = D.apply(fam_j, p2j, lam_ij)
    steps.append(
        ("s4", D.apply(fam_j, p2j, C.compose(lam_ij, u)) == D.apply(F.restrict(fam_j, lam_ij), inner, u))
    )
    # the compatibility law at global elements
    steps.append(("s5", D.apply(fam_a, p2a, si) == p2i))
    steps.append(("s6", D.apply(fam_a, p2a, sj) == p2j))
    steps.append(("s7", C.compose(sj, lam_ij) == si))
    # dep2 again: [pr2(Sigma_lam j)](lam_ij) = pr2(Sigma_lam j o lam_ij)
    via = D.apply(F.restrict(fam_a, sj), D.apply(fam_a, p2a, sj), lam_ij)
    steps.append(("s8", via == D.apply(fam_a, p2a, C.compose(sj, lam_ij))))
    # hence pr2^{1, lam j}(lam_ij) = pr2^{1, lam i}, and pr2(w) = pr2^{1, lam i}(u) = pr2(z)
    steps.append(("s9", inner == p2i and F.restrict(fam_j, lam_ij) == fam_i))
    steps.append(("conclusion", ez.values["pr2_z"] == ew.values["pr2_z"]))
    for name, ok in steps:
        if not ok:
            return name
    return ""


def _compose_or_none(C, g, f):
    try:
        return C.compose(g, f)
    except DepcatError:
        return None


def element_equality(DS: DepSigmaStruct, a, lam, z, w) -> EqualityVerdict:
    C, S = DS.base, DS.sigma
    ez, ew = analyze_element(DS, a, lam, z), analyze_element(DS, a, lam, w)
    equal = z == w
    if ez.u is None or ew.u is None:
        return EqualityVerdict(equal, False, not equal, not equal, "analysis")
    if ez.i != ew.i:
        criterion = False
        lam_ij = None
    else:
        lam_ij = transport(S, lam, ez.i, ew.i).lam_ij
        criterion = lam_ij is not None and ew.u == _compose_or_none(C, lam_ij, ez.u)
    pr4, failed = True, ""
    if equal:
        try:
            failed = _pr4_chain(DS, a, lam, ez, ew, lam_ij)
        except DepcatError as exc:
            failed = f"chain breaks: {exc}"
        pr4 = not failed
    return EqualityVerdict(equal, criterion, equal == criterion, pr4, failed)


def check_elements(DS: DepSigmaStruct, suite: str = "elsigma") -> LawReport:
    """(pr0)-(pr2) for every global element of every Sigma-object; (pr3), (pr4) over all pairs."""
    C, S, F = DS.base, DS.sigma, DS.fam
    t = {law: LawTally(suite, f"elsigma.{law}") for law in ("pr0", "pr1", "pr2", "pr3", "pr4")}
    for a in C.objects:
        for lam in F.fam(a):
            zs = global_elements(C, S.sigma_obj(a, lam))
            for z in zs:
                ea = analyze_element(DS, a, lam, z)
                w = (C.obj_names[a], lam, label(C, z))
                t["pr0"].check(ea.pr0, w, "! o u != 1")
                t["pr1"].check(ea.pr1, w, "z != Sigma_lam i o u")
                t["pr2"].check(ea.pr2, w, "pr2(z) != pr2^(1, lam i)(u)")
            for z in zs:
                for z2 in zs:
                    v = element_equality(DS, a, lam, z, z2)
                    w = (C.obj_names[a], lam, label(C, z), label(C, z2))
                    t["pr3"].check(v.pr3, w, f"z == w is {v.equal} but criterion is {v.criterion}")
                    if v.equal:
                        t["pr4"].check(v.pr4, w, f"proof step {v.failed_step} fails")
    return make_report(suite, list(t.values()))
