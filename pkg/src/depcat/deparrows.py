"""Dependent-arrow structures.

``dHom(a, lam)`` is a finite set for every family-arrow ``lam`` on ``a``;
application sends ``phi in dHom(a, lam)`` and ``f: b -> a`` to
``phi(f) in dHom(b, lam o f)``.  Because dependent-arrow ids need not
mention their family, application takes the family explicitly:
``D.apply(lam, phi, f)``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Callable

from .errors import TypeMismatch
from .famcat import ElementsCategory, FamStruct, Presheaf, _arrows_into, category_of_elements, fam_presheaf, label
from .fincat import require_product
from .report import LawReport, LawTally, make_report
from .sigmacat import SigmaStruct


class DepStruct:
    def __init__(
        self,
        fam: FamStruct,
        dep_sets: Callable | Mapping,
        apply: Callable,
        *,
        name: str = "dep",
        overrides: Mapping | None = None,
    ):
        self.fam = fam
        self.base = fam.base
        self.name = name
        self._sets = dep_sets
        self._apply = apply
        self.overrides = dict(overrides or {})
        self._cache: dict = {}
        self._members: dict = {}

    def dhom(self, a, lam) -> tuple:
        key = (a, lam)
        if key not in self._cache:
            if not self.fam.contains(a, lam):
                raise TypeMismatch(f"{lam!r} is not a family-arrow on {self.base.obj_names[a]}")
            src = self._sets
            items = src[key] if isinstance(src, Mapping) else src(a, lam)
            self._cache[key] = tuple(sorted(items))
        return self._cache[key]

    def contains(self, a, lam, phi) -> bool:
        key = (a, lam)
        if key not in self._members:
            self._members[key] = frozenset(self.dhom(a, lam))
        return phi in self._members[key]

    def apply(self, lam, phi, f):
        """``phi(f)`` for ``phi in dHom(cod f, lam)``."""
        a = self.base.cod(f)
        if not self.contains(a, lam, phi):
            raise TypeMismatch(f"{phi!r} is not a dependent arrow over ({self.base.obj_names[a]}, {lam!r})")
        key = (lam, phi, f)
        if key in self.overrides:
            return self.overrides[key]
        return self._apply(lam, phi, f)

    def mutated(self, lam, phi, f, value) -> "DepStruct":
        ov = dict(self.overrides)
        ov[(lam, phi, f)] = value
        D = DepStruct(self.fam, self._sets, self._apply, name=self.name, overrides=ov)
        D._cache = self._cache
        D._members = self._members
        return D

    def __repr__(self):
        return f"DepStruct({self.name!r} over {self.fam!r})"


def apply(D: DepStruct, lam, phi, f):
    return D.apply(lam, phi, f)


def check_dep_laws(D: DepStruct, suite: str = "dep") -> LawReport:
    """Typing, (dep1) and (dep2) for every dependent arrow and composable pair."""
    C, F = D.base, D.fam
    typing = LawTally(suite, "dep.typing")
    dep1 = LawTally(suite, "dep1")
    dep2 = LawTally(suite, "dep2")
    into = {a: list(_arrows_into(C, a)) for a in C.objects}
    for a in C.objects:
        for lam in F.fam(a):
            for phi in D.dhom(a, lam):
                ida = C.identity(a)
                dep1.check(D.apply(lam, phi, ida) == phi, (lam, phi, label(C, ida)), "phi(1) != phi")
                for f in into[a]:
                    b = C.dom(f)
                    lf = F.restrict(lam, f)
                    pf = D.apply(lam, phi, f)
                    if not typing.check(
                        D.contains(b, lf, pf), (lam, phi, label(C, f)), f"phi(f) = {pf!r} not in dHom(b, lam o f)"
                    ):
                        continue
                    for g in into[b]:
                        lhs = D.apply(lam, phi, C.compose(f, g))
                        rhs = D.apply(lf, pf, g)
                        dep2.check(lhs == rhs, (lam, phi, label(C, f), label(C, g)), f"{lhs!r} != {rhs!r}")
    return make_report(suite, [typing, dep1, dep2])


# ---------------------------------------------------------------------------
# constructions


def trivial_dep(F: FamStruct) -> DepStruct:
    return DepStruct(F, lambda a, lam: ("*",), lambda lam, phi, f: "*", name="trivial")


def constant_dep(C, F: FamStruct | None = None) -> DepStruct:
    """Over the constant family: ``dHom(a, b) = Hom(a, b)``, ``f(g) = f o g``."""
    from .famcat import constant_fam

    F = F or constant_fam(C)
    return DepStruct(F, lambda a, b: C.hom(a, b), lambda b, phi, g: C.compose(phi, g), name="constant")


def finset_dep(F: FamStruct) -> DepStruct:
    """Choice functions ``x`` with ``x_i < lam(i)``; ``(x o f)_j = x_{f(j)}``."""
    C = F.base
    return DepStruct(
        F,
        lambda a, lam: itertools.product(*(range(n) for n in lam)),
        lambda lam, x, f: tuple(x[v] for v in C.table(f)),
        name="finset",
    )


def global_sections_dep(S: SigmaStruct) -> DepStruct:
    """Sections of ``pr1``; ``phi(f)`` is the mediator of the ``(lam, f)`` square at ``(1_b, phi o f)``."""
    C = S.base

    def sections(a, lam):
        p = S.pr1(a, lam)
        ida = C.identity(a)
        return [phi for phi in C.hom(a, S.sigma_obj(a, lam)) if C.compose(p, phi) == ida]

    def app(lam, phi, f):
        b = C.dom(f)
        return S.square(lam, f).mediator(C.identity(b), C.compose(phi, f))

    D = DepStruct(S.fam, sections, app, name=f"sections({S.name})")
    D.sigma = S
    return D


def check_sections(D: DepStruct, suite: str = "sections") -> LawReport:
    """For a global-sections structure: section property and the two mediator equations."""
    S = D.sigma
    C, F = D.base, D.fam
    sec = LawTally(suite, "sections.section")
    eq1 = LawTally(suite, "sections.eq1")
    eq2 = LawTally(suite, "sections.eq2")
    for a in C.objects:
        for lam in F.fam(a):
            for phi in D.dhom(a, lam):
                sec.check(
                    C.compose(S.pr1(a, lam), phi) == C.identity(a), (lam, label(C, phi)), "pr1 o phi != 1"
                )
                for f in _arrows_into(C, a):
                    b = C.dom(f)
                    pf = D.apply(lam, phi, f)
                    w = (lam, label(C, phi), label(C, f))
                    eq1.check(
                        C.compose(phi, f) == C.compose(S.sigma_arr(lam, f), pf), w, "phi o f != Sigma_lam f o phi(f)"
                    )
                    eq2.check(
                        C.compose(S.pr1(b, F.restrict(lam, f)), pf) == C.identity(b), w, "pr1 o phi(f) != 1"
                    )
    return make_report(suite, [sec, eq1, eq2])


# ---------------------------------------------------------------------------
# dependent objects of a product


@dataclass
class Bijection:
    hom: tuple
    sections: tuple
    e: dict
    j: dict
    report: LawReport


def dep_object_bijection(C, a, b, j: Callable | None = None, suite: str = "exdo2") -> Bijection:
    """``e(f) = <1_a, f>`` and ``j(phi) = pr_b o phi`` between ``Hom(a, b)`` and sections of ``pr_a``.

    ``j`` may be replaced to exercise the round-trip check.
    """
    w = require_product(C, a, b)
    ida = C.identity(a)
    hom_ab = tuple(C.hom(a, b))
    sections = tuple(phi for phi in C.hom(a, w.apex) if C.compose(w.pr_a, phi) == ida)
    j = j or (lambda phi: C.compose(w.pr_b, phi))
    e_map = {f: w.pairing(ida, f) for f in hom_ab}
    j_map = {phi: j(phi) for phi in sections}
    tally = LawTally(suite, "exdo2.bij")
    section_set = set(sections)
    for f in hom_ab:
        ef = e_map[f]
        tally.check(ef in section_set and j_map.get(ef) == f, (label(C, f),), "j(e(f)) != f")
    for phi in sections:
        jp = j_map[phi]
        tally.check(jp in e_map and e_map[jp] == phi, (label(C, phi),), "e(j(phi)) != phi")
    return Bijection(hom_ab, sections, e_map, j_map, make_report(suite, [tally]))


# ---------------------------------------------------------------------------
# presheaf of dependent arrows


def dep_presheaf(D: DepStruct) -> tuple[ElementsCategory, Presheaf]:
    """``dHom`` as a presheaf on the category of elements of ``fHom``."""
    E = category_of_elements(D.base, fam_presheaf(D.fam))
    on_objects = {k: D.dhom(a, lam) for k, (a, lam) in enumerate(E.elements)}

    def act(k, phi):
        f, lam = E.arrow_data[k]
        return D.apply(lam, phi, f)

    return E, Presheaf(E, on_objects, act)


def category_of_dep_arrows(D: DepStruct) -> ElementsCategory:
    E, P = dep_presheaf(D)
    return category_of_elements(E, P)


# ---------------------------------------------------------------------------
# counting oracles on the FinSet instance


def check_counts(
    C, F: FamStruct | None = None, D: DepStruct | None = None, suite: str = "counts", size: Callable | None = None
) -> LawReport:
    """``|hom(m, k)| = k^m`` and ``|dHom(I, lam)| = prod lam(i)``, against brute enumeration.

    ``size`` defaults to ``C.size``; pass one explicitly for plain tables.
    """
    size = size or C.size
    tallies = []
    th = LawTally(suite, "count.hom")
    for m in C.objects:
        for k in C.objects:
            brute = sum(1 for _ in itertools.product(range(size(k)), repeat=size(m)))
            got = len(C.hom(m, k))
            th.check(got == brute == size(k) ** size(m), (C.obj_names[m], C.obj_names[k]), f"{got} != {brute}")
    tallies.append(th)
    if D is not None:
        td = LawTally(suite, "count.dhom")
        for a in C.objects:
            for lam in D.fam.fam(a):
                got = len(D.dhom(a, lam))
                brute = sum(1 for x in itertools.product(*(range(max(lam, default=0) + 1),) * len(lam))
                            if all(x[i] < lam[i] for i in range(len(lam))))
                td.check(got == brute == math.prod(lam), (C.obj_names[a], lam), f"{got} != {brute}")
        tallies.append(td)
    return make_report(suite, tallies)


def check_section_counts(C, pairs, suite: str = "counts", exclude=frozenset()) -> LawReport:
    """``|sections of pr_a: a x b -> a| = |b|^|a|``; arrows in ``exclude`` are skipped."""
    t = LawTally(suite, "count.sections")
    for a, b in pairs:
        w = require_product(C, a, b)
        got = sum(
            1 for phi in C.hom(a, w.apex) if phi not in exclude and C.compose(w.pr_a, phi) == C.identity(a)
        )
        want = C.size(b) ** C.size(a)
        t.check(got == want, (C.obj_names[a], C.obj_names[b]), f"{got} != {want}")
    return make_report(suite, [t])
