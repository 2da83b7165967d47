"""Family-arrow structures on finite categories.

A :class:`FamStruct` assigns to every object ``a`` a finite set ``fHom(a)``
of family-arrows and to every ``lam in fHom(a)``, ``f: b -> a`` the
restriction ``lam o f in fHom(b)``.  Family-arrows are arbitrary hashable,
totally ordered values (ints, tuples).
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    BudgetExceeded,
    MissingPullback,
    NoSubobjectClassifier,
    TypeMismatch,
    UnknownObject,
)
from .fincat import FinCat, PullbackWitness, pullback_of
from .report import LawReport, LawTally, make_report

DEFAULT_BUDGET = 2


def default_budget() -> int:
    """Enumeration bound for intensional families (``DEPCAT_BUDGET`` overrides)."""
    raw = os.environ.get("DEPCAT_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise BudgetExceeded(f"DEPCAT_BUDGET must be an integer, got {raw!r}") from None


def label(C, f):
    """Human-readable arrow name for witnesses."""
    return C.describe_arrow(f)


class FamStruct:
    """Family-arrow sets plus a restriction action.

    ``fam_sets`` is either a mapping ``object -> sequence`` (extensional) or
    a callable ``object -> sequence`` (intensional, typically bounded by an
    enumeration budget).  ``restrict`` is a callable ``(lam, f) -> lam'``.
    ``overrides`` replaces individual restriction results and is how
    mutation tests break a single entry.
    """

    def __init__(
        self,
        base,
        fam_sets,
        restrict: Callable,
        *,
        name: str = "fam",
        overrides: Mapping | None = None,
        intensional: bool | None = None,
    ):
        self.base = base
        self.name = name
        self._fam_sets = fam_sets
        self._restrict = restrict
        self.overrides = dict(overrides or {})
        self.intensional = (not isinstance(fam_sets, Mapping)) if intensional is None else intensional
        self._cache: dict = {}
        self._members: dict = {}

    def fam(self, a) -> tuple:
        """``fHom(a)`` in canonical (sorted) order."""
        if a not in self._cache:
            if a not in self.base.objects:
                raise UnknownObject(a)
            src = self._fam_sets
            items = src[a] if isinstance(src, Mapping) else src(a)
            self._cache[a] = tuple(sorted(items))
        return self._cache[a]

    def contains(self, a, lam) -> bool:
        if a not in self._members:
            self._members[a] = frozenset(self.fam(a))
        return lam in self._members[a]

    def restrict(self, lam, f):
        """``lam o f``."""
        C = self.base
        a = C.cod(f)
        if not self.contains(a, lam):
            raise TypeMismatch(f"{lam!r} is not a family-arrow on {C.obj_names[a]}")
        key = (lam, f)
        if key in self.overrides:
            return self.overrides[key]
        return self._restrict(lam, f)

    def mutated(self, lam, f, value) -> "FamStruct":
        """Copy with the single restriction ``lam o f`` replaced."""
        ov = dict(self.overrides)
        ov[(lam, f)] = value
        return FamStruct(
            self.base, self._fam_sets, self._restrict, name=self.name, overrides=ov, intensional=self.intensional
        )

    def restriction_table(self) -> dict:
        C = self.base
        return {
            (lam, f): self.restrict(lam, f)
            for f in _all_arrows(C)
            for lam in self.fam(C.cod(f))
        }

    def total_families(self) -> int:
        return sum(len(self.fam(a)) for a in self.base.objects)

    def __repr__(self):
        return f"FamStruct({self.name!r} over {self.base!r})"


def _all_arrows(C):
    if hasattr(C, "arrows"):
        return C.arrows
    return [f for a in C.objects for b in C.objects for f in C.hom(a, b)]


def restrict(F: FamStruct, lam, f):
    return F.restrict(lam, f)


def _arrows_into(C, a):
    for b in C.objects:
        for f in C.hom(b, a):
            yield f


def check_fam_laws(F: FamStruct, suite: str = "fam") -> LawReport:
    """(fam1) and (fam2) over every family-arrow and composable pair."""
    C = F.base
    typing = LawTally(suite, "fam.typing")
    fam1 = LawTally(suite, "fam1")
    fam2 = LawTally(suite, "fam2")
    into = {a: list(_arrows_into(C, a)) for a in C.objects}
    for a in C.objects:
        for lam in F.fam(a):
            fam1.check(F.restrict(lam, C.identity(a)) == lam, (lam, label(C, C.identity(a))), "lam o 1 != lam")
            for f in into[a]:
                b = C.dom(f)
                lf = F.restrict(lam, f)
                if not typing.check(F.contains(b, lf), (lam, label(C, f)), f"lam o f = {lf!r} not in fHom(dom f)"):
                    continue
                for g in into[b]:
                    lhs = F.restrict(lam, C.compose(f, g))
                    rhs = F.restrict(lf, g)
                    fam2.check(lhs == rhs, (lam, label(C, f), label(C, g)), f"{lhs!r} != {rhs!r}")
    return make_report(suite, [typing, fam1, fam2])


# ---------------------------------------------------------------------------
# constructions


def constant_fam(C) -> FamStruct:
    """``fHom(a) = objects``; ``b o f = b``."""
    objs = tuple(C.objects)
    return FamStruct(C, {a: objs for a in C.objects}, lambda lam, f: lam, name="constant")


def coslice_fam(C) -> FamStruct:
    """``fHom(a)`` = arrows out of ``a``; restriction is composition."""
    sets = {a: tuple(f for b in C.objects for f in C.hom(a, b)) for a in C.objects}
    return FamStruct(C, sets, lambda lam, f: C.compose(lam, f), name="coslice")


def finset_fam(C, cap: int, min_fiber: int = 0) -> FamStruct:
    """Families over the FinSet skeleton: fibre-size tuples with entries in ``min_fiber..cap``."""
    sets = {a: tuple(itertools.product(range(min_fiber, cap + 1), repeat=C.size(a))) for a in C.objects}

    def rest(lam, f):
        return tuple(lam[x] for x in C.table(f))

    F = FamStruct(C, sets, rest, name=f"finset(cap={cap})" if not min_fiber else f"finset({min_fiber}..{cap})")
    F.cap = cap
    return F


def topos_fam(C, budget: int | None = None) -> FamStruct:
    """Families ``(b, e)`` with ``e: a x b -> Omega`` on the set product.

    ``e`` is stored as a 0/1 tuple indexed by ``x * |b| + y``; ``Omega`` is
    the 2-element object with ``1`` the designated truth value.  Only
    ``b`` with ``|b| <= budget`` are enumerated.
    """
    if not hasattr(C, "sizes") or 2 not in C.sizes:
        raise NoSubobjectClassifier("topos families need a 2-element object Omega")
    if budget is None:
        budget = default_budget()
    if budget < 0:
        raise BudgetExceeded("topos families are unbounded; give a non-negative budget")
    omega = C.object_of_size(2)
    bs = [b for b in C.objects if C.size(b) <= budget]

    def fams(a):
        na = C.size(a)
        return [(b, e) for b in bs for e in itertools.product((0, 1), repeat=na * C.size(b))]

    def rest(lam, g):
        b, e = lam
        nb = C.size(b)
        return (b, tuple(e[gx * nb + y] for gx in C.table(g) for y in range(nb)))

    F = FamStruct(C, fams, rest, name=f"topos(budget={budget})")
    F.omega = omega
    F.budget = budget
    return F


def ring_fam(C) -> FamStruct:
    """On a ring category: ``fHom(*) = R x R``, ``(a, b) o c = (c + a, c + b)``."""
    R = C.ring
    pairs = tuple(itertools.product(R.elements, R.elements))

    def rest(lam, c):
        a, b = lam
        return (R.plus(c, a), R.plus(c, b))

    return FamStruct(C, {0: pairs}, rest, name="ring")


# ---------------------------------------------------------------------------
# presheaves and categories of elements


@dataclass
class Presheaf:
    """Contravariant set-valued functor: ``act(f, x)`` sends ``P(a)`` to ``P(b)`` for ``f: b -> a``."""

    base: object
    on_objects: Mapping
    act: Callable

    def at(self, a) -> tuple:
        return tuple(self.on_objects[a])


def fam_presheaf(F: FamStruct) -> Presheaf:
    if F.intensional and not hasattr(F, "budget"):
        raise BudgetExceeded("intensional family structure without an enumeration budget")
    return Presheaf(F.base, {a: F.fam(a) for a in F.base.objects}, lambda f, lam: F.restrict(lam, f))


def check_presheaf_laws(P: Presheaf, suite: str = "presheaf") -> LawReport:
    C = P.base
    pid = LawTally(suite, "presheaf.id")
    pcomp = LawTally(suite, "presheaf.comp")
    for a in C.objects:
        for x in P.at(a):
            pid.check(P.act(C.identity(a), x) == x, (C.obj_names[a], x), "P(1) != id")
            for g in _arrows_into(C, a):
                b = C.dom(g)
                gx = P.act(g, x)
                for f in _arrows_into(C, b):
                    lhs = P.act(C.compose(g, f), x)
                    rhs = P.act(f, gx)
                    pcomp.check(lhs == rhs, (x, label(C, g), label(C, f)), "P(g o f) != P(f) P(g)")
    return make_report(suite, [pid, pcomp])


class ElementsCategory(FinCat):
    """Category of elements; ``elements[i] = (a, x)``, ``arrow_data[k] = (f, x)``.

    Arrow ``(f, x)`` with ``f: b -> a`` goes from ``(b, P(f)(x))`` to ``(a, x)``.
    """

    def __init__(self, P: Presheaf):
        C = P.base
        elements = [(a, x) for a in C.objects for x in P.at(a)]
        eindex = {e: i for i, e in enumerate(elements)}
        arrow_data, arrows, aindex = [], [], {}
        for f in _all_arrows(C):
            a, b = C.cod(f), C.dom(f)
            for x in P.at(a):
                y = P.act(f, x)
                if (b, y) not in eindex:
                    raise TypeMismatch(f"P({label(C, f)})({x!r}) = {y!r} lies outside P({C.obj_names[b]})")
                aindex[(f, x)] = len(arrow_data)
                arrow_data.append((f, x))
                arrows.append((f"{label(C, f)}@{_fmt(x)}", eindex[(b, y)], eindex[(a, x)]))
        ident = [aindex[(C.identity(a), x)] for a, x in elements]
        by_cod = {}
        for k, (f, x) in enumerate(arrow_data):
            by_cod.setdefault(arrows[k][2], []).append(k)
        comp = np.full((len(arrows), len(arrows)), -1, dtype=np.int32)
        for kg, (g, x) in enumerate(arrow_data):
            src = arrows[kg][1]
            for kf in by_cod.get(src, ()):
                f = arrow_data[kf][0]
                comp[kg, kf] = aindex[(C.compose(g, f), x)]
        self.presheaf = P
        self.elements = tuple(elements)
        self.arrow_data = tuple(arrow_data)
        self._element_index = eindex
        super().__init__(
            [f"({C.obj_names[a]},{_fmt(x)})" for a, x in elements], arrows, ident, comp
        )

    def element_index(self, a, x) -> int:
        return self._element_index[(a, x)]


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(v) for v in x) + ")"
    return str(x)


def category_of_elements(C, P: Presheaf) -> ElementsCategory:
    if P.base is not C:
        raise TypeMismatch("presheaf is defined on a different category")
    return ElementsCategory(P)


# ---------------------------------------------------------------------------
# fam-functors and fam-natural transformations


@dataclass
class FamFunctor:
    source: FamStruct
    target: FamStruct
    on_objects: Callable
    on_arrows: Callable
    on_fams: Callable  # (a, lam) -> family-arrow on on_objects(a)


def identity_fam_functor(F: FamStruct) -> FamFunctor:
    return FamFunctor(F, F, lambda a: a, lambda f: f, lambda a, lam: lam)


def check_fam_functor(Phi: FamFunctor, suite: str = "famfunctor") -> LawReport:
    C, D = Phi.source.base, Phi.target.base
    typing = LawTally(suite, "functor.typing")
    fid = LawTally(suite, "functor.id")
    fcomp = LawTally(suite, "functor.comp")
    ffam = LawTally(suite, "famfunctor.fam")
    F0, F1, F2 = Phi.on_objects, Phi.on_arrows, Phi.on_fams
    for a in C.objects:
        fid.check(F1(C.identity(a)) == D.identity(F0(a)), (C.obj_names[a],), "F(1_a) != 1_Fa")
    for f in _all_arrows(C):
        typing.check(
            D.dom(F1(f)) == F0(C.dom(f)) and D.cod(F1(f)) == F0(C.cod(f)), (label(C, f),), "F(f) has wrong ends"
        )
    if typing.failed:
        return make_report(suite, [typing, fid, fcomp, ffam])
    for g in _all_arrows(C):
        for f in _arrows_into(C, C.dom(g)):
            fcomp.check(
                F1(C.compose(g, f)) == D.compose(F1(g), F1(f)), (label(C, g), label(C, f)), "F(g o f) != Fg o Ff"
            )
    for a in C.objects:
        for lam in Phi.source.fam(a):
            image = F2(a, lam)
            if not typing.check(Phi.target.contains(F0(a), image), (lam,), "F(lam) not a family on F(a)"):
                continue
            for f in _arrows_into(C, a):
                lhs = F2(C.dom(f), Phi.source.restrict(lam, f))
                rhs = Phi.target.restrict(image, F1(f))
                ffam.check(lhs == rhs, (lam, label(C, f)), f"{lhs!r} != {rhs!r}")
    return make_report(suite, [typing, fid, fcomp, ffam])


@dataclass
class FamNatTrans:
    source: FamFunctor
    target: FamFunctor
    components: Callable  # a -> arrow F0(a) -> G0(a) in the target base


def check_fam_nat_trans(eta: FamNatTrans, suite: str = "famnat") -> LawReport:
    F, G = eta.source, eta.target
    C, D = F.source.base, F.target.base
    typing = LawTally(suite, "nat.typing")
    nat = LawTally(suite, "nat.naturality")
    tri = LawTally(suite, "famnat.triangle")
    for a in C.objects:
        e = eta.components(a)
        typing.check(D.dom(e) == F.on_objects(a) and D.cod(e) == G.on_objects(a), (C.obj_names[a],), "eta_a mistyped")
    if typing.failed:
        return make_report(suite, [typing, nat, tri])
    for f in _all_arrows(C):
        b, a = C.dom(f), C.cod(f)
        lhs = D.compose(G.on_arrows(f), eta.components(b))
        rhs = D.compose(eta.components(a), F.on_arrows(f))
        nat.check(lhs == rhs, (label(C, f),), "G f o eta_b != eta_a o F f")
    for a in C.objects:
        for lam in F.source.fam(a):
            lhs = G.target.restrict(G.on_fams(a, lam), eta.components(a))
            tri.check(lhs == F.on_fams(a, lam), (C.obj_names[a], lam), "G(lam) o eta_a != F(lam)")
    return make_report(suite, [typing, nat, tri])


# ---------------------------------------------------------------------------
# cofamilies through the opposite category


@dataclass
class CofamStruct:
    """Cofamily-arrows on ``C``: ``coHom(b)`` with ``f o p in coHom(c)`` for ``f: b -> c``."""

    base: FinCat
    op_fam: FamStruct

    def cofam(self, b) -> tuple:
        return self.op_fam.fam(b)

    def act(self, f, p):
        # f: b -> c in C is c -> b in C^op, where it restricts families on b
        return self.op_fam.restrict(p, f)


def cofam_from_op(C: FinCat, F: FamStruct) -> CofamStruct:
    if F.base.obj_names != C.obj_names or len(F.base.arrow_names) != len(C.arrow_names):
        raise TypeMismatch("family structure is not on the opposite of this category")
    return CofamStruct(C, F)


def check_cofam_laws(K: CofamStruct, suite: str = "cofam") -> LawReport:
    """(cofam1) ``1_b o p = p``; (cofam2) ``(g o f) o p = g o (f o p)``; composition taken in ``C``."""
    C = K.base
    typing = LawTally(suite, "cofam.typing")
    c1 = LawTally(suite, "cofam1")
    c2 = LawTally(suite, "cofam2")
    out_of = {b: [f for c in C.objects for f in C.hom(b, c)] for b in C.objects}
    for b in C.objects:
        for p in K.cofam(b):
            c1.check(K.act(C.identity(b), p) == p, (p, label(C, C.identity(b))), "1 o p != p")
            for f in out_of[b]:
                c = C.cod(f)
                fp = K.act(f, p)
                if not typing.check(K.op_fam.contains(c, fp), (p, label(C, f)), "f o p not a cofamily on cod f"):
                    continue
                for g in out_of[c]:
                    lhs = K.act(C.compose(g, f), p)
                    rhs = K.act(g, fp)
                    c2.check(lhs == rhs, (p, label(C, f), label(C, g)), f"{lhs!r} != {rhs!r}")
    return make_report(suite, [typing, c1, c2])


# ---------------------------------------------------------------------------
# weak families in the slice


def canonical_chooser(C) -> Callable:
    def choose(f, g):
        w = pullback_of(C, f, g)
        if w is None:
            raise MissingPullback(f"no pullback of cospan ({label(C, f)}, {label(C, g)})")
        return w

    return choose


def is_iso(C, h) -> bool:
    return any(
        C.compose(h, k) == C.identity(C.cod(h)) and C.compose(k, h) == C.identity(C.dom(h))
        for k in C.hom(C.cod(h), C.dom(h))
    )


def automorphisms(C, x) -> list:
    return [h for h in C.hom(x, x) if is_iso(C, h)]


def twisted_chooser(C) -> Callable:
    """Canonical pullback with both legs precomposed by the least non-identity automorphism of the apex."""
    base = canonical_chooser(C)

    def choose(f, g):
        w = base(f, g)
        autos = [s for s in automorphisms(C, w.apex) if s != C.identity(w.apex)]
        if not autos:
            return w
        s = autos[0]
        return PullbackWitness(C, f, g, w.apex, C.compose(w.leg_left, s), C.compose(w.leg_right, s))

    return choose


class WeakFamStruct:
    """``wfHom(a)`` = arrows into ``a``; ``lam o f`` = chosen pullback leg over ``dom f``."""

    def __init__(self, base, chooser: Callable, name: str = "slice"):
        self.base = base
        self.name = name
        C = base
        self.witnesses: dict = {}
        for a in C.objects:
            into = list(_arrows_into(C, a))
            for lam in into:
                for f in into:
                    self.witnesses[(lam, f)] = chooser(lam, f)

    def fam(self, a) -> tuple:
        return tuple(_arrows_into(self.base, a))

    def restrict(self, lam, f):
        try:
            return self.witnesses[(lam, f)].leg_right
        except KeyError:
            raise TypeMismatch(f"{lam!r} is not a family-arrow on cod of {f!r}") from None

    def as_fam(self) -> FamStruct:
        """The same data read as a strict family structure."""
        C = self.base
        return FamStruct(C, {a: self.fam(a) for a in C.objects}, self.restrict, name=f"strict({self.name})")


def slice_wfam(C, chooser: Callable | None = None) -> WeakFamStruct:
    return WeakFamStruct(C, chooser or canonical_chooser(C))


def slice_iso(C, u, v):
    """Least iso ``h: dom u -> dom v`` with ``v o h == u`` (same codomain), or None."""
    if C.cod(u) != C.cod(v):
        return None
    for h in C.hom(C.dom(u), C.dom(v)):
        if C.compose(v, h) == u and is_iso(C, h):
            return h
    return None


def check_weak_fam_laws(W: WeakFamStruct, suite: str = "weak") -> LawReport:
    """Weak (fam1), (fam2): both sides isomorphic in the slice over the domain."""
    C = W.base
    w1 = LawTally(suite, "weak.fam1")
    w2 = LawTally(suite, "weak.fam2")
    for a in C.objects:
        into_a = list(_arrows_into(C, a))
        for lam in W.fam(a):
            w1.check(
                slice_iso(C, W.restrict(lam, C.identity(a)), lam) is not None,
                (label(C, lam),),
                "lam o 1 not isomorphic to lam over a",
            )
            for f in into_a:
                lf = W.restrict(lam, f)
                for g in _arrows_into(C, C.dom(f)):
                    lhs = W.restrict(lam, C.compose(f, g))
                    rhs = W.restrict(lf, g)
                    w2.check(
                        slice_iso(C, lhs, rhs) is not None,
                        (label(C, lam), label(C, f), label(C, g)),
                        "lam o (f g) not isomorphic to (lam o f) o g",
                    )
    return make_report(suite, [w1, w2])
