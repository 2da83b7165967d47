"""Finite categories as explicit data.

Objects and arrows of a :class:`FinCat` are dense ints (``0..n-1``) with
display names; composition is a dense table ``comp[g, f] = g o f`` holding
-1 off the composable pairs.  Limits (terminal object, binary products,
pullbacks) are found by candidate search and verified against their
universal property by exhaustive cone enumeration.

:class:`FinSetCategory` is a lazily enumerated full subcategory of finite
sets, for products whose apex is too large to tabulate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import (
    IllTypedSquare,
    MissingProduct,
    NoTerminalObject,
    NonCommutingCone,
    NotACospan,
    NotComposable,
    PullbackMediatorMissing,
    UnknownArrow,
    UnknownObject,
)
from .report import LawReport, LawTally, make_report


class FinCat:
    """A finite category given by a total composition table."""

    def __init__(self, objects, arrows, identities, composition):
        self.obj_names = tuple(str(o) for o in objects)
        self.arrow_names = tuple(str(a[0]) for a in arrows)
        n = len(self.arrow_names)
        self._dom = np.array([a[1] for a in arrows], dtype=np.int32).reshape(n)
        self._cod = np.array([a[2] for a in arrows], dtype=np.int32).reshape(n)
        self._ident = np.array(list(identities), dtype=np.int32).reshape(len(self.obj_names))
        if isinstance(composition, np.ndarray):
            comp = np.array(composition, dtype=np.int32, copy=True)
        else:
            comp = np.full((n, n), -1, dtype=np.int32)
            items = composition.items() if hasattr(composition, "items") else (
                ((g, f), h) for g, f, h in composition
            )
            for (g, f), h in items:
                comp[g, f] = h
        comp.setflags(write=False)
        self._comp = comp
        self._hom = None
        self._hom_arr = {}
        self._terminal = False  # not computed yet
        self._obj_index = None
        self._arrow_index = None

    # -- basic data -------------------------------------------------------
    @property
    def objects(self) -> range:
        return range(len(self.obj_names))

    @property
    def arrows(self) -> range:
        return range(len(self.arrow_names))

    @property
    def comp_table(self) -> np.ndarray:
        return self._comp

    def _arrow(self, f) -> int:
        try:
            f = int(f)
        except (TypeError, ValueError):
            raise UnknownArrow(f) from None
        if not 0 <= f < len(self.arrow_names):
            raise UnknownArrow(f)
        return f

    def _object(self, a) -> int:
        try:
            a = int(a)
        except (TypeError, ValueError):
            raise UnknownObject(a) from None
        if not 0 <= a < len(self.obj_names):
            raise UnknownObject(a)
        return a

    def dom(self, f) -> int:
        return int(self._dom[self._arrow(f)])

    def cod(self, f) -> int:
        return int(self._cod[self._arrow(f)])

    def identity(self, a) -> int:
        return int(self._ident[self._object(a)])

    def compose(self, g, f) -> int:
        """``g o f``; requires ``cod(f) == dom(g)``."""
        g, f = self._arrow(g), self._arrow(f)
        if self._cod[f] != self._dom[g]:
            raise NotComposable(
                f"cannot compose {self.arrow_names[g]} after {self.arrow_names[f]}: "
                f"cod {self.obj_names[self._cod[f]]} != dom {self.obj_names[self._dom[g]]}"
            )
        h = int(self._comp[g, f])
        if h < 0:
            raise NotComposable(f"no table entry for {self.arrow_names[g]} o {self.arrow_names[f]}")
        return h

    def compose_chain(self, *arrows) -> int:
        """``arrows[0] o arrows[1] o ... o arrows[-1]``."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.compose(g, out)
        return out

    def _build_hom(self):
        hom = {(a, b): [] for a in self.objects for b in self.objects}
        for f in self.arrows:
            hom[(int(self._dom[f]), int(self._cod[f]))].append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}

    def hom(self, a, b) -> tuple:
        """Arrows ``a -> b`` in canonical order."""
        a, b = self._object(a), self._object(b)
        if self._hom is None:
            self._build_hom()
        return self._hom[(a, b)]

    def hom_count(self, a, b) -> int:
        return len(self.hom(a, b))

    def hom_array(self, a, b) -> np.ndarray:
        key = (a, b)
        arr = self._hom_arr.get(key)
        if arr is None:
            arr = np.array(self.hom(a, b), dtype=np.int64)
            self._hom_arr[key] = arr
        return arr

    def object_named(self, name) -> int:
        if self._obj_index is None:
            self._obj_index = {n: i for i, n in enumerate(self.obj_names)}
        try:
            return self._obj_index[str(name)]
        except KeyError:
            raise UnknownObject(name) from None

    def arrow_named(self, name) -> int:
        if self._arrow_index is None:
            self._arrow_index = {n: i for i, n in enumerate(self.arrow_names)}
        try:
            return self._arrow_index[str(name)]
        except KeyError:
            raise UnknownArrow(name) from None

    def describe_arrow(self, f) -> str:
        return self.arrow_names[f]

    def is_identity(self, f) -> bool:
        f = self._arrow(f)
        return int(self._ident[self._dom[f]]) == f

    # -- mutation (for law-checker tests) --------------------------------
    def with_composite(self, g, f, h) -> "FinCat":
        """Copy with the single table entry ``g o f`` replaced by ``h``."""
        comp = np.array(self._comp, copy=True)
        comp[g, f] = h
        return self._rebuild(comp)

    def _rebuild(self, comp) -> "FinCat":
        arrows = [(n, int(d), int(c)) for n, d, c in zip(self.arrow_names, self._dom, self._cod)]
        return FinCat(self.obj_names, arrows, self._ident.tolist(), comp)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.obj_names == other.obj_names
            and self.arrow_names == other.arrow_names
            and np.array_equal(self._dom, other._dom)
            and np.array_equal(self._cod, other._cod)
            and np.array_equal(self._ident, other._ident)
            and np.array_equal(self._comp, other._comp)
        )

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}({len(self.obj_names)} objects, {len(self.arrow_names)} arrows)"


class FinSetSkeleton(FinCat):
    """Full subcategory of FinSet on given sizes, tabulated.

    Object ``i`` is the set ``{0, ..., sizes[i]-1}``; every arrow carries its
    function table.  With ``injective=True`` only injections are kept.
    """

    def __init__(self, sizes: Sequence[int], injective: bool = False):
        sizes = tuple(sorted(set(int(s) for s in sizes)))
        self.sizes = sizes
        self.injective = injective
        tables = []
        arrows = []
        index = {}
        for m_i, m in enumerate(sizes):
            for k_i, k in enumerate(sizes):
                for t in itertools.product(range(k), repeat=m):
                    if injective and len(set(t)) != m:
                        continue
                    index[(m_i, k_i, t)] = len(tables)
                    tables.append(t)
                    arrows.append((f"{m}>{k}:" + ",".join(map(str, t)), m_i, k_i))
        ident = [index[(i, i, tuple(range(s)))] for i, s in enumerate(sizes)]
        n = len(tables)
        comp = np.full((n, n), -1, dtype=np.int32)
        by_dom = {}
        for f, (_, d, c) in enumerate(arrows):
            by_dom.setdefault(d, []).append(f)
        for f, (_, fd, fc) in enumerate(arrows):
            tf = tables[f]
            for g in by_dom.get(fc, ()):
                tg = tables[g]
                comp[g, f] = index[(fd, arrows[g][2], tuple(tg[x] for x in tf))]
        self.tables = tuple(tables)
        self._table_index = index
        super().__init__([str(s) for s in sizes], arrows, ident, comp)

    def size(self, a) -> int:
        return self.sizes[self._object(a)]

    def table(self, f) -> tuple:
        return self.tables[self._arrow(f)]

    def object_of_size(self, n) -> int:
        try:
            return self.sizes.index(n)
        except ValueError:
            raise UnknownObject(f"no object of size {n}") from None

    def arrow_of(self, dom, cod, table) -> int:
        try:
            return self._table_index[(dom, cod, tuple(table))]
        except KeyError:
            raise UnknownArrow(f"no arrow {dom}->{cod} with table {tuple(table)}") from None

    def _rebuild(self, comp) -> FinCat:
        # a mutated table is no longer FinSet; drop the function tables
        return FinCat._rebuild(self, comp)


def finset_skeleton(max_size: int) -> FinSetSkeleton:
    """Finite sets ``0..max_size`` and all functions between them."""
    return FinSetSkeleton(range(max_size + 1))


def finset_injections(max_size: int) -> FinSetSkeleton:
    """Finite sets ``0..max_size`` and all injections between them."""
    return FinSetSkeleton(range(max_size + 1), injective=True)


# ---------------------------------------------------------------------------
# law checking


def check_category_laws(C: FinCat, suite: str = "cat") -> LawReport:
    """Typing, unit and associativity, each with its first counterexample."""
    typing = LawTally(suite, "cat.typing")
    unit = LawTally(suite, "cat.unit")
    assoc = LawTally(suite, "cat.assoc")
    names = C.arrow_names
    dom, cod, ident, comp = C._dom, C._cod, C._ident, C._comp
    n = len(names)

    bad_id = [a for a in C.objects if not (0 <= ident[a] < n) or dom[ident[a]] != a or cod[ident[a]] != a]
    if bad_id:
        typing.fail(("identity", C.obj_names[bad_id[0]]), "identity not an endo-arrow")
    else:
        typing.checked += len(C.objects)
    if n:
        composable = cod[None, :] == dom[:, None]  # [g, f]
        defined = comp >= 0
        safe = np.where(defined, comp, 0)
        well_typed = defined & (dom[safe] == dom[None, :]) & (cod[safe] == cod[:, None])
        bad = np.argwhere(composable != defined)
        bad_type = np.argwhere(defined & ~well_typed)
        typing.checked += n * n
        first = sorted([tuple(x) for x in bad[:1]] + [tuple(x) for x in bad_type[:1]])
        if first:
            g, f = map(int, first[0])
            detail = (
                "composite defined on a non-composable pair"
                if defined[g, f] and not composable[g, f]
                else "missing composite"
                if not defined[g, f]
                else "composite has wrong dom/cod"
            )
            typing.fail((names[g], names[f]), detail)
    if typing.failed:
        return make_report(suite, [typing, unit, assoc])

    for f in C.arrows:
        left = comp[ident[cod[f]], f]
        right = comp[f, ident[dom[f]]]
        if left != f:
            unit.fail((names[ident[cod[f]]], names[f]), "id o f != f")
        else:
            unit.ok()
        if right != f:
            unit.fail((names[f], names[ident[dom[f]]]), "f o id != f")
        else:
            unit.ok()

    defect = kernels.assoc_defect(comp)
    indeg = np.bincount(cod, minlength=len(C.obj_names))
    outdeg = np.bincount(dom, minlength=len(C.obj_names))
    triples = int(sum(int(indeg[dom[g]]) * int(outdeg[cod[g]]) for g in C.arrows))
    if defect is None:
        assoc.checked = triples
    else:
        h, g, f = defect
        assoc.checked = triples
        assoc.fail((names[h], names[g], names[f]), "h o (g o f) != (h o g) o f")
        assoc.checked = triples
    return make_report(suite, [typing, unit, assoc])


# ---------------------------------------------------------------------------
# monos, terminal object, global elements


def hom(C, a, b) -> tuple:
    return C.hom(a, b)


def mono_witness(C: FinCat, f):
    """First pair ``(g, h)`` of distinct parallel arrows with ``f g == f h``."""
    d0 = C.dom(f)
    for d in C.objects:
        pair = kernels.mono_defect(C.comp_table, C.hom_array(d, d0), int(f))
        if pair is not None:
            return pair
    return None


def is_mono(C: FinCat, f) -> bool:
    return mono_witness(C, f) is None


class Terminal(NamedTuple):
    obj: int
    bang: dict


def terminal(C) -> Terminal | None:
    """Least object with exactly one arrow from every object, or None."""
    cached = getattr(C, "_terminal", False)
    if cached is not False:
        return cached
    found = None
    for t in C.objects:
        if all(C.hom_count(a, t) == 1 for a in C.objects):
            found = Terminal(t, {a: C.hom(a, t)[0] for a in C.objects})
            break
    C._terminal = found
    return found


def require_terminal(C) -> Terminal:
    t = terminal(C)
    if t is None:
        raise NoTerminalObject("category has no terminal object")
    return t


def global_elements(C, a) -> tuple:
    """All arrows ``1 -> a``."""
    return C.hom(require_terminal(C).obj, a)


# ---------------------------------------------------------------------------
# products and pullbacks


def _find_unique(C, d, apex, legs, targets, what):
    found = [m for m in C.hom(d, apex) if all(C.compose(l, m) == t for l, t in zip(legs, targets))]
    if not found:
        raise PullbackMediatorMissing(f"no {what} for cone {targets}")
    if len(found) > 1:
        raise PullbackMediatorMissing(f"{what} for cone {targets} is not unique: {found[:2]}")
    return found[0]


@dataclass(frozen=True, eq=False)
class ProductWitness:
    category: object
    a: int
    b: int
    apex: int
    pr_a: object
    pr_b: object
    _cache: dict = field(default_factory=dict, repr=False)

    def pairing(self, f, g):
        """The unique ``<f, g>: d -> apex``."""
        C = self.category
        if C.dom(f) != C.dom(g) or C.cod(f) != self.a or C.cod(g) != self.b:
            raise NonCommutingCone(f"({f}, {g}) is not a cone over ({self.a}, {self.b})")
        key = (f, g)
        if key not in self._cache and hasattr(C, "_fast_pairing"):
            self._cache[key] = C._fast_pairing(self, f, g)
        if key not in self._cache:
            self._cache[key] = _find_unique(
                C, C.dom(f), self.apex, (self.pr_a, self.pr_b), (f, g), "pairing"
            )
        return self._cache[key]


@dataclass(frozen=True, eq=False)
class PullbackWitness:
    """A verified pullback of the cospan ``f: b -> a <- c: g``.

    ``leg_left: apex -> b`` and ``leg_right: apex -> c`` with
    ``f o leg_left == g o leg_right``.
    """

    category: object
    f: object
    g: object
    apex: int
    leg_left: object
    leg_right: object
    _cache: dict = field(default_factory=dict, repr=False)

    def mediator(self, p, q):
        """The unique ``m`` with ``leg_left o m == p`` and ``leg_right o m == q``."""
        C = self.category
        if C.dom(p) != C.dom(q) or C.cod(p) != C.dom(self.f) or C.cod(q) != C.dom(self.g):
            raise NonCommutingCone(f"({p}, {q}) is not typed as a cone")
        if C.compose(self.f, p) != C.compose(self.g, q):
            raise NonCommutingCone(f"cone ({p}, {q}) does not commute")
        key = (p, q)
        if key not in self._cache:
            self._cache[key] = _find_unique(
                C, C.dom(p), self.apex, (self.leg_left, self.leg_right), (p, q), "mediator"
            )
        return self._cache[key]


def mediator(w: PullbackWitness, cone):
    """Unique arrow through ``w``'s apex for ``cone = (p, q)``."""
    p, q = cone
    return w.mediator(p, q)


@dataclass(frozen=True)
class PullbackCheck:
    ok: bool
    reason: str = ""
    cone: tuple | None = None  # (d, p, q)
    mediators: tuple = ()

    def __bool__(self):
        return self.ok


def _cone_defect(C, apex, leg_x, leg_y, x_obj, y_obj, f=-1, g=-1):
    """First object-indexed defect of the mediator/cone correspondence."""
    for d in C.objects:
        res = kernels.universal_defect(
            C.comp_table,
            C.hom_array(d, apex),
            C.hom_array(d, x_obj),
            C.hom_array(d, y_obj),
            int(leg_x),
            int(leg_y),
            int(f),
            int(g),
        )
        if res is not None:
            code, x, y, m1, m2 = res
            return d, code, x, y, m1, m2
    return None


def is_pullback(C: FinCat, f, g, p, q) -> PullbackCheck:
    """Does ``(p, q)`` form a pullback of ``f: b -> a <- c: g``?

    ``p: P -> b``, ``q: P -> c``.  Every cone ``(d, x, y)`` must have exactly
    one mediator; the first cone that does not is returned.
    """
    if not (C.cod(f) == C.cod(g) and C.cod(p) == C.dom(f) and C.cod(q) == C.dom(g) and C.dom(p) == C.dom(q)):
        raise IllTypedSquare(f"square ({f}, {g}, {p}, {q}) is ill-typed")
    if C.compose(f, p) != C.compose(g, q):
        return PullbackCheck(False, "square does not commute")
    defect = _cone_defect(C, C.dom(p), p, q, C.dom(f), C.dom(g), f, g)
    if defect is None:
        return PullbackCheck(True)
    d, code, x, y, m1, m2 = defect
    if code == kernels.EXISTENCE:
        return PullbackCheck(False, "no mediator", (d, x, y))
    return PullbackCheck(False, "mediator not unique", (d, x, y), (m1, m2))


def pullback_of(C: FinCat, f, g) -> PullbackWitness | None:
    """Least verified pullback of ``f: b -> a <- c: g``, or None."""
    if C.cod(f) != C.cod(g):
        raise NotACospan(f"{f} and {g} do not share a codomain")
    b, c = C.dom(f), C.dom(g)
    for apex in C.objects:
        for p in C.hom(apex, b):
            fp = C.compose(f, p)
            for q in C.hom(apex, c):
                if fp != C.compose(g, q):
                    continue
                if _cone_defect(C, apex, p, q, b, c, f, g) is None:
                    return PullbackWitness(C, f, g, apex, p, q)
    return None


def require_pullback(C: FinCat, f, g) -> PullbackWitness:
    from .errors import MissingPullback

    w = pullback_of(C, f, g)
    if w is None:
        raise MissingPullback(f"no pullback of cospan ({C.describe_arrow(f)}, {C.describe_arrow(g)})")
    return w


def is_product(C, a, b, apex, pr_a, pr_b) -> PullbackCheck:
    if hasattr(C, "_product_defect"):
        defect = C._product_defect(a, b, apex, pr_a, pr_b)
    else:
        defect = _cone_defect(C, apex, pr_a, pr_b, a, b)
    if defect is None:
        return PullbackCheck(True)
    d, code, x, y, m1, m2 = defect
    if code == kernels.EXISTENCE:
        return PullbackCheck(False, "no pairing", (d, x, y))
    return PullbackCheck(False, "pairing not unique", (d, x, y), (m1, m2))


def binary_product(C, a, b) -> ProductWitness | None:
    """Least verified product of ``a`` and ``b``, or None (cached per category)."""
    cache = C.__dict__.setdefault("_products", {})
    if (a, b) not in cache:
        cache[(a, b)] = _search_product(C, a, b)
    return cache[(a, b)]


def _search_product(C, a, b) -> ProductWitness | None:
    if hasattr(C, "_product_candidates"):
        candidates = C._product_candidates(a, b)
    else:
        candidates = (
            (apex, pa, pb) for apex in C.objects for pa in C.hom(apex, a) for pb in C.hom(apex, b)
        )
    for apex, pa, pb in candidates:
        if is_product(C, a, b, apex, pa, pb):
            return ProductWitness(C, a, b, apex, pa, pb)
    return None


def require_product(C, a, b) -> ProductWitness:
    w = binary_product(C, a, b)
    if w is None:
        raise MissingProduct(f"no product of {a} and {b}")
    return w


# ---------------------------------------------------------------------------
# duality


def opposite(C: FinCat) -> FinCat:
    """Same objects and arrow ids, dom/cod swapped, composition reversed."""
    arrows = [(n, int(c), int(d)) for n, d, c in zip(C.arrow_names, C._dom, C._cod)]
    return FinCat(C.obj_names, arrows, C._ident.tolist(), np.ascontiguousarray(C._comp.T))


# ---------------------------------------------------------------------------
# lazily enumerated finite sets


class FinSetCategory:
    """Full subcategory of finite sets on the given sizes, never tabulated.

    Arrows are tuples ``(dom, cod, table)``; ``hom`` enumerates on demand.
    Products are verified by a dedicated kernel that walks every
    ``m: d -> apex`` for every object ``d``.
    """

    def __init__(self, sizes):
        self.sizes = tuple(sorted(set(int(s) for s in sizes)))
        self.obj_names = tuple(str(s) for s in self.sizes)
        self._terminal = False

    @property
    def objects(self) -> range:
        return range(len(self.sizes))

    def _object(self, a) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < len(self.sizes):
            raise UnknownObject(a)
        return int(a)

    def _arrow(self, f):
        try:
            d, c, t = f
        except (TypeError, ValueError):
            raise UnknownArrow(f) from None
        self._object(d), self._object(c)
        if len(t) != self.sizes[d] or any(not 0 <= v < self.sizes[c] for v in t):
            raise UnknownArrow(f)
        return f

    def size(self, a) -> int:
        return self.sizes[self._object(a)]

    def object_of_size(self, n) -> int:
        try:
            return self.sizes.index(n)
        except ValueError:
            raise UnknownObject(f"no object of size {n}") from None

    def dom(self, f) -> int:
        return self._arrow(f)[0]

    def cod(self, f) -> int:
        return self._arrow(f)[1]

    def identity(self, a) -> tuple:
        a = self._object(a)
        return (a, a, tuple(range(self.sizes[a])))

    def compose(self, g, f):
        gd, gc, gt = self._arrow(g)
        fd, fc, ft = self._arrow(f)
        if fc != gd:
            raise NotComposable(f"cannot compose {g} after {f}")
        return (fd, gc, tuple(gt[x] for x in ft))

    def table(self, f) -> tuple:
        return self._arrow(f)[2]

    def hom(self, a, b) -> tuple:
        a, b = self._object(a), self._object(b)
        return tuple((a, b, t) for t in itertools.product(range(self.sizes[b]), repeat=self.sizes[a]))

    def hom_count(self, a, b) -> int:
        return self.sizes[self._object(b)] ** self.sizes[self._object(a)]

    def describe_arrow(self, f) -> str:
        d, c, t = f
        return f"{self.sizes[d]}>{self.sizes[c]}:" + ",".join(map(str, t))

    def is_identity(self, f) -> bool:
        return f == self.identity(f[0])

    def _product_candidates(self, a, b):
        # an apex of any other size cannot be a product; among leg pairs on
        # the right-sized apex the lexicographically least one is (p // |b|, p % |b|)
        na, nb = self.sizes[a], self.sizes[b]
        try:
            apex = self.object_of_size(na * nb)
        except UnknownObject:
            return
        n = na * nb
        pa = (apex, a, tuple(p // nb for p in range(n))) if nb else (apex, a, ())
        pb = (apex, b, tuple(p % nb for p in range(n))) if nb else (apex, b, ())
        yield apex, pa, pb

    def _fast_pairing(self, w, f, g):
        # unique by the verified universal property; legs re-checked anyway
        if w.pr_a[2] != tuple(p // max(self.sizes[w.b], 1) for p in range(self.sizes[w.apex])) or (
            w.pr_b[2] != tuple(p % max(self.sizes[w.b], 1) for p in range(self.sizes[w.apex]))
        ):
            return _find_unique(self, self.dom(f), w.apex, (w.pr_a, w.pr_b), (f, g), "pairing")
        nb = self.sizes[w.b]
        m = (self.dom(f), w.apex, tuple(x * nb + y for x, y in zip(f[2], g[2])))
        assert self.compose(w.pr_a, m) == f and self.compose(w.pr_b, m) == g
        return m

    def _product_defect(self, a, b, apex, pa, pb):
        na, nb = self.sizes[a], self.sizes[b]
        for d in self.objects:
            res = kernels.finset_product_defect(na, nb, self.sizes[d], pa[2], pb[2])
            if res is not None:
                code, xc, yc, m1, m2 = res
                nd = self.sizes[d]
                decode = lambda code, k: tuple((code // k**j) % k for j in range(nd))  # noqa: E731
                x = (d, a, decode(xc, na))
                y = (d, b, decode(yc, nb))
                ms = () if m1 < 0 else ((d, apex, decode(m1, self.sizes[apex])), (d, apex, decode(m2, self.sizes[apex])))
                return (d, code, x, y) + (ms or (-1, -1))
        return None

    def __repr__(self):
        return f"FinSetCategory(sizes={self.sizes})"


def count_functions(m: int, k: int) -> int:
    return k**m if (m or k) else 1


__all__ = [
    "FinCat",
    "FinSetSkeleton",
    "FinSetCategory",
    "finset_skeleton",
    "finset_injections",
    "check_category_laws",
    "hom",
    "is_mono",
    "mono_witness",
    "terminal",
    "require_terminal",
    "global_elements",
    "binary_product",
    "require_product",
    "is_product",
    "pullback_of",
    "require_pullback",
    "is_pullback",
    "mediator",
    "opposite",
    "PullbackWitness",
    "ProductWitness",
    "PullbackCheck",
    "Terminal",
]
