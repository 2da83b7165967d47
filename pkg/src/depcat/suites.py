"""Law-suite runner and the built-in mutation registry."""

from __future__ import annotations

import functools
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .deparrows import check_counts, check_dep_laws, check_section_counts, check_sections, dep_object_bijection
from .depsigma import canonical_pr2, check_depsigma_laws, check_elements, analyze_element, pr2_prime_check
from .document import StructureDocument, deserialize, serialize
from .errors import DepcatError, LayerMissing, MissingPullback
from .famcat import (
    check_cofam_laws,
    check_fam_laws,
    check_presheaf_laws,
    check_weak_fam_laws,
    cofam_from_op,
    coslice_fam,
    fam_presheaf,
    slice_wfam,
    twisted_chooser,
)
from .fincat import (
    FinCat,
    FinSetCategory,
    PullbackWitness,
    check_category_laws,
    global_elements,
    opposite,
    require_product,
    terminal,
)
from .report import FAIL, LawEntry, LawReport
from .sigmacat import check_sigma_counts, check_sigma_laws, check_transport, product_sigma

SUITES = ("cat", "fam", "sigma", "transport", "dep", "depsigma", "elsigma", "counts", "exdo2", "cofam", "weak")

CORE_SUITES = ("cat", "fam", "sigma", "dep", "depsigma")

MUTANT = "__mutant__"


# ---------------------------------------------------------------------------
# applicability


def _finset_max(doc) -> int | None:
    if doc.kind != "finset" or doc.params.get("injective"):
        return None
    return int(doc.params.get("max_size", 3))


def _missing(doc: StructureDocument, suite: str) -> str | None:
    """Why ``suite`` cannot run on ``doc``, or None."""
    need = {
        "fam": ("fam",),
        "sigma": ("sigma",),
        "transport": ("sigma",),
        "dep": ("dep",),
        "depsigma": ("depsigma",),
        "elsigma": ("depsigma",),
    }.get(suite, ())
    for layer in need:
        if not doc.has(layer):
            return f"suite {suite} needs a {layer} layer"
    if suite in ("transport", "elsigma") and terminal(doc.category) is None:
        return f"suite {suite} needs a terminal object"
    if suite in ("counts", "exdo2") and _finset_max(doc) is None:
        return f"suite {suite} needs a finite-set skeleton instance"
    if suite == "counts" and doc.fam is not None and doc.fam["construction"] != "finset":
        return "suite counts needs finset families"
    if suite == "weak":
        try:
            _weak_structure(doc)
        except MissingPullback as exc:
            return f"suite weak needs all pullbacks: {exc}"
    return None


def applicable_suites(doc: StructureDocument, among=SUITES) -> tuple[str, ...]:
    return tuple(s for s in among if _missing(doc, s) is None)


# ---------------------------------------------------------------------------
# the finite-set universe used by product-based checks


@functools.lru_cache(maxsize=4)
def finset_universe(max_size: int) -> FinSetCategory:
    """Finite sets of sizes ``0..n``, their pairwise products and ``(a x b) x b``."""
    base = range(max_size + 1)
    sizes = set(base) | {a * b for a in base for b in base}
    sizes |= {a * b * b for a in base for b in base if a * b * b <= max(max_size, 1) ** 2}
    return FinSetCategory(sizes)


def _expr22_pairs(U: FinSetCategory, n: int):
    for a, b in itertools.product(range(n + 1), repeat=2):
        if a * b * b in U.sizes:
            yield a, b


def _size_by_name(C):
    return lambda a: int(C.obj_names[a])


# ---------------------------------------------------------------------------
# suites


def _weak_structure(doc):
    C = doc.category
    W = slice_wfam(C, twisted_chooser(C))
    for (lam, f), leg in doc.patches.get("weak.leg", {}).items():
        w = W.witnesses[(lam, f)]
        W.witnesses[(lam, f)] = PullbackWitness(C, w.f, w.g, w.apex, w.leg_left, leg)
    return W


def _run_one(doc: StructureDocument, suite: str, budget: int | None) -> LawReport:
    L = doc.layers()
    C = doc.category
    if suite == "cat":
        return check_category_laws(C)
    if suite == "fam":
        rep = check_fam_laws(L.fam)
        if not rep.passed and rep.status("fam.typing") == FAIL:
            return rep
        return rep.extend(check_presheaf_laws(fam_presheaf(L.fam), suite="fam"))
    if suite == "sigma":
        return check_sigma_laws(L.sigma)
    if suite == "transport":
        return check_transport(L.sigma)
    if suite == "dep":
        rep = check_dep_laws(L.dep)
        if getattr(L.dep, "sigma", None) is not None:
            rep.extend(check_sections(L.dep, suite="dep"))
        return rep
    if suite == "depsigma":
        return check_depsigma_laws(L.depsigma)
    if suite == "elsigma":
        return check_elements(L.depsigma)
    if suite == "counts":
        return _counts(doc, budget)
    if suite == "exdo2":
        return _exdo2(doc, budget)
    if suite == "cofam":
        K = cofam_from_op(C, coslice_fam(opposite(C)))
        return check_cofam_laws(K)
    if suite == "weak":
        return check_weak_fam_laws(_weak_structure(doc))
    raise LayerMissing(f"unknown suite {suite!r}")


def _bound(doc, budget):
    n = _finset_max(doc)
    return n if budget is None else min(n, budget)


def _counts(doc, budget):
    L = doc.layers()
    C = doc.category
    size = _size_by_name(C)
    rep = check_counts(C, L.fam, L.dep if L.fam is not None else None, size=size)
    if L.sigma is not None and doc.sigma["construction"] == "finset":
        rep.extend(check_sigma_counts(L.sigma, size=size))
    n = _bound(doc, budget)
    U = finset_universe(n)
    obj = U.object_of_size
    pairs = [(obj(a), obj(b)) for a, b in itertools.product(range(n + 1), repeat=2)]
    exclude = frozenset(doc.patches.get("count.sections", {}))
    return rep.extend(check_section_counts(U, pairs, exclude=exclude))


def _patched_j(U, a, b, patch, sizes):
    w = require_product(U, a, b)
    return lambda phi: patch.get(sizes + (phi,), U.compose(w.pr_b, phi))


def _exdo2(doc, budget):
    n = _bound(doc, budget)
    U = finset_universe(n)
    obj = U.object_of_size
    rep = LawReport("exdo2")
    jpatch = doc.patches.get("exdo2.j", {})
    bij_entries = []
    for na, nb in itertools.product(range(n + 1), repeat=2):
        a, b = obj(na), obj(nb)
        bij_entries.append(dep_object_bijection(U, a, b, j=_patched_j(U, a, b, jpatch, (na, nb))).report.entries[0])
    rep.entries.append(_merge(bij_entries))
    p2patch = doc.patches.get("expr22.pr2", {})
    jpatch22 = doc.patches.get("expr22.j", {})
    sub = []
    for na, nb in _expr22_pairs(U, n):
        a, b = obj(na), obj(nb)
        ab = require_product(U, a, b).apex
        sub.append(
            pr2_prime_check(
                U, a, b, j=_patched_j(U, ab, b, jpatch22, (na, nb)), suite="exdo2", pr2_override=p2patch.get((na, nb))
            )
        )
    for law in ("expr22.pr2", "expr22.j"):
        rep.entries.append(_merge([r.entry(law) for r in sub]))
    return rep


def _merge(entries: list[LawEntry]) -> LawEntry:
    first = next((e for e in entries if not e.passed), None)
    checked = sum(e.checked for e in entries)
    e0 = entries[0]
    if first is None:
        return LawEntry(e0.suite, e0.law, e0.status, checked)
    return LawEntry(first.suite, first.law, FAIL, checked, first.witness, first.detail)


def _guarded(doc, suite, budget) -> LawReport:
    try:
        rep = _run_one(doc, suite, budget)
    except DepcatError as exc:
        return LawReport(suite, [LawEntry(suite, f"{suite}.aborted", FAIL, 0, type(exc).__name__, str(exc))])
    for i, e in enumerate(rep.entries):
        if e.suite != suite:
            rep.entries[i] = LawEntry(suite, e.law, e.status, e.checked, e.witness, e.detail)
    return rep


def _worker(payload: bytes, suite: str, budget):
    return _guarded(deserialize(payload), suite, budget)


def run_suites(
    doc: StructureDocument, suites=None, budget: int | None = None, jobs: int = 1
) -> LawReport:
    """Run the requested suites (all applicable ones when ``suites`` is None).

    A suite requested by name that cannot run raises :class:`LayerMissing`.
    The report lists suites in a fixed order, so it is identical for any
    ``jobs``.
    """
    if suites is None:
        chosen = list(applicable_suites(doc))
    else:
        wanted = set(suites)
        unknown = wanted - set(SUITES)
        if unknown:
            raise LayerMissing(f"unknown suite(s): {', '.join(sorted(unknown))}")
        chosen = [s for s in SUITES if s in wanted]
        for s in chosen:
            why = _missing(doc, s)
            if why:
                raise LayerMissing(why)
    if jobs > 1 and len(chosen) > 1 and not doc.patches:
        payload = serialize(doc)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_worker, [payload] * len(chosen), chosen, [budget] * len(chosen)))
    else:
        parts = [_guarded(doc, s, budget) for s in chosen]
    out = LawReport("+".join(chosen) if chosen else "none")
    for p in parts:
        out.extend(p)
    return out


# ---------------------------------------------------------------------------
# mutations


def suite_of(law: str) -> str:
    head = law.split(".")[0]
    table = {
        "cat": "cat",
        "fam": "fam",
        "fam1": "fam",
        "fam2": "fam",
        "presheaf": "fam",
        "sigma": "sigma",
        "s1": "sigma",
        "s2": "sigma",
        "transp": "transport",
        "dep": "dep",
        "dep1": "dep",
        "dep2": "dep",
        "sections": "dep",
        "depsigma": "depsigma",
        "elsigma": "elsigma",
        "count": "counts",
        "exdo2": "exdo2",
        "expr22": "exdo2",
        "cofam": "cofam",
        "cofam1": "cofam",
        "cofam2": "cofam",
        "weak": "weak",
    }
    if head not in table:
        raise KeyError(f"no mutation known for law {law!r}")
    return table[head]


def _others(pool, current) -> Iterator:
    return (x for x in pool if x != current)


def _non_identity(C, f) -> bool:
    return C.identity(C.dom(f)) != f


def _cat_entry(doc, g, f, h):
    return f"comp[{doc.category.arrow_names[g]}, {doc.category.arrow_names[f]}] := {h}", doc.with_category(
        doc.category.with_composite(g, f, h)
    )


def _gen_cat(doc, law):
    C = doc.category
    comp = C.comp_table
    arrows = list(C.arrows)
    if law == "cat.typing":
        for g, f in itertools.product(arrows, arrows):
            if comp[g, f] >= 0:
                yield _cat_entry(doc, g, f, -1)
    elif law in ("cat.unit", "cofam1"):
        for f in arrows:
            idc = C.identity(C.cod(f))
            for h in _others(C.hom(C.dom(f), C.cod(f)), f):
                yield _cat_entry(doc, idc, f, h)
    elif law in ("cat.assoc", "cofam2"):
        for g, f in itertools.product(arrows, arrows):
            if comp[g, f] >= 0 and _non_identity(C, g) and _non_identity(C, f):
                for h in _others(C.hom(C.dom(f), C.cod(g)), comp[g, f]):
                    yield _cat_entry(doc, g, f, h)
    elif law == "cofam.typing":
        for g, f in itertools.product(arrows, arrows):
            if comp[g, f] >= 0 and _non_identity(C, g) and _non_identity(C, f):
                for h in arrows:
                    if C.dom(h) != C.dom(f) or C.cod(h) != C.cod(g):
                        yield _cat_entry(doc, g, f, h)
                        break


def _gen_fam(doc, law):
    C = doc.category
    sets = doc.fam["sets"]
    for (lam, f), cur in doc.fam["restrict"].items():
        b = C.dom(f)
        ident = not _non_identity(C, f)
        if law == "fam.typing":
            yield f"restrict[{lam}, {C.arrow_names[f]}] := {MUTANT}", doc.with_entry("fam", "restrict", (lam, f), MUTANT)
        elif (law in ("fam1", "presheaf.id") and ident) or (law in ("fam2", "presheaf.comp") and not ident):
            for alt in _others(sets[b], cur):
                yield f"restrict[{lam}, {C.arrow_names[f]}] := {alt}", doc.with_entry("fam", "restrict", (lam, f), alt)


def _sigma_obj(doc, a, lam):
    return doc.sigma["obj"][(a, lam)]


def _arr_flips(doc, keys):
    C = doc.category
    for lam, f in keys:
        a, b = C.cod(f), C.dom(f)
        lf = doc.fam["restrict"][(lam, f)]
        cur = doc.sigma["arr"][(lam, f)]
        for alt in _others(C.hom(_sigma_obj(doc, b, lf), _sigma_obj(doc, a, lam)), cur):
            yield f"sigma.arr[{lam}, {C.arrow_names[f]}] := {C.arrow_names[alt]}", doc.with_entry(
                "sigma", "arr", (lam, f), alt
            )


def _pr1_flips(doc, keys, any_type=False):
    C = doc.category
    for a, lam in keys:
        s = _sigma_obj(doc, a, lam)
        cur = doc.sigma["pr1"][(a, lam)]
        pool = [h for h in C.arrows if C.dom(h) == s] if any_type else C.hom(s, a)
        for alt in _others(pool, cur):
            yield f"sigma.pr1[{a}, {lam}] := {C.arrow_names[alt]}", doc.with_entry("sigma", "pr1", (a, lam), alt)


def _gen_sigma(doc, law):
    C = doc.category
    arr_keys = list(doc.sigma["arr"])
    if law == "sigma.typing":
        for (a, lam), cur in doc.sigma["pr1"].items():
            s = _sigma_obj(doc, a, lam)
            for alt in C.arrows:
                if C.dom(alt) != s or C.cod(alt) != a:
                    yield f"sigma.pr1[{a}, {lam}] := {C.arrow_names[alt]}", doc.with_entry("sigma", "pr1", (a, lam), alt)
                    break
    elif law == "sigma.square":
        yield from _arr_flips(doc, [k for k in arr_keys if _non_identity(C, k[1])])
    elif law == "sigma.pullback":
        yield from _pr1_flips(doc, list(doc.sigma["pr1"]))
        yield from _arr_flips(doc, arr_keys)
    elif law == "s1":
        yield from _arr_flips(doc, [k for k in arr_keys if not _non_identity(C, k[1])])
    elif law == "s2":
        yield from _arr_flips(doc, [k for k in arr_keys if _non_identity(C, k[1])])


def _global_keys(doc):
    """``(lam, i)`` for every global element ``i`` of every object."""
    C = doc.category
    for a in C.objects:
        for i in global_elements(C, a):
            for lam in doc.fam["sets"][a]:
                yield lam, i


def _gen_transport(doc, law):
    C = doc.category
    if law == "transp.iso":
        yield from _arr_flips(doc, list(_global_keys(doc)))
    elif law == "transp.sub":
        one = terminal(C).obj
        yield from _pr1_flips(doc, [(one, lam) for lam in doc.fam["sets"][one]], any_type=True)


def _gen_dep(doc, law):
    C = doc.category
    sets = doc.dep["sets"]
    restrict = doc.fam["restrict"]
    if law in ("sections.section",):
        yield from _pr1_flips(doc, [k for k, v in sets.items() if v])
        return
    for (lam, phi, f), cur in doc.dep["apply"].items():
        b = C.dom(f)
        lf = restrict[(lam, f)]
        ident = not _non_identity(C, f)
        what = f"dep.apply[{lam}, {phi}, {C.arrow_names[f]}]"
        if law == "dep.typing":
            yield f"{what} := {MUTANT}", doc.with_entry("dep", "apply", (lam, phi, f), MUTANT)
        elif (law == "dep1" and ident) or (law == "dep2" and not ident):
            for alt in _others(sets[(b, lf)], cur):
                yield f"{what} := {alt}", doc.with_entry("dep", "apply", (lam, phi, f), alt)
        elif law in ("sections.eq1", "sections.eq2"):
            for alt in _others(C.hom(b, _sigma_obj(doc, b, lf)), cur):
                yield f"{what} := {C.arrow_names[alt]}", doc.with_entry("dep", "apply", (lam, phi, f), alt)


def _pr2_flips(doc, keys, pool_of):
    for a, lam in keys:
        cur = doc.depsigma["pr2"][(a, lam)]
        for alt in _others(pool_of(a, lam), cur):
            yield f"pr2[{a}, {lam}] := {alt}", doc.with_entry("depsigma", "pr2", (a, lam), alt)


def _pr2_dhom(doc):
    C = doc.category
    sig = doc.sigma

    def pool(a, lam):
        s = sig["obj"][(a, lam)]
        fam_s = doc.fam["restrict"][(lam, sig["pr1"][(a, lam)])]
        return doc.dep["sets"].get((s, fam_s), ())

    return pool


def _pr2_arrows(doc):
    C = doc.category
    sig = doc.sigma

    def pool(a, lam):
        s = sig["obj"][(a, lam)]
        fam_s = doc.fam["restrict"][(lam, sig["pr1"][(a, lam)])]
        return C.hom(s, sig["obj"][(s, fam_s)])

    return pool


def _gen_depsigma(doc, law):
    keys = list(doc.depsigma["pr2"])
    if law == "depsigma.typing":
        for k in keys:
            yield f"pr2[{k}] := {MUTANT}", doc.with_entry("depsigma", "pr2", k, MUTANT)
    elif law == "depsigma.compat":
        yield from _pr2_flips(doc, keys, _pr2_dhom(doc))
    elif law == "depsigma.section":
        yield from _pr2_flips(doc, keys, _pr2_arrows(doc))


def _elements(doc):
    """``(a, lam, z, analysis)`` for every global element of every Sigma-object."""
    L = doc.layers()
    C = doc.category
    for a in C.objects:
        for lam in doc.fam["sets"][a]:
            for z in global_elements(C, doc.sigma["obj"][(a, lam)]):
                yield a, lam, z, analyze_element(L.depsigma, a, lam, z)


def _gen_elsigma(doc, law):
    C = doc.category
    t = terminal(C)
    one = t.obj
    seen = set()
    for a, lam, z, ea in _elements(doc):
        if ea.u is None:
            continue
        li = doc.fam["restrict"][(lam, ea.i)]
        s1 = doc.sigma["obj"][(one, li)]
        if law in ("elsigma.pr0", "elsigma.pr3"):
            # the composite read by (pr0) is ! o u, by (pr3) it is 1 o u
            g = t.bang[s1] if law == "elsigma.pr0" else C.identity(s1)
            if (g, ea.u) in seen:
                continue
            seen.add((g, ea.u))
            cur = C.compose(g, ea.u)
            for h in _others(C.arrows, cur):
                yield _cat_entry(doc, g, ea.u, h)
        elif law == "elsigma.pr1":
            if (lam, ea.i) not in seen:
                seen.add((lam, ea.i))
                yield from _arr_flips(doc, [(lam, ea.i)])
        elif law in ("elsigma.pr2", "elsigma.pr4"):
            if (one, li) not in seen:
                seen.add((one, li))
                yield from _pr2_flips(doc, [(one, li)], _pr2_dhom(doc))


def _gen_counts(doc, law):
    C = doc.category
    if law == "count.hom":
        arrows = [(n, int(d), int(c)) for n, d, c in zip(C.arrow_names, C._dom, C._cod)]
        for f in C.arrows:
            if not _non_identity(C, f):
                continue
            for c in _others(C.objects, C.cod(f)):
                arrows2 = list(arrows)
                arrows2[f] = (arrows[f][0], arrows[f][1], c)
                D = FinCat(C.obj_names, arrows2, C._ident.tolist(), C.comp_table)
                yield f"cod({C.arrow_names[f]}) := {C.obj_names[c]}", doc.with_category(D)
                break
    elif law == "count.sigma":
        for (a, lam), cur in doc.sigma["obj"].items():
            for alt in _others(C.objects, cur):
                yield f"sigma.obj[{a}, {lam}] := {alt}", doc.with_entry("sigma", "obj", (a, lam), alt)
                break
    elif law == "count.dhom":
        for k, v in doc.dep["sets"].items():
            if v:
                yield f"dep.sets[{k}] drops {v[-1]!r}", doc.with_entry("dep", "sets", k, v[:-1])
    elif law == "count.sections":
        U = finset_universe(_finset_max(doc))
        for na, nb in itertools.product(range(1, _finset_max(doc) + 1), repeat=2):
            a, b = U.object_of_size(na), U.object_of_size(nb)
            w = require_product(U, a, b)
            for phi in U.hom(a, w.apex):
                if U.compose(w.pr_a, phi) == U.identity(a):
                    yield f"section {U.describe_arrow(phi)} excluded", doc.with_patch("count.sections", phi, True)
                    break


def _gen_exdo2(doc, law):
    n = _finset_max(doc)
    U = finset_universe(n)
    obj = U.object_of_size
    pairs = sorted(itertools.product(range(n + 1), repeat=2), key=lambda p: (p[0] * p[1], p))
    if law == "exdo2.bij":
        for na, nb in pairs:
            a, b = obj(na), obj(nb)
            bij = dep_object_bijection(U, a, b)
            for phi in bij.sections:
                for alt in _others(bij.hom, bij.j[phi]):
                    yield f"j[{na}, {nb}]({U.describe_arrow(phi)}) := {U.describe_arrow(alt)}", doc.with_patch(
                        "exdo2.j", (na, nb, phi), alt
                    )
    elif law in ("expr22.pr2", "expr22.j"):
        S = product_sigma(U)
        DS = canonical_pr2(S)
        for na, nb in sorted(_expr22_pairs(U, n), key=lambda p: (p[0] * p[1], p)):
            a, b = obj(na), obj(nb)
            w = require_product(U, a, b)
            p2 = DS.pr2(a, b)
            if law == "expr22.pr2":
                for alt in _others(U.hom(w.apex, S.product(w.apex, b).apex), p2):
                    yield f"pr2'[{na}, {nb}] := {U.describe_arrow(alt)}", doc.with_patch("expr22.pr2", (na, nb), alt)
            else:
                for alt in _others(U.hom(w.apex, b), w.pr_b):
                    yield f"j[{na}, {nb}](pr2') := {U.describe_arrow(alt)}", doc.with_patch(
                        "expr22.j", (na, nb, p2), alt
                    )


def _gen_weak(doc, law):
    C = doc.category
    W = _weak_structure(doc)
    for (lam, f), w in W.witnesses.items():
        ident = not _non_identity(C, f)
        if (law == "weak.fam1") != ident:
            continue
        for alt in C.arrows:
            if C.dom(alt) != C.dom(w.leg_right):
                yield f"weak leg[{C.arrow_names[lam]}, {C.arrow_names[f]}] := {C.arrow_names[alt]}", doc.with_patch(
                    "weak.leg", (lam, f), alt
                )
                break


_GENERATORS: dict[str, Callable] = {
    "cat": _gen_cat,
    "cofam": _gen_cat,
    "fam": _gen_fam,
    "sigma": _gen_sigma,
    "transport": _gen_transport,
    "dep": _gen_dep,
    "depsigma": _gen_depsigma,
    "elsigma": _gen_elsigma,
    "counts": _gen_counts,
    "exdo2": _gen_exdo2,
    "weak": _gen_weak,
}


@dataclass
class MutationResult:
    law: str
    suite: str
    applied: bool
    detected: bool
    description: str = ""
    tried: int = 0
    report: LawReport | None = None


def mutation_candidates(doc: StructureDocument, law: str) -> Iterator[tuple[str, StructureDocument]]:
    """Deterministic single-entry mutations aimed at ``law``."""
    suite = suite_of(law)
    if _missing(doc, suite):
        return iter(())
    return _GENERATORS[suite](doc, law)


def find_mutation(doc: StructureDocument, law: str, budget: int | None = None, cap: int = 400) -> MutationResult:
    """Try candidates in order until the suite reports ``law`` failing with a witness."""
    suite = suite_of(law)
    tried = 0
    last = None
    for desc, mutant in itertools.islice(mutation_candidates(doc, law), cap):
        tried += 1
        rep = _guarded(mutant, suite, budget)
        last = rep
        hit = [e for e in rep.entries if e.law == law and not e.passed and e.witness is not None]
        if hit:
            return MutationResult(law, suite, True, True, desc, tried, rep)
    return MutationResult(law, suite, tried > 0, False, "", tried, last)


# instances on which each law has a known detectable mutation
_DEFAULT = ("finset", {"max_size": 3, "fiber_cap": 1})
_CHOICE = ("finset", {"max_size": 2, "fiber_cap": 2, "min_fiber": 1, "sigma": "trivial", "dep": "choice"})
DESIGNATED: dict[str, tuple[str, dict]] = {
    "sigma.pullback": ("monoid", {"table": [[0, 1], [1, 1]], "unit": 0, "fam": "constant", "sigma": "trivial"}),
    "dep.typing": _CHOICE,
    "dep1": _CHOICE,
    "dep2": _CHOICE,
    "depsigma.compat": _CHOICE,
    "elsigma.pr2": _CHOICE,
    "elsigma.pr4": _CHOICE,
    "weak.fam1": ("finset", {"max_size": 2, "injective": True}),
    "weak.fam2": ("finset", {"max_size": 2, "injective": True}),
}

MUTATION_LAWS = (
    "cat.typing", "cat.unit", "cat.assoc",
    "fam.typing", "fam1", "fam2", "presheaf.id", "presheaf.comp",
    "sigma.typing", "sigma.square", "sigma.pullback", "s1", "s2",
    "transp.iso", "transp.sub",
    "dep.typing", "dep1", "dep2", "sections.section", "sections.eq1", "sections.eq2",
    "depsigma.typing", "depsigma.compat", "depsigma.section",
    "elsigma.pr0", "elsigma.pr1", "elsigma.pr2", "elsigma.pr3", "elsigma.pr4",
    "count.hom", "count.sigma", "count.dhom", "count.sections",
    "exdo2.bij", "expr22.pr2", "expr22.j",
    "cofam.typing", "cofam1", "cofam2",
    "weak.fam1", "weak.fam2",
)  # fmt: skip


def designated_instance(law: str) -> StructureDocument:
    kind, params = DESIGNATED.get(law, _DEFAULT)
    return _generate_cached(kind, json.dumps(params, sort_keys=True))


@functools.lru_cache(maxsize=16)
def _generate_cached(kind: str, params_json: str) -> StructureDocument:
    from .instances import generate

    return generate(kind, json.loads(params_json))
