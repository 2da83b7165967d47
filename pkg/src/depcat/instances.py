"""Instance generators producing fully populated structure documents."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import algebra
from .deparrows import constant_dep, finset_dep, trivial_dep
from .depsigma import DepSigmaStruct, canonical_pr2, product_pr2, trivial_pr2
from .document import StructureDocument, tables_from_structures
from .errors import DepcatError, InvalidSpec, MissingProduct, MissingSigmaObject, NotARing
from .famcat import coslice_fam, constant_fam, finset_fam, ring_fam, topos_fam
from .fincat import FinCat, FinSetSkeleton, finset_injections, finset_skeleton
from .sigmacat import finset_sigma, product_sigma, ring_sigma, trivial_sigma

KINDS = ("finset", "ring", "discrete", "poset", "monoid", "file")

FAM_CHOICES = ("auto", "finset", "constant", "coslice", "topos", "ring")
SIGMA_CHOICES = ("auto", "none", "trivial", "product", "finset", "ring")
DEP_CHOICES = ("auto", "none", "trivial", "constant", "choice", "sections")


@dataclass
class InstanceSpec:
    kind: str
    params: dict = field(default_factory=dict)


def _int(params, key, default, lo=0, hi=None):
    v = params.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidSpec(f"{key} must be an integer, got {v!r}")
    if v < lo or (hi is not None and v > hi):
        raise InvalidSpec(f"{key} must lie in [{lo}, {hi if hi is not None else 'inf'}], got {v}")
    return v


def _choice(params, key, choices):
    v = params.get(key, "auto")
    if v not in choices:
        raise InvalidSpec(f"{key} must be one of {', '.join(choices)}; got {v!r}")
    return v


# ---------------------------------------------------------------------------
# base categories


def base_category(kind: str, params: dict) -> FinCat:
    if kind == "finset":
        n = _int(params, "max_size", 3, 0, 4)
        return finset_injections(n) if params.get("injective") else finset_skeleton(n)
    if kind == "ring":
        if "add" in params or "mul" in params:
            try:
                R = algebra.Ring(
                    tuple(map(tuple, params["add"])),
                    tuple(map(tuple, params["mul"])),
                    params.get("zero", 0),
                    params.get("one", 1),
                )
            except (KeyError, TypeError) as exc:
                raise InvalidSpec(f"ring tables need both 'add' and 'mul': {exc}") from None
        else:
            R = algebra.zmod(_int(params, "modulus", 4, 1, 12))
        try:
            return algebra.ring_category(R)
        except NotARing as exc:
            raise InvalidSpec(str(exc)) from None
    if kind == "discrete":
        return algebra.discrete_category(_int(params, "n", 2, 0, 50))
    if kind == "poset":
        if "chain" in params:
            return algebra.chain_poset(_int(params, "chain", 3, 0, 30))
        if "divisors" in params:
            return algebra.divisor_poset(_int(params, "divisors", 12, 1, 10_000))
        if "elements" in params:
            return algebra.relation_poset(params["elements"], [tuple(p) for p in params.get("relation", [])])
        raise InvalidSpec("poset needs one of: chain, divisors, elements+relation")
    if kind == "monoid":
        if "table" not in params:
            raise InvalidSpec("monoid needs a 'table'")
        return algebra.monoid_category(params["table"], params.get("unit"))
    raise InvalidSpec(f"unknown instance kind {kind!r}; expected one of {', '.join(KINDS)}")


def upgrade_category(kind: str, params: dict, C: FinCat) -> FinCat:
    """Swap a loaded plain table for the generator's richer class when they agree."""
    try:
        rich = base_category(kind, params)
    except DepcatError:
        return C
    return rich if rich == C else C


# ---------------------------------------------------------------------------
# layers


def _build(kind, params, C):
    fam_c = _choice(params, "fam", FAM_CHOICES)
    sigma_c = _choice(params, "sigma", SIGMA_CHOICES)
    dep_c = _choice(params, "dep", DEP_CHOICES)
    notes = []

    if fam_c == "auto":
        fam_c = {"finset": "finset", "ring": "ring"}.get(kind, "constant")
        if kind == "finset" and params.get("injective"):
            fam_c = "constant"
    if fam_c == "finset":
        if not isinstance(C, FinSetSkeleton):
            raise InvalidSpec("finset families need the finset kind")
        F = finset_fam(C, _int(params, "fiber_cap", 2, 0, 4), _int(params, "min_fiber", 0, 0, 4))
    elif fam_c == "topos":
        if not isinstance(C, FinSetSkeleton):
            raise InvalidSpec("topos families need the finset kind")
        F = topos_fam(C, _int(params, "budget", 2, 0, 3) if "budget" in params else None)
    elif fam_c == "ring":
        if kind != "ring":
            raise InvalidSpec("ring families need the ring kind")
        F = ring_fam(C)
    elif fam_c == "coslice":
        F = coslice_fam(C)
    else:
        F = constant_fam(C)

    if sigma_c == "auto":
        sigma_c = {"finset": "finset", "ring": "ring"}.get(fam_c, "trivial")
    S = None
    if sigma_c == "finset":
        if fam_c != "finset":
            raise InvalidSpec("finset Sigma needs finset families")
        try:
            S = finset_sigma(F)
        except MissingSigmaObject as exc:
            notes.append(f"no sigma layer: {exc}")
    elif sigma_c == "ring":
        if fam_c != "ring":
            raise InvalidSpec("ring Sigma needs ring families")
        S = ring_sigma(C)
        F = S.fam
    elif sigma_c == "product":
        if fam_c != "constant":
            raise InvalidSpec("product Sigma needs constant families")
        try:
            S = product_sigma(C, F)
            for a in C.objects:
                for b in C.objects:
                    S.sigma_obj(a, b)
        except MissingProduct as exc:
            raise InvalidSpec(f"product Sigma unavailable: {exc}") from None
    elif sigma_c == "trivial":
        S = trivial_sigma(F)

    if dep_c == "auto":
        if S is not None and sigma_c in ("finset", "ring"):
            dep_c = "sections"
        elif sigma_c == "product":
            dep_c = "constant"
        elif fam_c == "finset":
            dep_c = "choice"
        else:
            dep_c = "trivial"
    D = DS = None
    if dep_c == "sections":
        if S is None:
            raise InvalidSpec("global-section dependent arrows need a sigma layer")
        DS = canonical_pr2(S)
        D = DS.dep
    elif dep_c == "constant":
        if fam_c != "constant":
            raise InvalidSpec("constant dependent arrows need constant families")
        if sigma_c == "product":
            DS = product_pr2(C)
            S, F, D = DS.sigma, DS.fam, DS.dep
        else:
            D = constant_dep(C, F)
    elif dep_c == "choice":
        if fam_c != "finset":
            raise InvalidSpec("choice-function dependent arrows need finset families")
        D = finset_dep(F)
        if S is not None and sigma_c == "trivial":
            if all(all(lam) for a in C.objects for lam in F.fam(a)):
                # Sigma_a lam = a and pr1 = 1, so pr2 is a choice function for lam itself
                DS = DepSigmaStruct(S, D, lambda a, lam: (0,) * len(lam), name="zeros")
            else:
                notes.append("no depsigma layer: an empty fibre admits no choice function")
    elif dep_c == "trivial":
        D = trivial_dep(F)
        if S is not None:
            DS = trivial_pr2(S)
            D = DS.dep
    names = {"fam": fam_c, "sigma": sigma_c, "dep": dep_c}
    if DS is not None:
        names["depsigma"] = {"sections": "canonical", "constant": "product", "trivial": "trivial", "choice": "zeros"}[dep_c]
    return F, S, D, DS, names, notes


def generate(spec: InstanceSpec | str, params: dict | None = None, self_check: bool = True) -> StructureDocument:
    """Build a document through every layer the instance supports.

    With ``self_check`` the core law suites are run and any failure raises
    :class:`InvalidSpec`.
    """
    if isinstance(spec, str):
        spec = InstanceSpec(spec, dict(params or {}))
    kind, params = spec.kind, json.loads(json.dumps(spec.params))
    if kind == "file":
        from .document import load

        if "path" not in params:
            raise InvalidSpec("file instances need a 'path'")
        return load(params["path"])
    C = base_category(kind, params)
    F, S, D, DS, names, notes = _build(kind, params, C)
    tables = tables_from_structures(C, F, S, D, DS, names)
    doc = StructureDocument(kind, params, C, notes=tuple(notes), **tables)
    if self_check:
        from .suites import CORE_SUITES, applicable_suites, run_suites

        report = run_suites(doc, [s for s in applicable_suites(doc, CORE_SUITES)])
        if not report.passed:
            bad = report.failures[0]
            raise InvalidSpec(f"generated instance fails {bad.law}: {bad.detail}")
    return doc
