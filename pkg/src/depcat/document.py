"""Structure documents: a category plus optional layers stored as explicit tables.

Every layer is a plain mapping, so a document can be written to JSON,
read back bit-exactly, and mutated one entry at a time.  Live structure
objects (:class:`FamStruct`, :class:`SigmaStruct`, ...) are rebuilt from the
tables on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

from .deparrows import DepStruct
from .depsigma import DepSigmaStruct
from .errors import IntegrityError, LayerMissing, ParseError
from .famcat import FamStruct, _all_arrows, _arrows_into
from .fincat import FinCat
from .sigmacat import SigmaStruct

FORMAT_VERSION = 1
LAYERS = ("fam", "sigma", "dep", "depsigma")


def _freeze(value):
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _canon(value) -> str:
    return json.dumps(value, separators=(",", ":"), sort_keys=True)


@dataclass
class Layers:
    category: Any
    fam: FamStruct | None = None
    sigma: SigmaStruct | None = None
    dep: DepStruct | None = None
    depsigma: DepSigmaStruct | None = None


@dataclass(eq=False)
class StructureDocument:
    """``fam = {"construction", "sets": {a: fams}, "restrict": {(lam, f): lam'}}``;
    ``sigma = {"construction", "obj", "pr1": {(a, lam): x}, "arr": {(lam, f): arrow}}``;
    ``dep = {"construction", "sets": {(a, lam): phis}, "apply": {(lam, phi, f): phi'}}``;
    ``depsigma = {"construction", "pr2": {(a, lam): phi}}``.
    """

    kind: str
    params: dict
    category: FinCat
    fam: dict | None = None
    sigma: dict | None = None
    dep: dict | None = None
    depsigma: dict | None = None
    notes: tuple = ()
    # in-memory hooks for mutation tests of derived checks; never serialized
    patches: dict = field(default_factory=dict)
    _layers: Layers | None = field(default=None, repr=False)

    # -- structure objects -------------------------------------------------
    def layers(self) -> Layers:
        if self._layers is None:
            self._layers = _build_layers(self)
        return self._layers

    def require(self, layer: str):
        got = getattr(self.layers(), layer)
        if got is None:
            raise LayerMissing(f"document has no {layer} layer")
        return got

    def has(self, layer: str) -> bool:
        return getattr(self, layer) is not None

    # -- single-entry edits ------------------------------------------------
    def with_entry(self, layer: str, table: str, key, value) -> "StructureDocument":
        data = dict(getattr(self, layer))
        t = dict(data[table])
        t[key] = value
        data[table] = t
        return replace(self, **{layer: data}, _layers=None, patches=dict(self.patches))

    def with_category(self, C: FinCat) -> "StructureDocument":
        return replace(self, category=C, _layers=None, patches=dict(self.patches))

    def with_patch(self, name: str, key, value) -> "StructureDocument":
        patches = {k: dict(v) for k, v in self.patches.items()}
        patches.setdefault(name, {})[key] = value
        return replace(self, patches=patches, _layers=None)

    # -- comparison and encoding --------------------------------------------
    def to_dict(self) -> dict:
        out = {
            "version": FORMAT_VERSION,
            "kind": self.kind,
            "params": self.params,
            "notes": list(self.notes),
            "category": _category_to_dict(self.category),
        }
        if self.fam is not None:
            out["fam"] = {
                "construction": self.fam["construction"],
                "sets": _rows((a, list(v)) for a, v in self.fam["sets"].items()),
                "restrict": _rows((lam, f, v) for (lam, f), v in self.fam["restrict"].items()),
            }
        if self.sigma is not None:
            out["sigma"] = {
                "construction": self.sigma["construction"],
                "obj": _rows((a, lam, v) for (a, lam), v in self.sigma["obj"].items()),
                "pr1": _rows((a, lam, v) for (a, lam), v in self.sigma["pr1"].items()),
                "arr": _rows((lam, f, v) for (lam, f), v in self.sigma["arr"].items()),
            }
        if self.dep is not None:
            out["dep"] = {
                "construction": self.dep["construction"],
                "sets": _rows((a, lam, list(v)) for (a, lam), v in self.dep["sets"].items()),
                "apply": _rows((lam, phi, f, v) for (lam, phi, f), v in self.dep["apply"].items()),
            }
        if self.depsigma is not None:
            out["depsigma"] = {
                "construction": self.depsigma["construction"],
                "pr2": _rows((a, lam, v) for (a, lam), v in self.depsigma["pr2"].items()),
            }
        return out

    def __eq__(self, other):
        if not isinstance(other, StructureDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def summary(self) -> dict:
        C = self.category
        out = {"kind": self.kind, "objects": len(C.obj_names), "arrows": len(C.arrow_names)}
        if self.fam is not None:
            out["families"] = sum(len(v) for v in self.fam["sets"].values())
        for layer in ("sigma", "dep", "depsigma"):
            out[layer] = getattr(self, layer)["construction"] if self.has(layer) else None
        return out


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item"):
        return v.item()
    return v


def _rows(rows) -> list:
    out = [_jsonable(list(r)) for r in rows]
    out.sort(key=_canon)
    return out


def _category_to_dict(C: FinCat) -> dict:
    comp = C.comp_table
    n = len(C.arrow_names)
    return {
        "objects": [[i, name] for i, name in enumerate(C.obj_names)],
        "arrows": [[f, C.arrow_names[f], int(C._dom[f]), int(C._cod[f])] for f in range(n)],
        "identities": [[a, int(C._ident[a])] for a in range(len(C.obj_names))],
        "composition": [[g, f, int(comp[g, f])] for g in range(n) for f in range(n) if comp[g, f] >= 0],
    }


# ---------------------------------------------------------------------------
# building live structures from tables


def _lookup(table: dict, what: str):
    def get(*key):
        k = key if len(key) > 1 else key[0]
        try:
            return table[k]
        except KeyError:
            raise IntegrityError(f"{what} has no entry for {k!r}") from None

    return get


def _build_layers(doc: StructureDocument) -> Layers:
    C = doc.category
    L = Layers(C)
    if doc.fam is not None:
        get = _lookup(doc.fam["restrict"], "fam.restrict")
        L.fam = FamStruct(C, doc.fam["sets"], lambda lam, f: get(lam, f), name=doc.fam["construction"])
    if doc.sigma is not None:
        if L.fam is None:
            raise LayerMissing("sigma layer needs a fam layer")
        obj = _lookup(doc.sigma["obj"], "sigma.obj")
        pr1 = _lookup(doc.sigma["pr1"], "sigma.pr1")
        arr = _lookup(doc.sigma["arr"], "sigma.arr")
        L.sigma = SigmaStruct(L.fam, obj, pr1, arr, name=doc.sigma["construction"])
    if doc.dep is not None:
        if L.fam is None:
            raise LayerMissing("dep layer needs a fam layer")
        app = _lookup(doc.dep["apply"], "dep.apply")
        L.dep = DepStruct(L.fam, doc.dep["sets"], lambda lam, phi, f: app(lam, phi, f), name=doc.dep["construction"])
        if doc.dep["construction"] == "sections" and L.sigma is not None:
            L.dep.sigma = L.sigma
    if doc.depsigma is not None:
        if L.sigma is None or L.dep is None:
            raise LayerMissing("depsigma layer needs sigma and dep layers")
        L.depsigma = DepSigmaStruct(
            L.sigma, L.dep, _lookup(doc.depsigma["pr2"], "depsigma.pr2"), name=doc.depsigma["construction"]
        )
    return L


def tables_from_structures(C, F=None, S=None, D=None, DS=None, constructions=None) -> dict:
    """Enumerate live structures into the document tables."""
    names = constructions or {}
    out: dict = {}
    arrows = list(_all_arrows(C))
    if F is not None:
        out["fam"] = {
            "construction": names.get("fam", F.name),
            "sets": {a: tuple(F.fam(a)) for a in C.objects},
            "restrict": {(lam, f): F.restrict(lam, f) for f in arrows for lam in F.fam(C.cod(f))},
        }
    if S is not None:
        keys = [(a, lam) for a in C.objects for lam in F.fam(a)]
        out["sigma"] = {
            "construction": names.get("sigma", S.name),
            "obj": {k: S.sigma_obj(*k) for k in keys},
            "pr1": {k: S.pr1(*k) for k in keys},
            "arr": {(lam, f): S.sigma_arr(lam, f) for f in arrows for lam in F.fam(C.cod(f))},
        }
    if D is not None:
        sets = {(a, lam): tuple(D.dhom(a, lam)) for a in C.objects for lam in F.fam(a)}
        apply = {}
        for (a, lam), phis in sets.items():
            for f in _arrows_into(C, a):
                for phi in phis:
                    apply[(lam, phi, f)] = D.apply(lam, phi, f)
        out["dep"] = {"construction": names.get("dep", D.name), "sets": sets, "apply": apply}
    if DS is not None:
        out["depsigma"] = {
            "construction": names.get("depsigma", DS.name),
            "pr2": {(a, lam): DS.pr2(a, lam) for a in C.objects for lam in F.fam(a)},
        }
    return out


# ---------------------------------------------------------------------------
# serialization


def _emit(doc_dict: dict) -> str:
    """Sorted-key JSON with one table row per line."""
    lines = ["{"]
    keys = sorted(doc_dict)
    for ki, key in enumerate(keys):
        value = doc_dict[key]
        tail = "," if ki < len(keys) - 1 else ""
        if isinstance(value, dict) and value:
            lines.append(f"  {json.dumps(key)}: {{")
            sub = sorted(value)
            for si, sk in enumerate(sub):
                sv = value[sk]
                stail = "," if si < len(sub) - 1 else ""
                if isinstance(sv, list) and sv:
                    lines.append(f"    {json.dumps(sk)}: [")
                    for ri, row in enumerate(sv):
                        rtail = "," if ri < len(sv) - 1 else ""
                        lines.append(f"      {_canon(row)}{rtail}")
                    lines.append(f"    ]{stail}")
                else:
                    lines.append(f"    {json.dumps(sk)}: {_canon(sv)}{stail}")
            lines.append(f"  }}{tail}")
        else:
            lines.append(f"  {json.dumps(key)}: {_canon(value)}{tail}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(doc: StructureDocument) -> bytes:
    return _emit(doc.to_dict()).encode("utf-8")


def _need(mapping, key, where):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ParseError(f"missing field {key!r} in {where}")
    return mapping[key]


def _check_id(value, valid, what):
    if value not in valid:
        raise IntegrityError(f"dangling {what} id {value!r}")
    return value


def deserialize(data: bytes | str) -> StructureDocument:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc.reason}", 1, exc.start + 1) from None
    else:
        text = data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise ParseError("top level must be an object", 1, 1)
    version = _need(raw, "version", "document")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {version!r}")
    cat = _need(raw, "category", "document")
    try:
        objects = [(int(i), str(n)) for i, n in _need(cat, "objects", "category")]
        arrows = [(int(i), str(n), int(d), int(c)) for i, n, d, c in _need(cat, "arrows", "category")]
        idents = [(int(a), int(f)) for a, f in _need(cat, "identities", "category")]
        comp = [(int(g), int(f), int(h)) for g, f, h in _need(cat, "composition", "category")]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed category section: {exc}") from None
    if [i for i, _ in objects] != list(range(len(objects))):
        raise IntegrityError("object ids must be 0..n-1 in order")
    if [i for i, *_ in arrows] != list(range(len(arrows))):
        raise IntegrityError("arrow ids must be 0..n-1 in order")
    obj_ids, arrow_ids = set(range(len(objects))), set(range(len(arrows)))
    for _, _, d, c in arrows:
        _check_id(d, obj_ids, "object")
        _check_id(c, obj_ids, "object")
    ident = [None] * len(objects)
    for a, f in idents:
        ident[_check_id(a, obj_ids, "object")] = _check_id(f, arrow_ids, "arrow")
    if any(v is None for v in ident):
        raise IntegrityError("every object needs an identity")
    for g, f, h in comp:
        _check_id(g, arrow_ids, "arrow"), _check_id(f, arrow_ids, "arrow"), _check_id(h, arrow_ids, "arrow")
    C = FinCat(
        [n for _, n in objects], [(n, d, c) for _, n, d, c in arrows], ident, {(g, f): h for g, f, h in comp}
    )
    kind = _need(raw, "kind", "document")
    params = _need(raw, "params", "document")
    from .instances import upgrade_category

    C = upgrade_category(kind, params, C)
    doc = StructureDocument(kind, params, C, notes=tuple(raw.get("notes", ())))
    try:
        _load_layers(doc, raw, obj_ids, arrow_ids)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, (IntegrityError, ParseError)):
            raise
        raise ParseError(f"malformed layer: {exc}") from None
    return doc


def _load_layers(doc, raw, obj_ids, arrow_ids):
    if "fam" in raw:
        sec = raw["fam"]
        sets = {_check_id(a, obj_ids, "object"): tuple(_freeze(v)) for a, v in _need(sec, "sets", "fam")}
        members = {a: set(v) for a, v in sets.items()}
        restrict = {}
        for lam, f, v in _need(sec, "restrict", "fam"):
            lam, v = _freeze(lam), _freeze(v)
            _check_id(f, arrow_ids, "arrow")
            if lam not in members.get(doc.category.cod(f), ()):
                raise IntegrityError(f"dangling family id {lam!r} in fam.restrict")
            restrict[(lam, f)] = v
        doc.fam = {"construction": _need(sec, "construction", "fam"), "sets": sets, "restrict": restrict}
    if "sigma" in raw:
        if doc.fam is None:
            raise IntegrityError("sigma layer references a missing fam layer")
        sec = raw["sigma"]
        table = {}
        for name in ("obj", "pr1"):
            valid = obj_ids if name == "obj" else arrow_ids
            table[name] = {
                (_check_id(a, obj_ids, "object"), _freeze(lam)): _check_id(v, valid, "object" if name == "obj" else "arrow")
                for a, lam, v in _need(sec, name, "sigma")
            }
        table["arr"] = {
            (_freeze(lam), _check_id(f, arrow_ids, "arrow")): _check_id(v, arrow_ids, "arrow")
            for lam, f, v in _need(sec, "arr", "sigma")
        }
        doc.sigma = {"construction": _need(sec, "construction", "sigma"), **table}
    if "dep" in raw:
        if doc.fam is None:
            raise IntegrityError("dep layer references a missing fam layer")
        sec = raw["dep"]
        sets = {(_check_id(a, obj_ids, "object"), _freeze(lam)): tuple(_freeze(v)) for a, lam, v in _need(sec, "sets", "dep")}
        app = {
            (_freeze(lam), _freeze(phi), _check_id(f, arrow_ids, "arrow")): _freeze(v)
            for lam, phi, f, v in _need(sec, "apply", "dep")
        }
        doc.dep = {"construction": _need(sec, "construction", "dep"), "sets": sets, "apply": app}
    if "depsigma" in raw:
        if doc.sigma is None or doc.dep is None:
            raise IntegrityError("depsigma layer references missing sigma/dep layers")
        sec = raw["depsigma"]
        doc.depsigma = {
            "construction": _need(sec, "construction", "depsigma"),
            "pr2": {(_check_id(a, obj_ids, "object"), _freeze(lam)): _freeze(v) for a, lam, v in _need(sec, "pr2", "depsigma")},
        }


def load(path) -> StructureDocument:
    with open(path, "rb") as fh:
        return deserialize(fh.read())


def save(doc: StructureDocument, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(doc))
