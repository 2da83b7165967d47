"""Sigma-object structures on family structures.

For ``lam in fHom(a)`` a :class:`SigmaStruct` gives an object ``Sigma_a lam``,
a first projection ``pr1: Sigma_a lam -> a`` and, for ``f: b -> a``, an arrow
``Sigma_lam f: Sigma_b (lam o f) -> Sigma_a lam``.  The square

    Sigma_b(lam f) --Sigma_lam f--> Sigma_a lam
          |pr1                          |pr1
          v                             v
          b ------------ f -----------> a

must be a pullback, strictly functorial in ``f``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable

from .errors import DepcatError, MissingSigmaObject, NoTerminalObject, NotEqualElements, TypeMismatch
from .famcat import FamStruct, WeakFamStruct, _arrows_into, label
from .fincat import PullbackWitness, is_mono, is_pullback, require_product, require_terminal
from .report import LawReport, LawTally, make_report


class SigmaStruct:
    """``sigma_obj(a, lam)``, ``pr1(a, lam)``, ``sigma_arr(lam, f)`` over a family structure.

    The three maps are callables; results are cached.  ``overrides`` maps
    ``("obj" | "pr1", (a, lam))`` or ``("arr", (lam, f))`` to a replacement
    value for mutation tests.
    """

    def __init__(
        self,
        fam: FamStruct,
        sigma_obj: Callable,
        pr1: Callable,
        sigma_arr: Callable,
        *,
        name: str = "sigma",
        overrides: Mapping | None = None,
    ):
        self.fam = fam
        self.base = fam.base
        self.name = name
        self._obj, self._pr1, self._arr = sigma_obj, pr1, sigma_arr
        self.overrides = dict(overrides or {})
        self._cache: dict = {}

    def _get(self, kind, key, fn):
        k = (kind, key)
        if k in self.overrides:
            return self.overrides[k]
        if k not in self._cache:
            self._cache[k] = fn(*key)
        return self._cache[k]

    def _family(self, a, lam):
        if not self.fam.contains(a, lam):
            raise TypeMismatch(f"{lam!r} is not a family-arrow on {self.base.obj_names[a]}")

    def sigma_obj(self, a, lam):
        self._family(a, lam)
        return self._get("obj", (a, lam), self._obj)

    def pr1(self, a, lam):
        self._family(a, lam)
        return self._get("pr1", (a, lam), self._pr1)

    def sigma_arr(self, lam, f):
        self._family(self.base.cod(f), lam)
        return self._get("arr", (lam, f), self._arr)

    def square(self, lam, f) -> PullbackWitness:
        """The structure's own square for ``(lam, f)`` as a pullback witness."""
        C = self.base
        b = C.dom(f)
        lf = self.fam.restrict(lam, f)
        return PullbackWitness(
            C, f, self.pr1(C.cod(f), lam), self.sigma_obj(b, lf), self.pr1(b, lf), self.sigma_arr(lam, f)
        )

    def mutated(self, kind: str, key, value) -> "SigmaStruct":
        ov = dict(self.overrides)
        ov[(kind, key)] = value
        S = SigmaStruct(self.fam, self._obj, self._pr1, self._arr, name=self.name, overrides=ov)
        S.__dict__.update({k: v for k, v in self.__dict__.items() if k not in S.__dict__})
        return S

    def __repr__(self):
        return f"SigmaStruct({self.name!r} over {self.fam!r})"


def check_sigma_laws(S: SigmaStruct, suite: str = "sigma") -> LawReport:
    """Typing, commuting square, pullback, (s1) and (s2) for every instance."""
    C, F = S.base, S.fam
    typing = LawTally(suite, "sigma.typing")
    square = LawTally(suite, "sigma.square")
    pb = LawTally(suite, "sigma.pullback")
    s1 = LawTally(suite, "s1")
    s2 = LawTally(suite, "s2")
    tallies = [typing, square, pb, s1, s2]
    into = {a: list(_arrows_into(C, a)) for a in C.objects}

    for a in C.objects:
        for lam in F.fam(a):
            p = S.pr1(a, lam)
            typing.check(
                C.dom(p) == S.sigma_obj(a, lam) and C.cod(p) == a, ("pr1", C.obj_names[a], lam), "pr1 mistyped"
            )
            for f in into[a]:
                b = C.dom(f)
                lf = F.restrict(lam, f)
                arr = S.sigma_arr(lam, f)
                typing.check(
                    C.dom(arr) == S.sigma_obj(b, lf) and C.cod(arr) == S.sigma_obj(a, lam),
                    ("sigma_arr", lam, label(C, f)),
                    "Sigma_lam f mistyped",
                )
    if typing.failed:
        return make_report(suite, tallies)

    for a in C.objects:
        for lam in F.fam(a):
            p = S.pr1(a, lam)
            s1.check(
                S.sigma_arr(lam, C.identity(a)) == C.identity(S.sigma_obj(a, lam)),
                (lam, label(C, C.identity(a))),
                "Sigma_lam 1 != 1",
            )
            for f in into[a]:
                b = C.dom(f)
                lf = F.restrict(lam, f)
                arr = S.sigma_arr(lam, f)
                q = S.pr1(b, lf)
                w = (lam, label(C, f))
                if not square.check(C.compose(p, arr) == C.compose(f, q), w, "pr1 o Sigma_lam f != f o pr1"):
                    continue
                res = is_pullback(C, f, p, q, arr)
                if res.ok:
                    pb.ok()
                else:
                    cone = res.cone
                    pb.fail(
                        w + ((C.obj_names[cone[0]], label(C, cone[1]), label(C, cone[2])),),
                        res.reason,
                    )
                for g in into[b]:
                    lhs = S.sigma_arr(lam, C.compose(f, g))
                    rhs = C.compose(arr, S.sigma_arr(lf, g))
                    s2.check(lhs == rhs, (lam, label(C, f), label(C, g)), f"{label(C, lhs)} != {label(C, rhs)}")
    return make_report(suite, tallies)


# ---------------------------------------------------------------------------
# constructions


def trivial_sigma(F: FamStruct) -> SigmaStruct:
    C = F.base
    return SigmaStruct(F, lambda a, lam: a, lambda a, lam: C.identity(a), lambda lam, f: f, name="trivial")


def product_sigma(C, F: FamStruct | None = None) -> SigmaStruct:
    """``Sigma_a b = a x b`` with ``pr1 = pr_a`` and ``Sigma_b f = f x 1_b`` over the constant family."""
    from .famcat import constant_fam

    F = F or constant_fam(C)
    products: dict = {}

    def prod(a, b):
        if (a, b) not in products:
            products[(a, b)] = require_product(C, a, b)
        return products[(a, b)]

    def arr(b, f):
        c, a = C.dom(f), C.cod(f)
        src, dst = prod(c, b), prod(a, b)
        return dst.pairing(C.compose(f, src.pr_a), src.pr_b)

    S = SigmaStruct(F, lambda a, b: prod(a, b).apex, lambda a, b: prod(a, b).pr_a, arr, name="product")
    S.product = prod
    return S


def ring_sigma(C) -> SigmaStruct:
    """On the ring family structure: ``pr1 = a b``, ``Sigma_(a,b) c = c (1 + c + b + a)``."""
    from .famcat import ring_fam

    R = C.ring
    F = ring_fam(C)

    def pr1(_, lam):
        a, b = lam
        return R.times(a, b)

    def arr(lam, c):
        a, b = lam
        s = R.plus(R.plus(R.plus(R.one, c), b), a)
        return R.times(c, s)

    return SigmaStruct(F, lambda a, lam: 0, pr1, arr, name="ring")


def finset_index(lam, i, x) -> int:
    """Position of ``(i, x)`` in the lexicographic disjoint union of the fibres ``lam``."""
    return sum(lam[:i]) + x


def finset_decode(lam, k):
    """Inverse of :func:`finset_index`."""
    for i, n in enumerate(lam):
        if k < n:
            return i, k
        k -= n
    raise IndexError(k)


def finset_sigma(F: FamStruct) -> SigmaStruct:
    """Disjoint unions in the FinSet skeleton, indexed lexicographically by ``(i, x)``."""
    C = F.base
    for a in C.objects:
        for lam in F.fam(a):
            if sum(lam) not in C.sizes:
                raise MissingSigmaObject(
                    f"family {lam} on {C.obj_names[a]} needs a sum object of size {sum(lam)}, "
                    f"largest object has size {max(C.sizes)}"
                )

    def obj(a, lam):
        return C.object_of_size(sum(lam))

    def pr1(a, lam):
        table = tuple(i for i, n in enumerate(lam) for _ in range(n))
        return C.arrow_of(obj(a, lam), a, table)

    def arr(lam, f):
        t = C.table(f)
        lf = tuple(lam[v] for v in t)
        table = tuple(finset_index(lam, t[j], x) for j, n in enumerate(lf) for x in range(n))
        return C.arrow_of(obj(C.dom(f), lf), obj(C.cod(f), lam), table)

    return SigmaStruct(F, obj, pr1, arr, name="finset")


def weak_slice_sigma(W: WeakFamStruct) -> SigmaStruct:
    """``Sigma_a lam = dom lam``, ``pr1 = lam``, ``Sigma_lam f`` the chosen pullback leg.

    Pullback squares hold by construction; strictness generally does not.
    """
    C = W.base
    F = W.as_fam()
    return SigmaStruct(
        F, lambda a, lam: C.dom(lam), lambda a, lam: lam, lambda lam, f: W.witnesses[(lam, f)].leg_left, name="slice"
    )


# ---------------------------------------------------------------------------
# transport arrows


@dataclass
class TransportPair:
    lam_ij: object
    lam_ji: object
    defects: list = field(default_factory=list)  # (law, detail)

    @property
    def ok(self) -> bool:
        return not self.defects


def transport(S: SigmaStruct, lam, i, j) -> TransportPair:
    """Mediators between ``Sigma_1 lam(i)`` and ``Sigma_1 lam(j)`` for equal elements ``i = j``."""
    C, F = S.base, S.fam
    t = require_terminal(C)
    one = t.obj
    if C.dom(i) != one or C.dom(j) != one:
        raise NoTerminalObject("transport needs global elements")
    if i != j:
        raise NotEqualElements(f"{label(C, i)} != {label(C, j)}")
    li, lj = F.restrict(lam, i), F.restrict(lam, j)
    si, sj = S.sigma_obj(one, li), S.sigma_obj(one, lj)
    defects = []
    if not is_mono(C, S.sigma_arr(lam, i)):
        defects.append(("transp.sub", "Sigma_lam i is not mono"))
    if S.pr1(one, li) != t.bang.get(si):
        defects.append(("transp.sub", "pr1 over 1 is not the unique arrow to 1"))
    try:
        lam_ji = S.square(lam, i).mediator(t.bang[sj], S.sigma_arr(lam, j))
        lam_ij = S.square(lam, j).mediator(t.bang[si], S.sigma_arr(lam, i))
    except DepcatError as exc:
        defects.append(("transp.iso", f"no transport: {exc}"))
        return TransportPair(None, None, defects)
    if C.compose(lam_ij, lam_ji) != C.identity(sj) or C.compose(lam_ji, lam_ij) != C.identity(si):
        defects.append(("transp.iso", "transports are not mutually inverse"))
    if C.compose(S.sigma_arr(lam, i), lam_ji) != S.sigma_arr(lam, j):
        defects.append(("transp.iso", "Sigma_lam i o lam_ji != Sigma_lam j"))
    if C.compose(S.sigma_arr(lam, j), lam_ij) != S.sigma_arr(lam, i):
        defects.append(("transp.iso", "Sigma_lam j o lam_ij != Sigma_lam i"))
    return TransportPair(lam_ij, lam_ji, defects)


def check_transport(S: SigmaStruct, suite: str = "transport") -> LawReport:
    """Every family-arrow and every global element, with ``j = i``."""
    from .fincat import global_elements

    C, F = S.base, S.fam
    iso = LawTally(suite, "transp.iso")
    sub = LawTally(suite, "transp.sub")
    for a in C.objects:
        for i in global_elements(C, a):
            for lam in F.fam(a):
                tp = transport(S, lam, i, i)
                w = (lam, label(C, i))
                got = {law for law, _ in tp.defects}
                for tally in (iso, sub):
                    if tally.law in got:
                        tally.fail(w, next(d for law, d in tp.defects if law == tally.law))
                    else:
                        tally.ok()
    return make_report(suite, [iso, sub])


def check_sigma_counts(S: SigmaStruct, suite: str = "counts", size=None) -> LawReport:
    """FinSet oracle: ``|Sigma_I lam| = sum of the fibres``, by disjoint-union enumeration."""
    C, F = S.base, S.fam
    size = size or C.size
    tally = LawTally(suite, "count.sigma")
    for a in C.objects:
        for lam in F.fam(a):
            brute = sum(1 for i in range(size(a)) for _ in range(lam[i]))
            got = size(S.sigma_obj(a, lam))
            tally.check(got == brute, (C.obj_names[a], lam), f"{got} != {brute}")
    return make_report(suite, [tally])


__all__ = [
    "SigmaStruct",
    "check_sigma_laws",
    "trivial_sigma",
    "product_sigma",
    "ring_sigma",
    "finset_sigma",
    "finset_index",
    "finset_decode",
    "weak_slice_sigma",
    "TransportPair",
    "transport",
    "check_transport",
    "check_sigma_counts",
]
