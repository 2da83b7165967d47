"""Pure-Python (numpy) versions of the hot loops.

Every function here has a twin with the same signature and the same
canonical-order results in the compiled ``_kernels`` extension.  Arrow and
object ids are dense non-negative ints; ``comp[g, f]`` is ``g o f`` or -1.
"""

from __future__ import annotations

import numpy as np

# status codes shared with the compiled kernels
UNIQUENESS = 1
EXISTENCE = 2


def assoc_defect(comp):
    """First triple ``(h, g, f)`` with ``h(gf) != (hg)f``, or None."""
    comp = np.asarray(comp)
    n = comp.shape[0]
    for h in range(n):
        row_h = comp[h]
        for g in np.flatnonzero(row_h >= 0):
            hg = row_h[g]
            fs = np.flatnonzero(comp[g] >= 0)
            if fs.size == 0:
                continue
            gf = comp[g, fs]
            lhs = comp[h, gf]
            rhs = comp[hg, fs] if hg >= 0 else np.full(fs.size, -1)
            bad = np.flatnonzero(lhs != rhs)
            if bad.size:
                return (int(h), int(g), int(fs[bad[0]]))
    return None


def _positions(n, hom):
    pos = np.full(n, -1, dtype=np.int64)
    pos[np.asarray(hom, dtype=np.int64)] = np.arange(len(hom))
    return pos


def universal_defect(comp, hom_p, hom_x, hom_y, leg_x, leg_y, f, g):
    """Check that mediators ``m in hom_p`` biject onto commuting cones.

    A cone is a pair ``(x, y)`` from ``hom_x`` x ``hom_y`` with
    ``f o x == g o y`` (every pair when ``f < 0``, i.e. for products).  A
    mediator ``m`` is sent to ``(leg_x o m, leg_y o m)``.  Returns None when
    every cone has exactly one mediator, else ``(code, x, y, m1, m2)`` for
    the first bad cone in (x, y) order; ``m1, m2`` are -1 when unused.
    """
    comp = np.asarray(comp)
    n = comp.shape[0]
    hom_p = np.asarray(hom_p, dtype=np.int64)
    hom_x = np.asarray(hom_x, dtype=np.int64)
    hom_y = np.asarray(hom_y, dtype=np.int64)
    nx, ny = hom_x.size, hom_y.size
    if nx == 0 or ny == 0:
        return None
    if f < 0:
        cone = np.ones((nx, ny), dtype=bool)
    else:
        cone = comp[f, hom_x][:, None] == comp[g, hom_y][None, :]
    counts = np.zeros(nx * ny, dtype=np.int64)
    keys = np.empty(0, dtype=np.int64)
    if hom_p.size:
        px = _positions(n, hom_x)[comp[leg_x, hom_p]]
        py = _positions(n, hom_y)[comp[leg_y, hom_p]]
        valid = (px >= 0) & (py >= 0)
        keys = np.where(valid, px * ny + py, -1)
        counts = np.bincount(keys[valid], minlength=nx * ny)
    bad = np.flatnonzero(cone.ravel() & (counts != 1))
    if bad.size == 0:
        return None
    k = int(bad[0])
    x, y = int(hom_x[k // ny]), int(hom_y[k % ny])
    if counts[k] == 0:
        return (EXISTENCE, x, y, -1, -1)
    ms = hom_p[np.flatnonzero(keys == k)]
    return (UNIQUENESS, x, y, int(ms[0]), int(ms[1]))


def mono_defect(comp, hom_d, f):
    """First pair ``(g, h)``, g before h in ``hom_d``, with ``f g == f h``."""
    comp = np.asarray(comp)
    seen = {}
    for h in hom_d:
        img = int(comp[f, h])
        if img < 0:
            continue
        if img in seen:
            return (seen[img], int(h))
        seen[img] = int(h)
    return None


def finset_product_defect(a, b, d, pa, pb, chunk=1 << 20):
    """Universal property of a candidate product apex ``P = len(pa)`` in FinSet.

    Arrows ``d -> k`` are base-``k`` codes, digit ``j`` being the image of
    ``j``.  ``pa``/``pb`` are the projection tables ``P -> a`` and ``P -> b``.
    Every ``m: d -> P`` is sent to the cone ``(pa o m, pb o m)``; the check
    is that this is a bijection onto ``hom(d, a) x hom(d, b)``.  Returns None
    or ``(code, xcode, ycode, m1code, m2code)`` like :func:`universal_defect`.
    """
    pa = np.asarray(pa, dtype=np.int64)
    pb = np.asarray(pb, dtype=np.int64)
    p = pa.size
    n_m = p**d
    n_y = b**d
    n_cones = (a**d) * n_y
    if n_cones == 0:
        return None
    first = np.full(n_cones, -1, dtype=np.int64)
    dup = None
    wa = a ** np.arange(d, dtype=np.int64)
    wb = b ** np.arange(d, dtype=np.int64)
    for start in range(0, n_m, chunk):
        codes = np.arange(start, min(start + chunk, n_m), dtype=np.int64)
        xc = np.zeros(codes.size, dtype=np.int64)
        yc = np.zeros(codes.size, dtype=np.int64)
        rest = codes.copy()
        for j in range(d):
            digit = rest % p
            rest //= p
            xc += pa[digit] * wa[j]
            yc += pb[digit] * wb[j]
        keys = xc * n_y + yc
        order = np.argsort(keys, kind="stable")
        sk = keys[order]
        # duplicates inside the chunk
        same = np.flatnonzero(sk[1:] == sk[:-1])
        for s in same:
            k = int(sk[s])
            cand = (k, int(codes[order[s]]), int(codes[order[s + 1]]))
            if first[k] >= 0:
                cand = (k, int(first[k]), int(codes[order[s]]))
            if dup is None or cand[0] < dup[0]:
                dup = cand
        uk, ui = np.unique(keys, return_index=True)
        clash = first[uk] >= 0
        for k, i in zip(uk[clash], ui[clash]):
            cand = (int(k), int(first[k]), int(codes[i]))
            if dup is None or cand[0] < dup[0]:
                dup = cand
        fresh = ~clash
        first[uk[fresh]] = codes[ui[fresh]]
    missing = np.flatnonzero(first < 0)
    k_missing = int(missing[0]) if missing.size else None
    if dup is None and k_missing is None:
        return None
    if dup is not None and (k_missing is None or dup[0] < k_missing):
        k, m1, m2 = dup
        return (UNIQUENESS, k // n_y, k % n_y, m1, m2)
    return (EXISTENCE, k_missing // n_y, k_missing % n_y, -1, -1)
