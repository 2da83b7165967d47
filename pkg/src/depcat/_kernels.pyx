# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport calloc, malloc, free
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()

UNIQUENESS = 1
EXISTENCE = 2


def assoc_defect(comp_in):
    cdef const cnp.int32_t[:, ::1] comp = np.ascontiguousarray(comp_in, dtype=np.int32)
    cdef Py_ssize_t n = comp.shape[0]
    cdef Py_ssize_t h, g, f
    cdef int hg, gf, lhs, rhs
    for h in range(n):
        for g in range(n):
            hg = comp[h, g]
            if hg < 0:
                continue
            for f in range(n):
                gf = comp[g, f]
                if gf < 0:
                    continue
                lhs = comp[h, gf]
                rhs = comp[hg, f]
                if lhs != rhs:
                    return (int(h), int(g), int(f))
    return None


def universal_defect(comp_in, hom_p_in, hom_x_in, hom_y_in,
                     int leg_x, int leg_y, int f, int g):
    cdef const cnp.int32_t[:, ::1] comp = np.ascontiguousarray(comp_in, dtype=np.int32)
    cdef const cnp.int64_t[::1] hom_p = np.ascontiguousarray(hom_p_in, dtype=np.int64)
    cdef const cnp.int64_t[::1] hom_x = np.ascontiguousarray(hom_x_in, dtype=np.int64)
    cdef const cnp.int64_t[::1] hom_y = np.ascontiguousarray(hom_y_in, dtype=np.int64)
    cdef Py_ssize_t n = comp.shape[0]
    cdef Py_ssize_t nx = hom_x.shape[0], ny = hom_y.shape[0], npp = hom_p.shape[0]
    cdef Py_ssize_t i, j, k, m
    if nx == 0 or ny == 0:
        return None
    cdef cnp.int64_t[::1] posx = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] posy = np.full(n, -1, dtype=np.int64)
    for i in range(nx):
        posx[hom_x[i]] = i
    for j in range(ny):
        posy[hom_y[j]] = j
    cdef cnp.int64_t[::1] count = np.zeros(nx * ny, dtype=np.int64)
    cdef cnp.int64_t[::1] m1 = np.full(nx * ny, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] m2 = np.full(nx * ny, -1, dtype=np.int64)
    cdef Py_ssize_t px, py
    for i in range(npp):
        m = hom_p[i]
        px = posx[comp[leg_x, m]] if comp[leg_x, m] >= 0 else -1
        py = posy[comp[leg_y, m]] if comp[leg_y, m] >= 0 else -1
        if px < 0 or py < 0:
            continue
        k = px * ny + py
        count[k] += 1
        if m1[k] < 0:
            m1[k] = m
        elif m2[k] < 0:
            m2[k] = m
    cdef bint is_cone
    for i in range(nx):
        for j in range(ny):
            if f < 0:
                is_cone = True
            else:
                is_cone = comp[f, hom_x[i]] == comp[g, hom_y[j]]
            if not is_cone:
                continue
            k = i * ny + j
            if count[k] == 0:
                return (EXISTENCE, int(hom_x[i]), int(hom_y[j]), -1, -1)
            if count[k] > 1:
                return (UNIQUENESS, int(hom_x[i]), int(hom_y[j]), int(m1[k]), int(m2[k]))
    return None


def mono_defect(comp_in, hom_d_in, int f):
    cdef const cnp.int32_t[:, ::1] comp = np.ascontiguousarray(comp_in, dtype=np.int32)
    cdef const cnp.int64_t[::1] hom_d = np.ascontiguousarray(hom_d_in, dtype=np.int64)
    cdef Py_ssize_t n = comp.shape[0], i, nd = hom_d.shape[0]
    cdef cnp.int64_t[::1] seen = np.full(n, -1, dtype=np.int64)
    cdef int img
    for i in range(nd):
        img = comp[f, hom_d[i]]
        if img < 0:
            continue
        if seen[img] >= 0:
            return (int(seen[img]), int(hom_d[i]))
        seen[img] = hom_d[i]
    return None


def finset_product_defect(int a, int b, int d, pa_in, pb_in, chunk=None):
    cdef const cnp.int64_t[::1] pa = np.ascontiguousarray(pa_in, dtype=np.int64)
    cdef const cnp.int64_t[::1] pb = np.ascontiguousarray(pb_in, dtype=np.int64)
    cdef int p = pa.shape[0]
    cdef int64_t n_y = 1, n_x = 1, n_m = 1
    cdef int j
    for j in range(d):
        n_y *= b
        n_x *= a
        n_m *= p
    cdef int64_t n_cones = n_x * n_y
    if n_cones == 0:
        return None
    cdef uint8_t *seen = <uint8_t *> calloc((n_cones >> 3) + 1, 1)
    cdef int *digit = <int *> calloc(d + 1, sizeof(int))
    cdef int64_t *wa = <int64_t *> malloc((d + 1) * sizeof(int64_t))
    cdef int64_t *wb = <int64_t *> malloc((d + 1) * sizeof(int64_t))
    if seen == NULL or digit == NULL or wa == NULL or wb == NULL:
        free(seen); free(digit); free(wa); free(wb)
        raise MemoryError()
    wa[0] = 1
    wb[0] = 1
    for j in range(1, d + 1):
        wa[j] = wa[j - 1] * a
        wb[j] = wb[j - 1] * b
    cdef int64_t xc = 0, yc = 0, code, key
    cdef int64_t dup_key = -1
    cdef int v
    for j in range(d):
        xc += pa[0] * wa[j]
        yc += pb[0] * wb[j]
    try:
        code = 0
        while code < n_m:
            key = xc * n_y + yc
            if seen[key >> 3] & (1 << (key & 7)):
                if dup_key < 0 or key < dup_key:
                    dup_key = key
            else:
                seen[key >> 3] |= <uint8_t> (1 << (key & 7))
            code += 1
            # odometer increment with incremental leg codes
            j = 0
            while j < d:
                v = digit[j]
                if v + 1 < p:
                    digit[j] = v + 1
                    xc += (pa[v + 1] - pa[v]) * wa[j]
                    yc += (pb[v + 1] - pb[v]) * wb[j]
                    break
                digit[j] = 0
                xc += (pa[0] - pa[v]) * wa[j]
                yc += (pb[0] - pb[v]) * wb[j]
                j += 1
            if d == 0:
                break
        missing = -1
        for key in range(n_cones):
            if not (seen[key >> 3] & (1 << (key & 7))):
                missing = key
                break
    finally:
        free(seen); free(digit); free(wa); free(wb)
    if dup_key < 0 and missing < 0:
        return None
    if dup_key >= 0 and (missing < 0 or dup_key < missing):
        m1, m2 = _mediators_for(a, b, d, pa_in, pb_in, dup_key, n_y)
        return (UNIQUENESS, int(dup_key // n_y), int(dup_key % n_y), m1, m2)
    return (EXISTENCE, int(missing // n_y), int(missing % n_y), -1, -1)


def _mediators_for(a, b, d, pa, pb, key, n_y):
    # rare path: rescan to name the two smallest mediators of one cone
    p = len(pa)
    found = []
    for code in range(p ** d):
        xc = yc = 0
        rest = code
        for j in range(d):
            v = rest % p
            rest //= p
            xc += int(pa[v]) * a ** j
            yc += int(pb[v]) * b ** j
        if xc * n_y + yc == key:
            found.append(code)
            if len(found) == 2:
                break
    return found[0], found[1]
