# cython: language_level=3
# Compiled twin of _kernels_py.  Coefficients stay Python ints (they exceed
# 64 bits for large moduli), so the win here is loop and indexing overhead.

BACKEND = "cython"


def poly_mul_reduce(a, b, red_rows, modulus=None):
    cdef Py_ssize_t d = len(a)
    cdef Py_ssize_t n = 2 * d - 1
    cdef Py_ssize_t i, j, m
    cdef object ai, bj, cm, ri
    c = [0] * n
    for i in range(d):
        ai = a[i]
        if not ai:
            continue
        for j in range(d):
            bj = b[j]
            if bj:
                c[i + j] = c[i + j] + ai * bj
    out = c[:d]
    for m in range(d, n):
        cm = c[m]
        if cm:
            row = red_rows[m - d]
            for i in range(d):
                ri = row[i]
                if ri:
                    out[i] = out[i] + cm * ri
    if modulus is not None:
        for i in range(d):
            out[i] = out[i] % modulus
    return out


def tower_mul(amat, bmat, grows, erows, modulus):
    cdef Py_ssize_t e = len(amat)
    cdef Py_ssize_t f = len(amat[0])
    cdef Py_ssize_t j1, j2, i1, i2, m, i, j
    cdef object ai, bi, cm, gi, cj, ri
    scratch = [[0] * (2 * f - 1) for _ in range(2 * e - 1)]
    for j1 in range(e):
        arow = amat[j1]
        for j2 in range(e):
            brow = bmat[j2]
            row = scratch[j1 + j2]
            for i1 in range(f):
                ai = arow[i1]
                if not ai:
                    continue
                for i2 in range(f):
                    bi = brow[i2]
                    if bi:
                        row[i1 + i2] = row[i1 + i2] + ai * bi
    reduced = []
    for row in scratch:
        out = row[:f]
        for m in range(f, 2 * f - 1):
            cm = row[m]
            if cm:
                g = grows[m - f]
                for i in range(f):
                    gi = g[i]
                    if gi:
                        out[i] = out[i] + cm * gi
        reduced.append(out)
    out = reduced[:e]
    for m in range(e, 2 * e - 1):
        row = reduced[m]
        er = erows[m - e]
        for j in range(e):
            cj = er[j]
            if not cj:
                continue
            tgt = out[j]
            for i in range(f):
                ri = row[i]
                if ri:
                    tgt[i] = tgt[i] + cj * ri
    return [[x % modulus for x in row] for row in out]
