# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled F_p elimination kernels.

Entries are int64 residues in [0, p) with p < 2**31, so a product of two
residues fits in a signed 64-bit integer.
"""
from libc.stdint cimport int64_t as i64


cdef inline i64 _inv(i64 a, i64 p):
    # extended Euclid; a is a nonzero residue
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def span_insert(i64[:, ::1] basis, i64[::1] pivots, Py_ssize_t nrows,
                i64[::1] v, i64 p):
    """Reduce ``v`` against the first ``nrows`` rows of a reduced row echelon
    basis.  If a nonzero remainder survives, normalize it, clear its pivot
    column from the existing rows, store it as row ``nrows`` and return its
    pivot column.  Otherwise return -1.  ``v`` is overwritten."""
    cdef Py_ssize_t ncols = v.shape[0]
    cdef Py_ssize_t i, j, lead = -1
    cdef i64 c, neg, inv
    for i in range(nrows):
        c = v[pivots[i]]
        if c != 0:
            neg = p - c
            for j in range(ncols):
                if basis[i, j] != 0:
                    v[j] = (v[j] + neg * basis[i, j]) % p
    for j in range(ncols):
        if v[j] != 0:
            lead = j
            break
    if lead < 0:
        return -1
    inv = _inv(v[lead], p)
    for j in range(lead, ncols):
        if v[j] != 0:
            v[j] = (v[j] * inv) % p
    for i in range(nrows):
        c = basis[i, lead]
        if c != 0:
            neg = p - c
            for j in range(lead, ncols):
                if v[j] != 0:
                    basis[i, j] = (basis[i, j] + neg * v[j]) % p
    for j in range(ncols):
        basis[nrows, j] = v[j]
    pivots[nrows] = lead
    return lead


def rank_inplace(i64[:, ::1] m, i64 p):
    """Gaussian elimination of ``m`` over F_p (destroys ``m``); returns the rank.
    Pivot rule: first column with a nonzero entry, first available row."""
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef i64 inv, c, neg, tmp
    for col in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv(m[r, col], p)
        for j in range(col, cols):
            m[r, j] = (m[r, j] * inv) % p
        for i in range(r + 1, rows):
            c = m[i, col]
            if c != 0:
                neg = p - c
                for j in range(col, cols):
                    if m[r, j] != 0:
                        m[i, j] = (m[i, j] + neg * m[r, j]) % p
        r += 1
    return r
