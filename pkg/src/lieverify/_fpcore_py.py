"""Pure-Python (numpy) versions of the kernels in ``_fpcore.pyx``.

Same signatures and the same pivot rule, so the two are interchangeable.
"""
import numpy as np


def span_insert(basis, pivots, nrows, v, p):
    for i in range(nrows):
        c = v[pivots[i]]
        if c:
            v -= c * basis[i]
            v %= p
    nz = np.flatnonzero(v)
    if nz.size == 0:
        return -1
    lead = int(nz[0])
    v *= pow(int(v[lead]), -1, p)
    v %= p
    if nrows:
        col = basis[:nrows, lead].copy()
        hit = np.flatnonzero(col)
        if hit.size:
            basis[hit] -= np.outer(col[hit], v)
            basis[hit] %= p
    basis[nrows] = v
    pivots[nrows] = lead
    return lead


def rank_inplace(m, p):
    rows, cols = m.shape
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, col]), -1, p)) % p
        below = m[r + 1:, col]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + r + 1
            m[idx] -= np.outer(m[idx, col], m[r])
            m[idx] %= p
        r += 1
    return r
