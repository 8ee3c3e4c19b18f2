"""Brute-force reference computations, deliberately independent of lieverify.

Nothing here imports the package; each function recomputes a quantity by
direct enumeration or through sympy.
"""
import itertools
import math

import sympy


def count_words(degrees, total):
    """Number of ordered words over letters of the given degrees with total degree
    ``total``, by dynamic programming on the last letter."""
    ways = [1] + [0] * total
    for t in range(1, total + 1):
        ways[t] = sum(ways[t - d] for d in degrees if d <= t)
    return ways[total]


def enumerate_words(degrees, total):
    """All ordered words (tuples of letter indices) of total degree ``total``."""
    out = []
    for length in range(1, total + 1):
        for w in itertools.product(range(len(degrees)), repeat=length):
            if sum(degrees[i] for i in w) == total:
                out.append(w)
    return out


def expand_product(factors, cap):
    """Multiply polynomials given as ``{degree: coeff}`` by summing over every
    choice of one term per factor.  Returns ``{degree: coeff}`` truncated at cap."""
    out = {}
    for choice in itertools.product(*[list(f.items()) for f in factors]):
        d = sum(t[0] for t in choice)
        if d <= cap:
            c = math.prod(t[1] for t in choice)
            out[d] = out.get(d, 0) + c
    return {d: c for d, c in sorted(out.items()) if c}


def rational_expansion(expr, cap):
    """Taylor coefficients of a sympy expression in ``t`` up to degree cap."""
    t = sympy.Symbol("t")
    poly = sympy.series(expr, t, 0, cap + 1).removeO()
    coeffs = sympy.Poly(poly, t).all_coeffs()[::-1] if poly != 0 else []
    out = {d: int(c) for d, c in enumerate(coeffs) if c != 0}
    return out


def pbw_monomial_count(dims, cap):
    """Count PBW monomials: choose for each degree-d basis element an exponent,
    at most 1 when d is odd, any when d is even.  Returns ``{degree: count}``."""
    letters = []
    for d, m in sorted(dims.items()):
        letters += [d] * m
    counts = {0: 1}

    def rec(i, deg):
        if i == len(letters):
            return
        d = letters[i]
        top = 1 if d % 2 else cap // d
        for e in range(0, top + 1):
            nd = deg + e * d
            if nd > cap:
                break
            if e:
                counts[nd] = counts.get(nd, 0) + 1
            rec(i + 1, nd)

    # recursion counts each monomial once at the position of its last nonzero exponent
    rec(0, 0)
    return dict(sorted(counts.items()))


def span_size_mod_p(rows, p):
    """Size of the F_p row span of ``rows`` by enumerating all combinations."""
    if not rows:
        return 1
    ncols = len(rows[0])
    seen = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(ncols))
        seen.add(v)
    return len(seen)


def rank_by_enumeration(rows, p):
    size = span_size_mod_p(rows, p)
    r = round(math.log(size, p))
    assert p**r == size
    return r
