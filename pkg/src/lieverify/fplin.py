"""Dense linear algebra over a prime field F_p.

The two hot routines (incremental span insertion and rank) come from the
compiled ``_fpcore`` extension when it is importable and from the numpy
fallback ``_fpcore_py`` otherwise.  Set ``LIEVERIFY_PURE_PYTHON=1`` to force
the fallback.  ``KERNEL`` records which one was selected.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import DimensionMismatch, NonPrimeModulus

if os.environ.get("LIEVERIFY_PURE_PYTHON"):
    from . import _fpcore_py as _core

    KERNEL = "python"
else:
    try:
        from . import _fpcore as _core

        KERNEL = "cython"
    except ImportError:
        from . import _fpcore_py as _core

        KERNEL = "python"

# residues times residues must fit in int64
_MAX_P = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if p >= _MAX_P:
        raise NonPrimeModulus(f"modulus {p} too large for int64 kernels")


class FpMatrix:
    """Dense matrix over F_p; entries are stored reduced into ``[0, p)``."""

    def __init__(self, entries, p: int, cols: int | None = None):
        check_prime(p)
        arr = np.asarray(entries, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        self.p = p
        self.entries = np.ascontiguousarray(arr % p)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __repr__(self):
        return f"FpMatrix({self.rows}x{self.cols} over F_{self.p})"


def rank(m: FpMatrix, kernel=None) -> int:
    """Row rank by Gaussian elimination mod p."""
    check_prime(m.p)
    if m.rows == 0 or m.cols == 0:
        return 0
    return int((kernel or _core).rank_inplace(m.entries.copy(), m.p))


class SpanState:
    """Row-reduced basis of a growing subspace of ``F_p^ambient``.

    Rows are kept in reduced row echelon form: every stored row has a 1 in
    its pivot column and every other row is zero there.
    """

    def __init__(self, ambient: int, p: int, kernel=None):
        check_prime(p)
        self.ambient = ambient
        self.p = p
        self.dim = 0
        self._kernel = kernel or _core
        self._rows = np.zeros((4, ambient), dtype=np.int64)
        self._pivots = np.zeros(4, dtype=np.int64)

    @property
    def basis(self) -> np.ndarray:
        return self._rows[: self.dim]

    @property
    def pivots(self) -> list[int]:
        return [int(c) for c in self._pivots[: self.dim]]

    def insert(self, v) -> bool:
        """Add ``v`` to the span; True iff it was not already in it."""
        vec = np.array(v, dtype=np.int64).reshape(-1)
        if vec.shape[0] != self.ambient:
            raise DimensionMismatch(
                f"vector of length {vec.shape[0]} in ambient dimension {self.ambient}"
            )
        vec %= self.p
        if self.dim == self._rows.shape[0]:
            grow = max(4, self.dim)
            self._rows = np.vstack([self._rows, np.zeros((grow, self.ambient), np.int64)])
            self._pivots = np.concatenate([self._pivots, np.zeros(grow, np.int64)])
        lead = self._kernel.span_insert(self._rows, self._pivots, self.dim, vec, self.p)
        if lead < 0:
            return False
        self.dim += 1
        return True

    def contains(self, v) -> bool:
        vec = np.array(v, dtype=np.int64).reshape(-1) % self.p
        for row, piv in zip(self.basis, self._pivots[: self.dim]):
            c = vec[piv]
            if c:
                vec = (vec - c * row) % self.p
        return not vec.any()


def span_insert(state: SpanState, v) -> tuple[SpanState, bool]:
    """Functional spelling of :meth:`SpanState.insert` (mutates ``state``)."""
    inserted = state.insert(v)
    return state, inserted
