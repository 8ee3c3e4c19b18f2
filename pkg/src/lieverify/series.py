"""Truncated formal power series in one variable with exact integer coefficients.

A :class:`PowerSeries` stores ``c_0 .. c_cap``.  Binary operations truncate
to the smaller cap, and equality means agreement up to the smaller cap, so
two series computed at different precisions compare the way graded
identities are meant to be compared.

Python integers are arbitrary precision, so no coefficient can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import InvalidParameters, NonUnitConstantTerm

DEFAULT_CAP = 60

EXTERIOR = "exterior"
POLYNOMIAL = "polynomial"


@dataclass(frozen=True, eq=False)
class PowerSeries:
    cap: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.cap < 0:
            raise InvalidParameters(f"cap must be non-negative, got {self.cap}")
        if len(self.coeffs) != self.cap + 1:
            raise InvalidParameters(
                f"expected {self.cap + 1} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]], cap: int) -> PowerSeries:
        """Build a series from ``{degree: coefficient}``; terms above cap are dropped."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        c = [0] * (cap + 1)
        for d, v in items:
            if d < 0:
                raise InvalidParameters(f"negative degree {d}")
            if d <= cap:
                c[d] += v
        return cls(cap, tuple(c))

    @classmethod
    def zero(cls, cap: int = DEFAULT_CAP) -> PowerSeries:
        return cls(cap, (0,) * (cap + 1))

    @classmethod
    def one(cls, cap: int = DEFAULT_CAP) -> PowerSeries:
        return cls.monomial(0, cap)

    @classmethod
    def monomial(cls, degree: int, cap: int = DEFAULT_CAP, coeff: int = 1) -> PowerSeries:
        return cls.from_terms({degree: coeff}, cap)

    # -- access -----------------------------------------------------------

    def __getitem__(self, d: int) -> int:
        if d < 0:
            raise IndexError(d)
        return self.coeffs[d] if d <= self.cap else 0

    def truncate(self, cap: int) -> PowerSeries:
        if cap > self.cap:
            raise InvalidParameters(f"cannot extend a series known to degree {self.cap}")
        return PowerSeries(cap, self.coeffs[: cap + 1])

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(degree, coefficient)`` pairs in increasing degree."""
        return [(d, c) for d, c in enumerate(self.coeffs) if c]

    def to_pairs(self) -> list[list[int]]:
        return [[d, c] for d, c in self.terms()]

    def valuation(self) -> int | None:
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return add(self, other)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return add(self, -other)

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.cap, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries(self.cap, tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return first_difference(self, other) is None

    __hash__ = None

    def to_text(self) -> str:
        """Human-readable form, e.g. ``1 + t + 2t^9 + O(t^13)``."""
        parts = []
        for d, c in self.terms():
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if not mono:
                coef = str(c)
            elif c == 1:
                coef = ""
            elif c == -1:
                coef = "-"
            else:
                coef = str(c)
            parts.append(f"{coef}{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.cap + 1})".replace("+ -", "- ")

    def __repr__(self):
        return f"PowerSeries({self.to_text()})"


def _common_cap(a: PowerSeries, b: PowerSeries) -> int:
    return min(a.cap, b.cap)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    cap = _common_cap(a, b)
    return PowerSeries(cap, tuple(a.coeffs[i] + b.coeffs[i] for i in range(cap + 1)))


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller cap."""
    cap = _common_cap(a, b)
    out = [0] * (cap + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs[: cap + 1]):
        if not ai:
            continue
        for j in range(cap + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return PowerSeries(cap, tuple(out))


def recip(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z")
    cap = a.cap
    ac = a.coeffs
    out = [0] * (cap + 1)
    out[0] = c0
    for d in range(1, cap + 1):
        s = 0
        for i in range(1, d + 1):
            if ac[i]:
                s += ac[i] * out[d - i]
        # c0 is its own inverse
        out[d] = -c0 * s
    return PowerSeries(cap, tuple(out))


def geometric(d: int, cap: int = DEFAULT_CAP) -> PowerSeries:
    """``sum_k t^(k*d)`` truncated at ``cap``."""
    if d < 1:
        raise InvalidParameters(f"geometric step must be positive, got {d}")
    return PowerSeries.from_terms({k: 1 for k in range(0, cap + 1, d)}, cap)


def binom_factor(d: int, m: int, sign: str, cap: int = DEFAULT_CAP) -> PowerSeries:
    """``(1+t^d)^m`` for ``sign="exterior"``, ``1/(1-t^d)^m`` for ``"polynomial"``."""
    if d < 1 or m < 0:
        raise InvalidParameters(f"need d >= 1 and m >= 0, got d={d}, m={m}")
    if sign not in (EXTERIOR, POLYNOMIAL):
        raise InvalidParameters(f"unknown factor kind {sign!r}")
    if m == 0:
        return PowerSeries.one(cap)
    if sign == EXTERIOR:
        terms = {d * j: comb(m, j) for j in range(m + 1)}
    elif sign == POLYNOMIAL:
        terms = {d * j: comb(m + j - 1, j) for j in range(cap // d + 1)}
    return PowerSeries.from_terms(terms, cap)


def first_difference(a: PowerSeries, b: PowerSeries) -> int | None:
    """Lowest degree where ``a`` and ``b`` differ up to the common cap, else None."""
    for d in range(_common_cap(a, b) + 1):
        if a.coeffs[d] != b.coeffs[d]:
            return d
    return None


def product(factors: Iterable[PowerSeries], cap: int) -> PowerSeries:
    out = PowerSeries.one(cap)
    for f in factors:
        out = out * f
    return out
