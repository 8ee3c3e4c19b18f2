"""Free graded Lie algebras over F_p, realized inside the tensor algebra T(V).

The free Lie algebra on a graded set of generators is taken to be the
smallest subspace of T(V) that contains the generators and is closed under
the graded commutator ``[a, b] = ab - (-1)^(|a||b|) ba``.  Its dimensions are
computed by brute force (:func:`free_lie_dims_oracle`) and, independently,
read off from Hilbert series by PBW peeling (:func:`peel_generators`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Union

import numpy as np

from . import fplin
from .errors import CapTooLarge, InvalidParameters, NegativeDimension, UnknownGenerator
from .report import VerificationReport
from .series import (
    DEFAULT_CAP,
    EXTERIOR,
    POLYNOMIAL,
    PowerSeries,
    binom_factor,
    product,
    recip,
)

WORD_GUARD = 200_000

Word = tuple[str, ...]


def validate_np(n: int, p: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"n must be a positive integer, got {n!r}")
    validate_p(p)


def validate_p(p: int) -> None:
    if not isinstance(p, int) or p < 5 or not fplin.is_prime(p):
        raise InvalidParameters(f"p must be a prime ≥ 5, got {p!r}")


@dataclass(frozen=True)
class GeneratorSet:
    p: int
    generators: tuple[tuple[str, int], ...]
    n: int | None = None

    def __post_init__(self):
        validate_p(self.p)
        names = [g for g, _ in self.generators]
        if len(set(names)) != len(names):
            raise InvalidParameters(f"generator names must be unique: {names}")
        for g, d in self.generators:
            if not isinstance(d, int) or d < 1:
                raise InvalidParameters(f"generator {g!r} has degree {d!r}; need >= 1")

    @classmethod
    def of(cls, p: int, *gens: tuple[str, int]) -> GeneratorSet:
        return cls(p, tuple(gens))

    @classmethod
    def paper(cls, n: int, p: int) -> GeneratorSet:
        """x, u, v in degrees 2n-1, 2np-2, 2np-1."""
        validate_np(n, p)
        return cls(p, (("x", 2 * n - 1), ("u", 2 * n * p - 2), ("v", 2 * n * p - 1)), n)

    @property
    def names(self) -> list[str]:
        return [g for g, _ in self.generators]

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self.generators)

    def degree(self, name: str) -> int:
        for g, d in self.generators:
            if g == name:
                return d
        raise UnknownGenerator(name)

    def word_degree(self, word: Iterable[str]) -> int:
        return sum(self.degree(g) for g in word)


# -- bracket trees ------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bracket:
    left: "BracketTree"
    right: "BracketTree"

    def __str__(self):
        return f"[{self.left},{self.right}]"


BracketTree = Union[Leaf, Bracket]


def _tree(t) -> BracketTree:
    return Leaf(t) if isinstance(t, str) else t


def bracket(a, b) -> Bracket:
    """``bracket("u", bracket("x", "v"))`` builds ``[u,[x,v]]``."""
    return Bracket(_tree(a), _tree(b))


def tree_degree(t: BracketTree, gens: GeneratorSet) -> int:
    if isinstance(t, Leaf):
        return gens.degree(t.name)
    return tree_degree(t.left, gens) + tree_degree(t.right, gens)


def tree_leaves(t: BracketTree) -> list[str]:
    if isinstance(t, Leaf):
        return [t.name]
    return tree_leaves(t.left) + tree_leaves(t.right)


def ad_power(a: str, k: int, t) -> BracketTree:
    """``ad^k(a)(t) = [a, ad^(k-1)(a)(t)]``, with ``ad^0(a)(t) = t``."""
    if k < 0:
        raise InvalidParameters(f"k must be non-negative, got {k}")
    t = _tree(t)
    for _ in range(k):
        t = Bracket(Leaf(a), t)
    return t


# -- tensor algebra elements --------------------------------------------------


@dataclass(frozen=True)
class TensorElement:
    """Homogeneous element of T(V) over F_p: ``{word: nonzero residue}``."""

    p: int
    degree: int
    terms: Mapping[Word, int] = field(default_factory=dict)

    @classmethod
    def build(cls, p: int, degree: int, terms: Mapping[Word, int]) -> TensorElement:
        return cls(p, degree, {w: c % p for w, c in terms.items() if c % p})

    @classmethod
    def generator(cls, name: str, gens: GeneratorSet) -> TensorElement:
        return cls(gens.p, gens.degree(name), {(name,): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TensorElement) -> None:
        if self.p != other.p:
            raise InvalidParameters(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise InvalidParameters(
                f"cannot add elements of degrees {self.degree} and {other.degree}"
            )
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return TensorElement.build(self.p, self.degree, out)

    def __neg__(self) -> TensorElement:
        return self.scale(-1)

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scale(self, c: int) -> TensorElement:
        return TensorElement.build(self.p, self.degree, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: TensorElement) -> TensorElement:
        """Concatenation product in T(V)."""
        self._check(other)
        out: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return TensorElement.build(self.p, self.degree + other.degree, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.p == other.p
        return (self.p, self.degree, dict(self.terms)) == (other.p, other.degree, dict(other.terms))

    __hash__ = None

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*{''.join(w)}" for w, c in sorted(self.terms.items()))


def graded_commutator(a: TensorElement, b: TensorElement) -> TensorElement:
    sign = -1 if (a.degree * b.degree) % 2 else 1
    return a * b - (b * a).scale(sign)


def expand_bracket(t, gens: GeneratorSet) -> TensorElement:
    """Expand a bracket tree into T(V) by repeated graded commutators."""
    t = _tree(t)
    if isinstance(t, Leaf):
        return TensorElement.generator(t.name, gens)
    return graded_commutator(expand_bracket(t.left, gens), expand_bracket(t.right, gens))


def apply_derivation(elem: TensorElement, images: Mapping[str, TensorElement],
                     shift: int, gens: GeneratorSet) -> TensorElement:
    """Extend ``images`` (generator -> element of degree |g|+shift) to T(V) as a
    derivation with the Koszul sign ``(-1)^(shift * degree of the prefix)``."""
    p = elem.p
    out: dict[Word, int] = {}
    for word, c in elem.terms.items():
        prefix_deg = 0
        for i, g in enumerate(word):
            img = images.get(g)
            if img is not None and not img.is_zero():
                sign = -1 if (shift * prefix_deg) % 2 else 1
                head, tail = word[:i], word[i + 1:]
                for w, c2 in img.terms.items():
                    key = head + w + tail
                    out[key] = out.get(key, 0) + sign * c * c2
            prefix_deg += gens.degree(g)
    return TensorElement.build(p, elem.degree + shift, out)


def bockstein_images(gens: GeneratorSet, pairs: Mapping[str, str]) -> dict[str, TensorElement]:
    """Degree -1 images ``beta(top) = bottom`` for the given ``{top: bottom}`` pairs."""
    out = {}
    for top, bottom in pairs.items():
        if gens.degree(top) != gens.degree(bottom) + 1:
            raise InvalidParameters(f"beta({top}) = {bottom} does not lower degree by 1")
        out[top] = TensorElement.generator(bottom, gens)
    return out


def jacobi_check(gens: GeneratorSet, drop_last_term: bool = False) -> VerificationReport:
    """Check ``[u,[x,v]] = [[u,x],v] + [x,[u,v]]`` in T(V) and ``[[u,x],v] != 0``.

    ``drop_last_term`` removes ``[x,[u,v]]`` from the right side (negative control).
    """
    lhs = expand_bracket(bracket("u", bracket("x", "v")), gens)
    first = expand_bracket(bracket(bracket("u", "x"), "v"), gens)
    second = expand_bracket(bracket("x", bracket("u", "v")), gens)
    # u has even degree, so the graded Jacobi sign on the second term is +1
    sign = -1 if (gens.degree("u") * gens.degree("x")) % 2 else 1
    rhs = first if drop_last_term else first + second.scale(sign)
    diff = lhs - rhs
    params = {"n": gens.n, "p": gens.p}
    detail = {
        "degree": lhs.degree,
        "first_summand_nonzero": not first.is_zero(),
        "support_size": len(lhs.terms),
    }
    ok = diff.is_zero() and not first.is_zero()
    if not diff.is_zero():
        w = min(diff.terms)
        detail.update(
            first_discrepancy_degree=lhs.degree,
            word="".join(w),
            left=lhs.terms.get(w, 0),
            right=rhs.terms.get(w, 0),
        )
    elif first.is_zero():
        detail.update(first_discrepancy_degree=lhs.degree, left=0, right="nonzero")
    return VerificationReport("jacobi", params, ok, detail)


# -- Euler-Poincare series ----------------------------------------------------


def chi_generators(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> PowerSeries:
    terms: dict[int, int] = {}
    for _, d in gens.generators:
        terms[d] = terms.get(d, 0) + 1
    return PowerSeries.from_terms(terms, cap)


def chi_tensor(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> PowerSeries:
    return recip(PowerSeries.one(cap) - chi_generators(gens, cap))


def chi_symmetric(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> PowerSeries:
    """Free graded-commutative algebra: exterior on odd, polynomial on even generators."""
    return product(
        (binom_factor(d, 1, EXTERIOR if d % 2 else POLYNOMIAL, cap) for _, d in gens.generators),
        cap,
    )


def chi_W(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> PowerSeries:
    """Generating series of the free generators of the commutator subalgebra."""
    one = PowerSeries.one(cap)
    return one - chi_symmetric(gens, cap) * (one - chi_generators(gens, cap))


@dataclass
class LieDimsReport:
    cap: int
    dims: dict[int, int]

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: m for d, m in sorted(self.dims.items()) if m}

    def to_pairs(self) -> list[list[int]]:
        return [[d, m] for d, m in self.nonzero().items()]

    def __eq__(self, other):
        if not isinstance(other, LieDimsReport):
            return NotImplemented
        cap = min(self.cap, other.cap)
        return all(self[d] == other[d] for d in range(1, cap + 1))


def pbw_series(dims: LieDimsReport | Mapping[int, int], cap: int = DEFAULT_CAP) -> PowerSeries:
    """Hilbert series of the enveloping algebra of a graded Lie algebra with the
    given dimensions: ``prod (1+t^d)^m`` (d odd) times ``prod (1-t^d)^-m`` (d even)."""
    items = dims.dims.items() if isinstance(dims, LieDimsReport) else dims.items()
    return product(
        (binom_factor(d, m, EXTERIOR if d % 2 else POLYNOMIAL, cap)
         for d, m in sorted(items) if m and d <= cap),
        cap,
    )


def peel_generators(chi_ul: PowerSeries, cap: int | None = None) -> LieDimsReport:
    """Invert :func:`pbw_series` degree by degree."""
    cap = chi_ul.cap if cap is None else min(cap, chi_ul.cap)
    if chi_ul[0] != 1:
        raise InvalidParameters(f"constant term must be 1, got {chi_ul[0]}")
    running = chi_ul.truncate(cap)
    dims = {}
    for d in range(1, cap + 1):
        m = running[d]
        if m < 0:
            raise NegativeDimension(d, m)
        dims[d] = m
        if m:
            if d % 2:
                running = running * recip(binom_factor(d, m, EXTERIOR, cap))
            else:
                running = running * recip(binom_factor(d, m, POLYNOMIAL, cap))
    return LieDimsReport(cap, dims)


# -- brute-force bracket-span oracle ------------------------------------------


def word_count(gens: GeneratorSet, degree: int) -> int:
    return chi_tensor(gens, degree)[degree]


def words_of_degree(gens: GeneratorSet, degree: int) -> list[Word]:
    """Words of the given total degree, graded-lexicographic by generator index."""
    return list(_words(tuple(gens.generators), degree))


@lru_cache(maxsize=None)
def _words(generators: tuple[tuple[str, int], ...], degree: int) -> tuple[Word, ...]:
    if degree == 0:
        return ((),)
    out = []
    for g, d in generators:
        if d <= degree:
            out.extend((g,) + w for w in _words(generators, degree - d))
    return tuple(out)


def _lie_span(gens: GeneratorSet, cap: int, guard: int, kernel=None):
    """Degree-by-degree bases of L and [L, L] inside T(V)."""
    p = gens.p
    basis: dict[int, list[TensorElement]] = {}
    free_dims: dict[int, int] = {}
    comm_dims: dict[int, int] = {}
    counts = chi_tensor(gens, cap)
    # refuse before doing any work
    for d in range(1, cap + 1):
        if counts[d] > guard:
            raise CapTooLarge(d, counts[d], guard)
    for d in range(1, cap + 1):
        nwords = counts[d]
        basis[d] = []
        if nwords == 0:
            free_dims[d] = comm_dims[d] = 0
            continue
        index = {w: i for i, w in enumerate(words_of_degree(gens, d))}
        span = fplin.SpanState(nwords, p, kernel=kernel)

        def offer(e: TensorElement) -> None:
            if e.is_zero():
                return
            v = np.zeros(nwords, dtype=np.int64)
            for w, c in e.terms.items():
                v[index[w]] = c
            if span.insert(v):
                basis[d].append(e)

        for a in range(1, d // 2 + 1):
            b = d - a
            for i, x in enumerate(basis[a]):
                # [y, x] is a multiple of [x, y], so unordered pairs suffice
                for y in basis[b][i if a == b else 0:]:
                    offer(graded_commutator(x, y))
        comm_dims[d] = span.dim
        for g, gd in gens.generators:
            if gd == d:
                offer(TensorElement.generator(g, gens))
        free_dims[d] = span.dim
    return LieDimsReport(cap, free_dims), LieDimsReport(cap, comm_dims)


def free_lie_dims_oracle(gens: GeneratorSet, cap: int, guard: int = WORD_GUARD,
                         kernel=None) -> LieDimsReport:
    """Dimensions of the bracket closure of the generators inside T(V)."""
    return _lie_span(gens, cap, guard, kernel)[0]


def commutator_dims_oracle(gens: GeneratorSet, cap: int, guard: int = WORD_GUARD,
                           kernel=None) -> LieDimsReport:
    """Dimensions of the span of brackets of length >= 2, i.e. of [L, L]."""
    return _lie_span(gens, cap, guard, kernel)[1]
