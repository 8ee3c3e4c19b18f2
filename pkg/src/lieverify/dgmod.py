"""Finite graded F_p vector spaces with a degree -1 Bockstein differential.

These model reduced mod-p homology of finite complexes together with the
Bockstein.  A module splits (over a field) into acyclic pairs ``top -> bottom``
and surviving homology classes; :func:`decompose` reports that splitting as a
multiset of Moore-type and sphere-type summands.

Sign convention, used everywhere: ``beta(a ⊗ b) = beta(a) ⊗ b + (-1)^|a| a ⊗ beta(b)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import fplin
from .errors import DegreeTooSmall, InvalidDifferential, InvalidParameters, ModulusMismatch
from .gradedlie import validate_np

TENSOR = "⊗"

Beta = dict[str, dict[str, int]]


@dataclass(frozen=True)
class DgModule:
    p: int
    classes: tuple[tuple[str, int], ...]
    beta: Mapping[str, Mapping[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        fplin.check_prime(self.p)
        names = [c for c, _ in self.classes]
        if len(set(names)) != len(names):
            raise InvalidParameters(f"class names must be unique: {names}")
        for c, d in self.classes:
            if not isinstance(d, int) or d < 1:
                raise InvalidParameters(f"class {c!r} has degree {d!r}; need >= 1")
        clean = {}
        for src, row in self.beta.items():
            row = {t: v % self.p for t, v in row.items() if v % self.p}
            if row:
                clean[src] = row
        object.__setattr__(self, "beta", clean)
        self.validate()

    # -- structure --------------------------------------------------------

    @property
    def degree_of(self) -> dict[str, int]:
        return dict(self.classes)

    def names_in_degree(self, d: int) -> list[str]:
        return [c for c, k in self.classes if k == d]

    def degrees(self) -> list[int]:
        return sorted({d for _, d in self.classes})

    def dims(self) -> dict[int, int]:
        return dict(sorted(Counter(d for _, d in self.classes).items()))

    def __len__(self):
        return len(self.classes)

    def apply_beta(self, vec: Mapping[str, int]) -> dict[str, int]:
        out: dict[str, int] = {}
        for c, v in vec.items():
            for t, b in self.beta.get(c, {}).items():
                out[t] = (out.get(t, 0) + v * b) % self.p
        return {t: v for t, v in out.items() if v}

    def validate(self) -> None:
        """Check that beta lowers degree by exactly one and squares to zero."""
        deg = self.degree_of
        for src, row in self.beta.items():
            if src not in deg:
                raise InvalidDifferential(f"beta defined on unknown class {src!r}")
            for tgt in row:
                if tgt not in deg:
                    raise InvalidDifferential(f"beta({src}) hits unknown class {tgt!r}")
                if deg[tgt] != deg[src] - 1:
                    raise InvalidDifferential(
                        f"beta({src}) lands in degree {deg[tgt]}, expected {deg[src] - 1}"
                    )
        for src in self.beta:
            if self.apply_beta(self.beta[src]):
                raise InvalidDifferential(f"beta∘beta({src}) != 0")

    def beta_matrix(self, d: int) -> fplin.FpMatrix:
        """Rows: classes of degree d; columns: classes of degree d-1."""
        rows = self.names_in_degree(d)
        cols = self.names_in_degree(d - 1)
        col_index = {c: i for i, c in enumerate(cols)}
        entries = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for t, v in self.beta.get(r, {}).items():
                entries[i][col_index[t]] = v
        return fplin.FpMatrix(entries, self.p, cols=len(cols))

    def beta_rank(self, d: int) -> int:
        return fplin.rank(self.beta_matrix(d))

    def with_zero_beta(self) -> DgModule:
        return DgModule(self.p, self.classes, {})

    def restrict(self, names: Iterable[str]) -> DgModule:
        """Submodule on the given classes; beta must not leave it."""
        keep = set(names)
        beta = {}
        for src, row in self.beta.items():
            if src in keep:
                if not set(row) <= keep:
                    raise InvalidDifferential(f"beta({src}) leaves the chosen classes")
                beta[src] = dict(row)
        return DgModule(self.p, tuple((c, d) for c, d in self.classes if c in keep), beta)


def empty(p: int) -> DgModule:
    return DgModule(p, ())


def sphere(q: int, p: int, name: str | None = None) -> DgModule:
    """Reduced homology of S^q: one class in degree q."""
    if q < 1:
        raise DegreeTooSmall(f"sphere needs q >= 1, got {q}")
    return DgModule(p, ((name or f"s{q}", q),))


def moore(q: int, p: int, name: str | None = None) -> DgModule:
    """Reduced homology of P^q(p): classes in degrees q-1, q with beta(top) = bottom."""
    if q < 2:
        raise DegreeTooSmall(f"Moore space needs q >= 2, got {q}")
    base = name or f"P{q}"
    bot, top = f"{base}.b", f"{base}.t"
    return DgModule(p, ((bot, q - 1), (top, q)), {top: {bot: 1}})


def paper_L(n: int, p: int) -> DgModule:
    """x, u, v in degrees 2n-1, 2np-2, 2np-1 with beta(v) = u."""
    validate_np(n, p)
    return DgModule(p, (("x", 2 * n - 1), ("u", 2 * n * p - 2), ("v", 2 * n * p - 1)),
                    {"v": {"u": 1}})


def paper_K(n: int, p: int) -> DgModule:
    """The bottom two cells of L: x and u, beta = 0."""
    validate_np(n, p)
    return DgModule(p, (("x", 2 * n - 1), ("u", 2 * n * p - 2)))


def suspend(m: DgModule, s: int = 1) -> DgModule:
    if s < 0:
        raise InvalidParameters(f"suspension must be non-negative, got {s}")
    return DgModule(m.p, tuple((c, d + s) for c, d in m.classes), m.beta)


def _same_p(m: DgModule, n: DgModule) -> None:
    if m.p != n.p:
        raise ModulusMismatch(f"moduli differ: {m.p} vs {n.p}")


def tensor(m: DgModule, n: DgModule) -> DgModule:
    _same_p(m, n)
    p = m.p
    classes = tuple((f"{a}{TENSOR}{b}", da + db) for a, da in m.classes for b, db in n.classes)
    beta: Beta = {}
    for a, da in m.classes:
        sign = -1 if da % 2 else 1
        for b, _ in n.classes:
            row: dict[str, int] = {}
            for a2, v in m.beta.get(a, {}).items():
                key = f"{a2}{TENSOR}{b}"
                row[key] = row.get(key, 0) + v
            for b2, v in n.beta.get(b, {}).items():
                key = f"{a}{TENSOR}{b2}"
                row[key] = row.get(key, 0) + sign * v
            row = {k: v % p for k, v in row.items() if v % p}
            if row:
                beta[f"{a}{TENSOR}{b}"] = row
    return DgModule(p, classes, beta)


def wedge(*modules: DgModule) -> DgModule:
    """Direct sum; colliding class names get a ``#k`` suffix."""
    if not modules:
        raise InvalidParameters("wedge needs at least one module")
    p = modules[0].p
    classes: list[tuple[str, int]] = []
    beta: Beta = {}
    seen: set[str] = set()
    for k, m in enumerate(modules):
        _same_p(modules[0], m)
        rename = {}
        for c, _ in m.classes:
            new = c if c not in seen else f"{c}#{k}"
            while new in seen:
                new += "'"
            rename[c] = new
            seen.add(new)
        classes.extend((rename[c], d) for c, d in m.classes)
        for src, row in m.beta.items():
            beta[rename[src]] = {rename[t]: v for t, v in row.items()}
    return DgModule(p, tuple(classes), beta)


# -- decomposition ------------------------------------------------------------


@dataclass(frozen=True)
class WedgeSummary:
    """Multiset of summands: ``("S", q)`` for S^q and ``("P", q)`` for P^q(p)."""

    p: int
    summands: Counter = field(default_factory=Counter)

    @classmethod
    def of(cls, p: int, spheres: Iterable[int] = (), moores: Iterable[int] = ()) -> WedgeSummary:
        c = Counter()
        for q in spheres:
            c[("S", q)] += 1
        for q in moores:
            c[("P", q)] += 1
        return cls(p, c)

    @property
    def spheres(self) -> list[int]:
        return sorted(q for (k, q), m in self.summands.items() if k == "S" for _ in range(m))

    @property
    def moores(self) -> list[int]:
        return sorted(q for (k, q), m in self.summands.items() if k == "P" for _ in range(m))

    def class_count(self) -> int:
        return sum(m * (1 if k == "S" else 2) for (k, _), m in self.summands.items())

    def dims(self) -> dict[int, int]:
        out: Counter = Counter()
        for (k, q), m in self.summands.items():
            out[q] += m
            if k == "P":
                out[q - 1] += m
        return dict(sorted(out.items()))

    def at_degree(self, q: int) -> dict[str, int]:
        return {"S": self.summands.get(("S", q), 0), "P": self.summands.get(("P", q), 0)}

    def serialize(self) -> list[list]:
        out = []
        for (k, q), m in sorted(self.summands.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            entry = ["S", q] if k == "S" else ["P", q, self.p]
            out.extend([list(entry) for _ in range(m)])
        return out

    def __eq__(self, other):
        if not isinstance(other, WedgeSummary):
            return NotImplemented
        return self.p == other.p and +self.summands == +other.summands

    __hash__ = None

    def __str__(self):
        parts = []
        for entry in self.serialize():
            parts.append(f"S^{entry[1]}" if entry[0] == "S" else f"P^{entry[1]}({entry[2]})")
        return "{" + ", ".join(parts) + "}"


def decompose(m: DgModule) -> WedgeSummary:
    """Split into Moore pairs (one per unit of beta-rank) and sphere classes."""
    m.validate()
    dims = m.dims()
    ranks = {d: m.beta_rank(d) for d in dims}
    c: Counter = Counter()
    for d, dim in dims.items():
        r_d = ranks.get(d, 0)
        if r_d:
            c[("P", d)] += r_d
        spheres = dim - r_d - ranks.get(d + 1, 0)
        if spheres < 0:
            raise InvalidDifferential(f"negative homology in degree {d}")
        if spheres:
            c[("S", d)] += spheres
    return WedgeSummary(m.p, c)


def first_summary_difference(a: WedgeSummary, b: WedgeSummary):
    """Lowest degree at which two summaries differ, with both sides there, else None."""
    degrees = sorted({q for _, q in a.summands} | {q for _, q in b.summands})
    for q in degrees:
        if a.at_degree(q) != b.at_degree(q):
            return q, a.at_degree(q), b.at_degree(q)
    return None
