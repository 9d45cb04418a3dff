"""Finite multisets as count vectors, and multirelations between ordinals.

A multirelation f: k -> l assigns a multiset over l to every element
of k, i.e. it is a k-by-l matrix of naturals.  Lifting extends f
linearly to multisets over k, and composition is matrix product; the
tests check that against a direct matrix oracle.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Multiset:
    counts: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in cs):
            raise ValueError("counts must be naturals")
        object.__setattr__(self, "counts", cs)

    @property
    def over(self):
        return len(self.counts)

    @property
    def total(self):
        return sum(self.counts)

    def is_zero(self):
        return all(c == 0 for c in self.counts)

    def _same_base(self, other):
        if not isinstance(other, Multiset) or other.over != self.over:
            raise ValueError("multisets must share a base set")

    def __add__(self, other):
        self._same_base(other)
        return Multiset(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other):
        """Multiset difference; only defined when other is contained in self."""
        self._same_base(other)
        if not self >= other:
            raise ValueError("difference would go negative")
        return Multiset(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __ge__(self, other):
        self._same_base(other)
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def __le__(self, other):
        self._same_base(other)
        return other >= self

    def scale(self, k):
        if k < 0:
            raise ValueError("scalar must be a natural")
        return Multiset(tuple(k * c for c in self.counts))

    def __rmul__(self, k):
        return self.scale(k)

    def to_list(self):
        return list(self.counts)


def zero(n):
    return Multiset((0,) * n)


def unit(n, i):
    if not (0 <= i < n):
        raise ValueError("unit index out of range")
    return Multiset(tuple(1 if j == i else 0 for j in range(n)))


@dataclass(frozen=True)
class MRel:
    """Rows indexed by the domain; row x is the multiset image of x."""

    dom: int
    cod: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Multiset) else Multiset(tuple(r)) for r in self.rows)
        if len(rows) != self.dom:
            raise ValueError(f"{len(rows)} rows for domain {self.dom}")
        for r in rows:
            if r.over != self.cod:
                raise ValueError(f"row over {r.over} does not match codomain {self.cod}")
        object.__setattr__(self, "rows", rows)

    def __call__(self, x):
        return self.rows[x]

    def to_matrix(self):
        return [list(r.counts) for r in self.rows]

    @classmethod
    def from_matrix(cls, matrix, cod=None):
        if cod is None:
            if not matrix:
                raise ValueError("codomain size needed for an empty matrix")
            cod = len(matrix[0])
        return cls(len(matrix), cod, tuple(Multiset(tuple(row)) for row in matrix))


def identity_m(n):
    return MRel(n, n, tuple(unit(n, i) for i in range(n)))


def lift_m(f, u):
    """Linear extension: sum of f's rows with multiplicities from u."""
    if u.over != f.dom:
        raise ValueError("multiset base must match the domain")
    acc = [0] * f.cod
    for x, c in enumerate(u.counts):
        if c:
            row = f.rows[x].counts
            for j in range(f.cod):
                acc[j] += c * row[j]
    return Multiset(tuple(acc))


def compose_m(f, g):
    if f.cod != g.dom:
        raise ValueError("middle objects differ")
    return MRel(f.dom, g.cod, tuple(lift_m(g, r) for r in f.rows))


def random_mrel(rng, dom=None, cod=None, max_size=3, max_entry=2):
    if dom is None:
        dom = rng.randint(0, max_size)
    if cod is None:
        cod = rng.randint(0, max_size)
    return MRel(
        dom,
        cod,
        tuple(Multiset(tuple(rng.randint(0, max_entry) for _ in range(cod))) for _ in range(dom)),
    )
