"""Finite carriers equipped with a contention relation.

A carrier of size n is the ordinal {0, .., n-1}.  Contention is a
reflexive symmetric relation stored as the set of unordered pairs of
*distinct* elements; reflexive pairs are implicit.  Two elements are
independent when they are distinct and not in contention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property


def _norm_pairs(size, pairs):
    out = set()
    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise ValueError(f"contention pair ({a},{b}) out of range for size {size}")
        if a == b:
            continue  # reflexive pairs are implicit
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


@dataclass(frozen=True)
class CSet:
    """A finite set with a contention relation on it."""

    size: int
    contention: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be a natural number")
        object.__setattr__(self, "contention", _norm_pairs(self.size, self.contention))

    @cached_property
    def adj(self):
        """Adjacency bitmasks, one per element, self bit excluded."""
        masks = [0] * self.size
        for a, b in self.contention:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    def contends(self, a, b):
        """Reflexive closure: every element contends with itself."""
        if not (0 <= a < self.size and 0 <= b < self.size):
            raise ValueError(f"element out of range for size {self.size}")
        return a == b or (self.adj[a] >> b) & 1 == 1

    def to_dict(self):
        return {"size": self.size, "contention": [list(p) for p in sorted(self.contention)]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["size"], frozenset(tuple(p) for p in d["contention"]))


def discrete(n):
    """The c-set on n elements whose only contention is reflexive.

    >>> discrete(2).contention
    frozenset()
    """
    return CSet(n)


def full(n):
    """The c-set on n elements where everything contends with everything."""
    return CSet(n, frozenset(itertools.combinations(range(n), 2)))


def coproduct(x, y):
    """Disjoint union; contention never crosses the two components.

    Returns the sum c-set together with the two injection index maps.
    """
    pairs = set(x.contention)
    for a, b in y.contention:
        pairs.add((a + x.size, b + x.size))
    inl = tuple(range(x.size))
    inr = tuple(range(x.size, x.size + y.size))
    return CSet(x.size + y.size, frozenset(pairs)), inl, inr


def mask_of(x, elems):
    m = 0
    for e in elems:
        if not (0 <= e < x.size):
            raise ValueError(f"element {e} out of range for size {x.size}")
        m |= 1 << e
    return m


def set_of(mask):
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _indep_mask(x, m):
    mm = m
    while mm:
        low = mm & -mm
        if x.adj[low.bit_length() - 1] & m:
            return False
        mm ^= low
    return True


def is_independent(x, elems):
    """No two distinct members of elems contend in x.

    >>> is_independent(full(2), {0, 1})
    False
    >>> is_independent(discrete(2), {0, 1})
    True
    """
    return _indep_mask(x, mask_of(x, elems))


def indep_masks(x):
    """All independent subsets of x as bitmasks, in increasing mask order."""
    if x.size == 0:
        return [0]
    # m independent iff m minus its lowest bit is and that bit sees none of m
    good = bytearray(1 << x.size)
    good[0] = 1
    out = [0]
    for m in range(1, 1 << x.size):
        low = m & -m
        if good[m ^ low] and not (x.adj[low.bit_length() - 1] & m):
            good[m] = 1
            out.append(m)
    return out


def indep_subsets(x):
    """Independent subsets in canonical (increasing bitmask) order.

    >>> [sorted(s) for s in indep_subsets(discrete(2))]
    [[], [0], [1], [0, 1]]
    >>> [sorted(s) for s in indep_subsets(full(2))]
    [[], [0], [1]]
    """
    return [set_of(m) for m in indep_masks(x)]


def pc_contends_masks(x, u, v):
    """Contention between subsets: some element of u contends with some of v."""
    if u & v:
        return True
    mm = u
    while mm:
        low = mm & -mm
        if x.adj[low.bit_length() - 1] & v:
            return True
        mm ^= low
    return False


def powerset_contention(x, u, v):
    """Contention on independent subsets of x.

    Both arguments must be independent; the relation holds when some
    member of one contends (reflexively) with some member of the other.
    """
    mu, mv = mask_of(x, u), mask_of(x, v)
    if not _indep_mask(x, mu):
        raise ValueError(f"{sorted(u)} is not independent")
    if not _indep_mask(x, mv):
        raise ValueError(f"{sorted(v)} is not independent")
    return pc_contends_masks(x, mu, mv)
