"""Relations between c-sets that respect contention.

An arrow f: X -> Y assigns to every element of X an independent subset
of Y, subject to: whenever the images of x and x' contend (some member
of one contends with some member of the other, reflexively), x and x'
must themselves contend in X.  Identities are singleton maps and
composition goes through the union lift, so these arrows form a
category; tests exercise the unit and associativity laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .contention import (
    CSet,
    _indep_mask,
    discrete,
    indep_masks,
    mask_of,
    pc_contends_masks,
    set_of,
)


class CheckResult(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class CRel:
    """dom, cod: c-sets; map: per dom element, an image subset of cod."""

    dom: CSet
    cod: CSet
    map: tuple

    def __post_init__(self):
        if len(self.map) != self.dom.size:
            raise ValueError(f"map has {len(self.map)} entries for domain size {self.dom.size}")
        object.__setattr__(self, "map", tuple(frozenset(u) for u in self.map))
        for u in self.map:
            for e in u:
                if not (0 <= e < self.cod.size):
                    raise ValueError(f"image element {e} out of range for codomain size {self.cod.size}")

    @cached_property
    def img_masks(self):
        return tuple(mask_of(self.cod, u) for u in self.map)

    def __call__(self, x):
        return self.map[x]

    def to_dict(self):
        return {
            "dom": self.dom.to_dict(),
            "cod": self.cod.to_dict(),
            "map": [sorted(u) for u in self.map],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(CSet.from_dict(d["dom"]), CSet.from_dict(d["cod"]), tuple(frozenset(u) for u in d["map"]))


def validate(r):
    """Check the two arrow conditions, reporting the first violation."""
    for x, m in enumerate(r.img_masks):
        if not _indep_mask(r.cod, m):
            return CheckResult(False, f"image of {x} is not independent")
    for x in range(r.dom.size):
        for y in range(x + 1, r.dom.size):
            if pc_contends_masks(r.cod, r.img_masks[x], r.img_masks[y]):
                if not r.dom.contends(x, y):
                    return CheckResult(False, f"images of {x} and {y} contend but {x},{y} are independent")
    return CheckResult(True)


def crel(dom, cod, images):
    """Build and validate in one go; raises on an invalid arrow."""
    r = CRel(dom, cod, tuple(frozenset(u) for u in images))
    res = validate(r)
    if not res:
        raise ValueError(f"invalid relation: {res.reason}")
    return r


def identity(x):
    return CRel(x, x, tuple(frozenset([i]) for i in range(x.size)))


def lift_mask(f, umask):
    out = 0
    mm = umask
    while mm:
        low = mm & -mm
        out |= f.img_masks[low.bit_length() - 1]
        mm ^= low
    return out


def lift(f, u):
    """Union of images over an independent subset of the domain.

    The result is again independent: members coming from the same
    element share an image, members from distinct independent elements
    cannot contend without violating the arrow condition.
    """
    m = mask_of(f.dom, u)
    if not _indep_mask(f.dom, m):
        raise ValueError(f"{sorted(u)} is not independent in the domain")
    return set_of(lift_mask(f, m))


def compose(f, g):
    """Kleisli composite: x maps to the lift of g over f(x)."""
    if f.cod != g.dom:
        raise ValueError("middle objects differ")
    return CRel(f.dom, g.cod, tuple(set_of(lift_mask(g, m)) for m in f.img_masks))


def graph(fn, cod_size, dom=None):
    """The function graph x |-> {fn(x)} as a relation.

    With the default discrete domain this is only a valid arrow for
    injective fn; pass an explicit dom carrying enough contention
    otherwise.
    """
    if dom is None:
        dom = discrete(len(fn))
    return CRel(dom, discrete(cod_size), tuple(frozenset([v]) for v in fn))


def op_graph(fn, cod_size):
    """The preimage map of fn: dom(op) is the codomain of fn.

    >>> [sorted(u) for u in op_graph([0, 0], 1).map]
    [[0, 1]]
    """
    pre = [set() for _ in range(cod_size)]
    for x, v in enumerate(fn):
        if not (0 <= v < cod_size):
            raise ValueError(f"function value {v} out of range")
        pre[v].add(x)
    return CRel(discrete(cod_size), discrete(len(fn)), tuple(frozenset(p) for p in pre))


def random_cset(rng, max_size=4, p_edge=0.4):
    n = rng.randint(0, max_size)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p_edge]
    return CSet(n, frozenset(pairs))


def random_crel(rng, dom=None, cod=None, max_size=4):
    """A random valid arrow, built element by element with rejection."""
    if dom is None:
        dom = random_cset(rng, max_size)
    if cod is None:
        cod = random_cset(rng, max_size)
    images = []
    for x in range(dom.size):
        choices = []
        for m in indep_masks(cod):
            ok = True
            for y, prev in enumerate(images):
                if pc_contends_masks(cod, m, prev) and not dom.contends(x, y):
                    ok = False
                    break
            if ok:
                choices.append(m)
        images.append(rng.choice(choices))  # 0 (empty image) is always a choice
    return CRel(dom, cod, tuple(set_of(m) for m in images))
