"""Reference implementations the library is tested against.

Deliberately naive: exhaustive enumeration over independent subsets, or
over a bounded box of multisets.
"""

import itertools

from linkalg.contention import CSet, indep_masks, set_of
from linkalg.crel import CRel, lift_mask, validate
from linkalg.multiset import Multiset, lift_m


def all_csets(max_size):
    """Every carrier with every contention relation, sizes 0..max_size."""
    for n in range(max_size + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for chosen in itertools.chain.from_iterable(
            itertools.combinations(pairs, k) for k in range(len(pairs) + 1)
        ):
            yield CSet(n, frozenset(chosen))


def all_crels(dom, cod):
    """Every valid arrow dom -> cod, by brute enumeration and filtering."""
    choices = [set_of(m) for m in indep_masks(cod)]
    for images in itertools.product(choices, repeat=dom.size):
        r = CRel(dom, cod, tuple(images))
        if validate(r):
            yield r


def naive_min_sync_masks(f, g):
    """Reference enumeration: all independent pairs in increasing size."""
    us = [(m, lift_mask(f, m)) for m in indep_masks(f.dom)]
    vs = [(m, lift_mask(g, m)) for m in indep_masks(g.dom)]
    cands = []
    for mu, lu in us:
        for mv, lv in vs:
            if lu == lv and (mu or mv):
                cands.append((bin(mu).count("1") + bin(mv).count("1"), mu, mv))
    cands.sort()
    accepted = []
    for _, mu, mv in cands:
        if any(au & ~mu == 0 and av & ~mv == 0 for au, av in accepted):
            continue
        accepted.append((mu, mv))
    return sorted(
        accepted,
        key=lambda p: (tuple(sorted(set_of(p[0]))), tuple(sorted(set_of(p[1])))),
    )


def box_min_msyncs(f, g, bound):
    """Reference enumeration over the box of entry values 0..bound.

    Joins the two sides on their lift value, then keeps the pointwise
    minimal nonzero pairs.  Complete as long as every minimal
    synchronisation fits inside the box.
    """
    by_lift = {}
    for v in itertools.product(range(bound + 1), repeat=g.dom):
        mv = Multiset(v)
        by_lift.setdefault(lift_m(g, mv).counts, []).append(v)
    pairs = []
    for u in itertools.product(range(bound + 1), repeat=f.dom):
        mu = Multiset(u)
        for v in by_lift.get(lift_m(f, mu).counts, ()):
            if any(u) or any(v):
                pairs.append(u + v)
    pairs.sort(key=sum)
    accepted = []
    for cand in pairs:
        if any(all(a <= c for a, c in zip(acc, cand)) for acc in accepted):
            continue
        accepted.append(cand)
    return sorted(accepted)
