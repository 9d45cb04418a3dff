"""Synchronisations between a cospan of relations, and the pullback they induce.

Given f: A -> X and g: B -> X, a synchronisation is a pair of
independent subsets (U, V) of A and B whose lifts agree in X.  The
nonzero minimal ones form the carrier of the pullback of f and g; a
pair of minimal synchronisations contends exactly when their U parts
or their V parts contend as subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contention import (
    CSet,
    mask_of,
    pc_contends_masks,
    set_of,
    _indep_mask,
)
from .crel import CRel, lift_mask, validate


@dataclass(frozen=True)
class SyncC:
    u: frozenset
    v: frozenset


def is_sync(f, g, u, v):
    if f.cod != g.cod:
        raise ValueError("arrows must share a codomain")
    mu, mv = mask_of(f.dom, u), mask_of(g.dom, v)
    if not (_indep_mask(f.dom, mu) and _indep_mask(g.dom, mv)):
        raise ValueError("synchronisation parts must be independent")
    return lift_mask(f, mu) == lift_mask(g, mv)


def min_sync_masks(f, g):
    """Minimal nonzero synchronisations as (umask, vmask) pairs.

    A minimal synchronisation is connected: it cannot split into two
    synchronisations with disjoint parts, because a component of the
    shared-port graph is itself one.  So candidates are grown from
    single elements, at each step covering the lowest port on which the
    two lifts still disagree, and stopping at the first agreement.
    Every minimal synchronisation arises this way; non-minimal
    candidates are filtered at the end.  Tests compare against a plain
    increasing-size enumeration over all independent pairs.
    """
    if f.cod != g.cod:
        raise ValueError("arrows must share a codomain")
    fa, ga = f.dom.adj, g.dom.adj
    fim, gim = f.img_masks, g.img_masks
    na, nb = f.dom.size, g.dom.size
    covers_a = [[a for a in range(na) if (fim[a] >> p) & 1] for p in range(f.cod.size)]
    covers_b = [[b for b in range(nb) if (gim[b] >> p) & 1] for p in range(g.cod.size)]
    seeds = [(1 << a, 0) for a in range(na)] + [(0, 1 << b) for b in range(nb)]
    seen = set(seeds)
    frontier = seeds
    candidates = []
    while frontier:
        nxt = []
        for mu, mv in frontier:
            lu, lv = lift_mask(f, mu), lift_mask(g, mv)
            if lu == lv:
                candidates.append((mu, mv))
                continue
            diff = lu ^ lv
            p = (diff & -diff).bit_length() - 1
            if (lu >> p) & 1:
                for b in covers_b[p]:
                    if (mv >> b) & 1 or ga[b] & mv:
                        continue
                    st = (mu, mv | (1 << b))
                    if st not in seen:
                        seen.add(st)
                        nxt.append(st)
            else:
                for a in covers_a[p]:
                    if (mu >> a) & 1 or fa[a] & mu:
                        continue
                    st = (mu | (1 << a), mv)
                    if st not in seen:
                        seen.add(st)
                        nxt.append(st)
        frontier = nxt
    out = []
    for mu, mv in candidates:
        dominated = False
        for au, av in candidates:
            if (au, av) != (mu, mv) and au & ~mu == 0 and av & ~mv == 0:
                dominated = True
                break
        if not dominated:
            out.append((mu, mv))
    out = sorted(set(out), key=lambda p: (tuple(sorted(set_of(p[0]))), tuple(sorted(set_of(p[1])))))
    return out


def min_syncs(f, g):
    """Minimal synchronisations in canonical order, with their contention."""
    pairs = min_sync_masks(f, g)
    space = sync_space(f, g, pairs)
    return [SyncC(set_of(mu), set_of(mv)) for mu, mv in pairs], space


def sync_space(f, g, pairs):
    cont = set()
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if pc_contends_masks(f.dom, pairs[i][0], pairs[j][0]) or pc_contends_masks(
                g.dom, pairs[i][1], pairs[j][1]
            ):
                cont.add((i, j))
    return CSet(len(pairs), frozenset(cont))


def pullback(f, g):
    """The span (M, p, q) of minimal synchronisations over f, g.

    p and q project a synchronisation to its two parts; both are valid
    arrows because contention on M is inherited from the parts.
    """
    pairs = min_sync_masks(f, g)
    space = sync_space(f, g, pairs)
    p = CRel(space, f.dom, tuple(set_of(mu) for mu, _ in pairs))
    q = CRel(space, g.dom, tuple(set_of(mv) for _, mv in pairs))
    return space, p, q


def mediator(f, g, alpha, beta):
    """The unique arrow into the pullback commuting with a cone.

    alpha: Z -> A and beta: Z -> B with equal lifts into X.  Each cone
    element maps to the set of minimal synchronisations lying below its
    pair of images; this is the only choice making both triangles
    commute, which the tests confirm by exhaustive enumeration.
    """
    if alpha.cod != f.dom or beta.cod != g.dom:
        raise ValueError("cone legs do not match the arrows")
    if alpha.dom != beta.dom:
        raise ValueError("cone legs must share a domain")
    pairs = min_sync_masks(f, g)
    space = sync_space(f, g, pairs)
    images = []
    for z in range(alpha.dom.size):
        au, bv = alpha.img_masks[z], beta.img_masks[z]
        if lift_mask(f, au) != lift_mask(g, bv):
            raise ValueError(f"not a cone: lifts differ at element {z}")
        chosen = frozenset(
            i for i, (mu, mv) in enumerate(pairs) if mu & ~au == 0 and mv & ~bv == 0
        )
        images.append(chosen)
    h = CRel(alpha.dom, space, tuple(images))
    if not validate(h):
        raise ValueError("mediating map is not a valid arrow")
    return h
