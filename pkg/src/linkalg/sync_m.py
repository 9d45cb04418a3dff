"""Synchronisations between multirelations into a common codomain.

For f: A -> X and g: B -> X, a synchronisation is a pair of multisets
(U, V) over A and B with equal lifts.  Solutions of that linear system
are closed under sum and difference, and the minimal nonzero ones are
finite (a Hilbert basis); they are computed by completion: grow
candidate vectors one unit at a time towards the kernel, pruning
anything that already dominates a known minimal solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multiset import MRel, Multiset, lift_m


@dataclass(frozen=True)
class SyncM:
    u: Multiset
    v: Multiset


def is_msync(f, g, u, v):
    if f.cod != g.cod:
        raise ValueError("arrows must share a codomain")
    return lift_m(f, u) == lift_m(g, v)


def _columns(f, g):
    cols = [tuple(f.rows[a].counts) for a in range(f.dom)]
    cols += [tuple(-c for c in g.rows[b].counts) for b in range(g.dom)]
    return cols


def min_msync_vectors(f, g):
    """Minimal nonzero solutions as concatenated (u, v) count tuples."""
    if f.cod != g.cod:
        raise ValueError("arrows must share a codomain")
    n = f.dom + g.dom
    cols = _columns(f, g)
    dim = f.cod

    def value(t):
        acc = [0] * dim
        for i, c in enumerate(t):
            if c:
                col = cols[i]
                for j in range(dim):
                    acc[j] += c * col[j]
        return tuple(acc)

    basis = []
    frontier = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        frontier.append(e)
    frontier = sorted(set(frontier))
    while frontier:
        nxt = set()
        vals = {}
        for t in frontier:
            v = value(t)
            vals[t] = v
            if all(c == 0 for c in v):
                basis.append(t)
        for t in frontier:
            v = vals[t]
            if all(c == 0 for c in v):
                continue
            for i in range(n):
                col = cols[i]
                if sum(a * b for a, b in zip(v, col)) < 0:
                    s = tuple(t[j] + (1 if j == i else 0) for j in range(n))
                    if not any(all(bc <= sc for bc, sc in zip(b, s)) for b in basis):
                        nxt.add(s)
        frontier = sorted(nxt)
    return sorted(basis)


def min_msyncs(f, g):
    """The minimal synchronisations, in canonical vector order."""
    na = f.dom
    return [
        SyncM(Multiset(t[:na]), Multiset(t[na:]))
        for t in min_msync_vectors(f, g)
    ]


def weak_pullback(f, g):
    """Span of minimal synchronisations; weakly universal only.

    Every cone factors through it, but factorisations need not be
    unique because a synchronisation may decompose into minimal ones in
    several ways.
    """
    syncs = min_msyncs(f, g)
    p = MRel(len(syncs), f.dom, tuple(s.u for s in syncs))
    q = MRel(len(syncs), g.dom, tuple(s.v for s in syncs))
    return len(syncs), p, q


def minimal_decomposition(f, g, s):
    """Greedily write a synchronisation as a sum of minimal ones.

    Returns a list of (multiplicity, SyncM) with distinct minimal
    parts.  Greedy in canonical order: repeatedly take the first basis
    element that still fits, as many times as it fits.
    """
    if not is_msync(f, g, s.u, s.v):
        raise ValueError("not a synchronisation")
    basis = min_msyncs(f, g)
    out = []
    ru, rv = s.u, s.v
    while not (ru.is_zero() and rv.is_zero()):
        for m in basis:
            if ru >= m.u and rv >= m.v:
                k = _max_fit(ru, rv, m)
                out.append((k, m))
                ru = ru - m.u.scale(k)
                rv = rv - m.v.scale(k)
                break
        else:
            raise ValueError("synchronisation not covered by minimal ones")
    return out


def _max_fit(ru, rv, m):
    k = None
    for have, need in zip(ru.counts + rv.counts, m.u.counts + m.v.counts):
        if need:
            fit = have // need
            k = fit if k is None else min(k, fit)
    return 1 if k is None else k
