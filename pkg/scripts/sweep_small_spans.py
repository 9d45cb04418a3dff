#!/usr/bin/env python3
"""Exhaustively factor every small span and verify the round trip.

Enumerates all contention-model spans up to a carrier size and boundary
width (every contention relation, every pair of valid legs), and all
multiset-model spans up to a carrier, boundary and entry bound, then
checks decompose followed by evaluation lands back on the same span up
to isomorphism.
"""

import argparse
import itertools
import sys
import time

from linkalg import span_c, span_m
from linkalg.contention import CSet, discrete, indep_masks, set_of
from linkalg.crel import CRel, validate
from linkalg.decompose import decompose
from linkalg.multiset import MRel
from linkalg.span_c import SpanC
from linkalg.span_m import SpanM
from linkalg.terms import eval_c, eval_m


def all_csets(max_size):
    for n in range(max_size + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for k in range(len(pairs) + 1):
            for chosen in itertools.combinations(pairs, k):
                yield CSet(n, frozenset(chosen))


def all_legs(dom, cod):
    choices = [set_of(m) for m in indep_masks(cod)]
    for images in itertools.product(choices, repeat=dom.size):
        r = CRel(dom, cod, tuple(images))
        if validate(r):
            yield r


def sweep_c(max_carrier, max_boundary):
    bad = total = 0
    for car in all_csets(max_carrier):
        for k in range(max_boundary + 1):
            legs_l = list(all_legs(car, discrete(k)))
            for l in range(max_boundary + 1):
                for lf in legs_l:
                    for rf in all_legs(car, discrete(l)):
                        s = SpanC(k, l, car, lf, rf)
                        total += 1
                        if not span_c.iso_check(eval_c(decompose(s)), s):
                            bad += 1
                            print(f"FAIL c: {s.to_dict()}")
    return total, bad


def sweep_m(max_carrier, max_boundary, max_entry):
    bad = total = 0
    rows = lambda w: list(itertools.product(range(max_entry + 1), repeat=w))
    for k in range(max_boundary + 1):
        for l in range(max_boundary + 1):
            pairs = [(lr, rr) for lr in rows(k) for rr in rows(l)]
            spans = [SpanM(k, l, 0, MRel(0, k, []), MRel(0, l, []))]
            spans += [SpanM(k, l, 1, MRel(1, k, [p[0]]), MRel(1, l, [p[1]])) for p in pairs]
            if max_carrier >= 2:
                for i, p in enumerate(pairs):
                    for q in pairs[i + 1:]:
                        spans.append(
                            SpanM(k, l, 2, MRel(2, k, [p[0], q[0]]), MRel(2, l, [p[1], q[1]]))
                        )
            for s in spans:
                total += 1
                if not span_m.iso_check(eval_m(decompose(s)), s):
                    bad += 1
                    print(f"FAIL m: {s.to_dict()}")
    return total, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--carrier", type=int, default=2, help="max carrier size (default 2)")
    ap.add_argument("--boundary", type=int, default=2, help="max boundary width (default 2)")
    ap.add_argument("--entries", type=int, default=2, help="max multiset entry (default 2)")
    args = ap.parse_args()
    if args.carrier > 2:
        ap.error("carrier sizes above 2 are enumerated pairwise only; keep --carrier <= 2")

    t0 = time.perf_counter()
    total_c, bad_c = sweep_c(args.carrier, args.boundary)
    t1 = time.perf_counter()
    print(f"contention model: {total_c} spans, {bad_c} failures, {t1 - t0:.1f}s")
    total_m, bad_m = sweep_m(args.carrier, args.boundary, args.entries)
    print(f"multiset model:   {total_m} spans, {bad_m} failures, {time.perf_counter() - t1:.1f}s")
    return 1 if bad_c or bad_m else 0


if __name__ == "__main__":
    sys.exit(main())
