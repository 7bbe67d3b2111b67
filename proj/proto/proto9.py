#!/usr/bin/env python3
"""Subset matching in the COMPLEX value: which roots sum to exact?"""
import numpy as np
from itertools import combinations
from proto1 import z, exact_K
from proto2 import record, bare_of, multistart

for T in (0.6, 1.0, 1.4, 1.8, 2.2, 2.35, 2.5, 2.8, 3.0):
    roots = multistart(T, half=6.0, ngrid=25)
    recs = [record(v0, T) for v0 in roots]
    terms = [(bare_of(r), r) for r in recs]
    terms.sort(key=lambda p: abs(p[0]))          # ascending |t|
    keep = [(t, r) for t, r in terms if abs(t) < 50.0]
    ex = exact_K(z*z, T)
    print("T=%.2f  exact=%.6f%+.6fj" % (T, ex.real, ex.imag))
    for j, (t, r) in enumerate(keep):
        print("  [%d] v0=%9.4f%+9.4fj  |t|=%10.4e  t=%10.6f%+10.6fj" %
              (j, r['v0'].real, r['v0'].imag, abs(t), t.real, t.imag))
    best = None
    for k in range(1, min(6, len(keep)) + 1):
        for combo in combinations(range(len(keep)), k):
            s = sum(keep[j][0] for j in combo)
            e = abs(s - ex)/abs(ex)
            if best is None or e < best[0]:
                best = (e, combo)
    print("  best complex subset %s  rel err=%.3e" % (best[1], best[0]))
    print()
