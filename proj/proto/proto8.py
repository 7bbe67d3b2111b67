#!/usr/bin/env python3
"""At selected T: wide multistart, all distinct BVP roots, bare term of each,
and errors of cumulative sums (sorted by |t| desc).  Find the physical subset."""
import numpy as np
from itertools import combinations
from proto1 import z, exact_K
from proto2 import record, bare_of, multistart

for T in (1.4, 1.8, 2.2, 2.5, 2.8, 3.0):
    roots = multistart(T, half=6.0, ngrid=25)
    recs = [record(v0, T) for v0 in roots]
    terms = [(bare_of(r), r) for r in recs]
    terms.sort(key=lambda p: -abs(p[0]))
    ex = exact_K(z*z, T)
    print("T=%.2f  exact=%.6f%+.6fj  |K|^2=%.6f  nroots=%d" %
          (T, ex.real, ex.imag, abs(ex)**2, len(terms)))
    for t, r in terms[:6]:
        print("   v0=%9.4f%+9.4fj  n=%8.4f%+8.4fj  |t|=%9.3e  t=%9.5f%+9.5fj" %
              (r['v0'].real, r['v0'].imag, r['n'].real, r['n'].imag, abs(t),
               t.real, t.imag))
    best = None
    for k in range(1, min(5, len(terms)) + 1):
        for combo in combinations(range(len(terms)), k):
            s = sum(terms[j][0] for j in combo)
            e = abs(abs(s)**2 - abs(ex)**2)/abs(ex)**2
            if best is None or e < best[0]:
                best = (e, combo)
    print("   best subset %s  err|K|^2=%.3e" % (best[1], best[0]))
    print()
