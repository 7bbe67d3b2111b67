#!/usr/bin/env python3
"""Pair selection study: at each T, filter roots (|t|<50), compute u'' for each,
examine ALL pairs: |du''|, W, and 6 candidate uniform values (3 classes x 2
labelings).  Report the best candidate + whether nearest-u'' pair with some
fixed class rule stays within 10%."""
import numpy as np
from scipy import special
from proto1 import z, exact_K
from proto2 import record, bare_of, E_of, multistart

def uval(ra, rb, cls, swap):
    """Uniform closed form for pair (ra=+, rb=-) honoring class cls.
    swap toggles which member is '+'. Returns complex value."""
    if swap:
        ra, rb = rb, ra
    Ep, Em = E_of(ra), E_of(rb)
    W = -0.75*(Ep - Em)
    A = 0.5*(Ep + Em)
    logW = np.log(W)
    sqB = np.exp(logW/3.0)
    B = sqB*sqB
    fp = np.sqrt(2.0*ra['muv']*sqB/(1j*ra['mvv']))
    fm = np.sqrt(-2.0*rb['muv']*sqB/(1j*rb['mvv']))
    cp = fp*np.exp(1j*Ep)/np.sqrt(-2j*sqB)
    cm = fm*np.exp(1j*Em)/np.sqrt(+2j*sqB)
    tp, tm = bare_of(ra), bare_of(rb)
    if np.real(cp/tp) < 0:
        fp = -fp
    if np.real(cm/tm) < 0:
        fm = -fm
    c0 = 0.5*(fp+fm)
    c1 = (fp-fm)/(2*sqB)
    w = np.exp(2j*np.pi/3)
    if cls == 'LR':
        ai, aip, _, _ = special.airy(-B)
        J0, J1 = 2*np.pi*ai, -2j*np.pi*aip
    elif cls == 'DR':
        ai, aip, _, _ = special.airy(-B/w)
        J0 = -np.conj(w)*2*np.pi*ai
        J1 = 2j*np.pi*np.exp(-4j*np.pi/3)*aip
    else:
        ai, aip, _, _ = special.airy(-B*w)
        J0 = -w*2*np.pi*ai
        J1 = 2j*np.pi*np.exp(4j*np.pi/3)*aip
    return np.exp(1j*A)/np.sqrt(2*np.pi)*(c0*J0 + c1*J1), W, B

Ts = np.linspace(0.05, 3.0, 60)
print("  T     pair(u'')      |du''|  argW/pi  |W|   best-cand  err_best   err_nearest_by_class: LR / DR / LD (canon)")
for T in Ts:
    roots = multistart(T, half=6.0, ngrid=25)
    recs = [record(v0, T) for v0 in roots]
    keep = [r for r in recs if abs(bare_of(r)) < 50.0]
    ex = exact_K(z*z, T)
    # u'' for each root
    for r in keep:
        n = r['n']
        r['upp'] = z*np.exp(-1j*(2*n+2)*T)
    # all pairs
    pairs = []
    for a in range(len(keep)):
        for b in range(a+1, len(keep)):
            d = abs(keep[a]['upp'] - keep[b]['upp'])
            pairs.append((d, a, b))
    pairs.sort()
    if not pairs:
        continue
    best = None
    for d, a, b in pairs[:6]:
        for cls in ('LR', 'DR', 'LD'):
            for swap in (False, True):
                v, W, B = uval(keep[a], keep[b], cls, swap)
                e = abs(abs(v)**2 - abs(ex)**2)/abs(ex)**2
                if best is None or e < best[0]:
                    best = (e, d, a, b, cls, swap, W)
    # nearest pair with canonical labeling (Im W >= 0), each class
    d0, a0, b0 = pairs[0]
    Ep, Em = E_of(keep[a0]), E_of(keep[b0])
    Wn = -0.75*(Ep-Em)
    sw = Wn.imag < 0
    errs = []
    for cls in ('LR', 'DR', 'LD'):
        v, W, B = uval(keep[a0], keep[b0], cls, sw)
        errs.append(abs(abs(v)**2 - abs(ex)**2)/abs(ex)**2)
    print("%5.2f  (%d,%d) d=%.3f | best: (%d,%d) %s swap=%d err=%.2e argW=%.3fpi |W|=%.2f | near: %.2e %.2e %.2e" %
          (T, a0, b0, d0, best[2], best[3], best[4], best[5], best[0],
           np.angle(best[6])/np.pi, abs(best[6]), errs[0], errs[1], errs[2]))
