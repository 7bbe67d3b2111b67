#!/usr/bin/env python3
"""Prototype round 2: continue the partner family in T, canonicalize labels so
the dominant contribution is '+', inspect magnitudes, test uniform vs exact."""
import numpy as np
from scipy import special
from proto1 import (z, Om, flow_vT, Mvv, Muv, sigma_vv, sigma_uv, S_and_G,
                    newton_vv, exact_K, Ts, fam)
from proto2 import record, bare_of, E_of, multistart, SQ2PI

# --- locate the partner family once where the pair is closest (T ~ 2.36) ---
i0 = int(np.argmin(np.abs(Ts - 2.363)))
T0 = Ts[i0]
roots = multistart(T0, half=3.0, ngrid=17)
cont0 = fam[i0]
rc0 = record(cont0, T0)
others = [r for r in roots if abs(r - cont0) > 1e-6]
part0 = min(others, key=lambda r: abs(record(r, T0)['uT'] - rc0['uT']))
print("T0=%.3f continued=%s partner=%s" % (T0, cont0, part0))

# continue partner family down to 0.05 and up to 3.0
partner = np.empty(len(Ts), dtype=complex)
partner[i0] = part0
ok_lo = 0
for i in range(i0-1, -1, -1):
    r, ok = newton_vv(partner[i+1], Ts[i])
    if not ok or abs(r - fam[i]) < 1e-6:
        ok_lo = i+1
        print("partner family lost below T=%.3f (ok=%s)" % (Ts[i], ok))
        break
    partner[i] = r
for i in range(i0+1, len(Ts)):
    r, ok = newton_vv(partner[i-1], Ts[i])
    assert ok and abs(r - fam[i]) > 1e-6, (i, Ts[i])
    partner[i] = r


def uniform_dom(rec_a, rec_b):
    """Labels: '+' = dominant contribution (Im W >= 0); principal Airy."""
    Ea, Eb = E_of(rec_a), E_of(rec_b)
    W = -0.75*(Ea - Eb)
    plus, minus = rec_a, rec_b
    if W.imag < 0 or (W.imag == 0 and W.real < 0):
        W = -W
        plus, minus = rec_b, rec_a
    Ep, Em = E_of(plus), E_of(minus)
    A = 0.5*(Ep + Em)
    logW = np.log(W)
    B = np.exp(2.0/3.0*logW)
    sqB = np.exp(1.0/3.0*logW)
    fp = np.sqrt(2.0*plus['muv']*sqB/(1j*plus['mvv']))
    fm = np.sqrt(-2.0*minus['muv']*sqB/(1j*minus['mvv']))
    cp = fp*np.exp(1j*Ep)/np.sqrt(-2j*sqB)
    cm = fm*np.exp(1j*Em)/np.sqrt(+2j*sqB)
    tp, tm = bare_of(plus), bare_of(minus)
    if np.real(cp/tp) < 0:
        fp = -fp
    if np.real(cm/tm) < 0:
        fm = -fm
    c0 = 0.5*(fp + fm)
    c1 = (fp - fm)/(2.0*sqB)
    ai, aip, _, _ = special.airy(-B)
    return SQ2PI*np.exp(1j*A)*(c0*ai - 1j*c1*aip), B, W


worst = (0.0, None)
print("\n  T      |c_cont|   |c_part|   argW/pi   |B|    rel|K|^2")
for i in range(ok_lo, len(Ts), 2):
    T = Ts[i]
    rc = record(fam[i], T)
    rp = record(partner[i], T)
    val, B, W = uniform_dom(rc, rp)
    ex = exact_K(z*z, T)
    r2 = abs(abs(val)**2 - abs(ex)**2)/abs(ex)**2
    if r2 > worst[0]:
        worst = (r2, T)
    if i % 10 == 0 or r2 > 0.08:
        print("%6.3f  %9.3e  %9.3e  %7.3f  %6.3f  %.2e"
              % (T, abs(bare_of(rc)), abs(bare_of(rp)),
                 np.angle(W)/np.pi, abs(B), r2))
print("worst rel err |K|^2 = %.3e at T=%.3f  (family valid from T=%.3f)"
      % (worst[0], worst[1], Ts[ok_lo]))
