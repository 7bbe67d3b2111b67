#!/usr/bin/env python3
"""Full diagnosis on [1.3, 3.0]: exact vs 1-term bare, 2-term bare, and the three
Airy contour classes (LR, DR, LD) under Im W >= 0 labeling.  Also |f+|, |f-|."""
import numpy as np
from scipy import special
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of, E_of
from proto3 import partner

def airy_cls(B):
    """Return (J0, J1) for the three classes keyed 'LR','DR','LD'."""
    w = np.exp(-2j*np.pi/3)
    ai_m, aip_m, _, _ = special.airy(-B)
    ai_d, aip_d, _, _ = special.airy(-B*w)
    ai_l, aip_l, _, _ = special.airy(-B/w)
    out = {}
    out['LR'] = (2*np.pi*ai_m, -2j*np.pi*aip_m)
    out['DR'] = (-np.exp(-2j*np.pi/3)*2*np.pi*ai_d,
                 2j*np.pi*np.exp(-4j*np.pi/3)*aip_d)
    out['LD'] = (-np.exp(2j*np.pi/3)*2*np.pi*ai_l,
                 2j*np.pi*np.exp(4j*np.pi/3)*aip_l)
    return out

rows = []
for i, T in enumerate(Ts):
    if T < 1.30 or partner[i] is None:
        continue
    ra, rb = record(fam[i], T), record(partner[i], T)
    Ea, Eb = E_of(ra), E_of(rb)
    W = -0.75*(Ea - Eb)
    plus, minus, Ep, Em = ra, rb, Ea, Eb
    if W.imag < 0:
        W = -W
        plus, minus, Ep, Em = rb, ra, Eb, Ea
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
        fp, cp = -fp, -cp
    if np.real(cm/tm) < 0:
        fm, cm = -fm, -cm
    c0 = 0.5*(fp+fm)
    c1 = (fp-fm)/(2*sqB)
    pref = np.exp(1j*A)/np.sqrt(2*np.pi)
    vals = {}
    for k, (J0, J1) in airy_cls(B).items():
        vals[k] = pref*(c0*J0 + c1*J1)
    ex = exact_K(z*z, T)
    b1 = bare_of(ra)
    b2 = tp + tm
    def err(v):
        return abs(abs(v)**2 - abs(ex)**2)/abs(ex)**2
    rows.append((T, np.angle(W)/np.pi, abs(B), abs(fp), abs(fm),
                 err(b1), err(b2), err(vals['LR']), err(vals['DR']), err(vals['LD'])))

print("  T    argW/pi  |B|   |f+|    |f-|    e_bare1  e_bare2   e_LR     e_DR     e_LD")
for r in rows:
    print("%5.3f  %6.3f %6.2f %7.3f %7.3f  %.1e  %.1e  %.1e  %.1e  %.1e" % r)
