#!/usr/bin/env python3
"""Check the per-trajectory identity: steepest-descent contribution of each
stationary point must reproduce that trajectory's bare term exactly (up to a
sqrt-branch sign). |c/t| must be 1 to machine precision if S,G,sigma,M,f are
all consistent."""
import numpy as np
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of, E_of
from proto3 import partner, ok_lo

for i in [10, 40, 80, 120, 150, 155, 160, 170, 190]:
    T = Ts[i]
    ra, rb = record(fam[i], T), record(partner[i], T)
    Ea, Eb = E_of(ra), E_of(rb)
    W = -0.75*(Ea - Eb)
    plus, minus, Ep, Em = ra, rb, Ea, Eb
    if W.imag < 0:
        W = -W
        plus, minus, Ep, Em = rb, ra, Eb, Ea
    logW = np.log(W)
    sqB = np.exp(logW/3.0)
    fp = np.sqrt(2.0*plus['muv']*sqB/(1j*plus['mvv']))
    fm = np.sqrt(-2.0*minus['muv']*sqB/(1j*minus['mvv']))
    cp = fp*np.exp(1j*Ep)/np.sqrt(-2j*sqB)
    cm = fm*np.exp(1j*Em)/np.sqrt(+2j*sqB)
    tp, tm = bare_of(plus), bare_of(minus)
    print("T=%6.3f  cp/tp=%8.4f%+8.4fj  cm/tm=%8.4f%+8.4fj  |B|=%.3f argW=%+.3fpi"
          % (T, (cp/tp).real, (cp/tp).imag, (cm/tm).real, (cm/tm).imag,
             abs(sqB)**2, np.angle(W)/np.pi))
