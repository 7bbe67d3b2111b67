#!/usr/bin/env python3
"""Decompose: does sqrt(2pi) e^{iA} [c0 Ai(-B) - i c1 Ai'(-B)] really reduce to
c+ when c- is negligible?  Work at T=0.329 where |B|=7.8 and c- ~ 1e-9."""
import numpy as np
from scipy import special
import mpmath as mp
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of, E_of
from proto3 import partner

i = 25
T = Ts[i]
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
print("T=%.3f  W=%s  argW=%.3fpi" % (T, W, np.angle(W)/np.pi))
print("B=%s  |B|=%.3f argB=%.3fpi" % (B, abs(B), np.angle(B)/np.pi))
zeta = -B
print("zeta=-B: arg=%.3fpi" % (np.angle(zeta)/np.pi))

ai, aip, _, _ = special.airy(zeta)
mp.mp.dps = 40
ai_mp = complex(mp.airyai(mp.mpc(zeta.real, zeta.imag)))
aip_mp = complex(mp.airyai(mp.mpc(zeta.real, zeta.imag), 1))
print("scipy Ai  =", ai, " mp:", ai_mp)
print("scipy Ai' =", aip, " mp:", aip_mp)

z32 = np.exp(1.5*np.log(zeta))
print("zeta^{3/2} = %s   iW = %s" % (z32, 1j*W))
dom = np.exp(-(2.0/3.0)*z32)/(2*np.sqrt(np.pi)*np.exp(0.25*np.log(zeta)))
sub = np.exp(+(2.0/3.0)*z32)*np.exp(0.25*np.log(zeta))/(2*np.sqrt(np.pi))
print("Ai dominant-term pred = %s" % dom)
print("ratio scipy/dominant  = %s" % (ai/dom))

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
bracket = c0*ai - 1j*c1*aip
pred_plus_bracket = np.exp(-2j/3*W)*np.exp(1j*np.pi/4)*fp/(2*np.sqrt(np.pi)*np.exp(0.25*np.log(B)))
print("bracket               = %s" % bracket)
print("pred f+ part          = %s" % pred_plus_bracket)
print("ratio                 = %s" % (bracket/pred_plus_bracket))
val = np.sqrt(2*np.pi)*np.exp(1j*A)*bracket
print("value=%s  c+=%s  val/c+=%s" % (val, cp, val/cp))
