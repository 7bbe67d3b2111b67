#!/usr/bin/env python3
"""Trace steepest-descent paths of the transform-back exponent from each saddle.
Phi(zeta) = log(integrand) (fast part): i(Stil+Gtil) + z e^zeta  [+ zeta/2 slowly]
Descent: d zeta/ds = -conj(Phi'(zeta)) normalized; follow both directions.
Report the asymptotic Im zeta band of each end."""
import numpy as np
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of
from proto3 import partner

def trace(T, zeta0, sign, nstep=4000, ds=5e-3):
    n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
    def dPhi(zeta):
        n = 1j*zeta/(2*T) + n0
        # d/dzeta [i(n^2+2n+3/4... wait St+Gt = (n^2+2n+3/4)T] + z e^zeta
        return 1j*(2*n+2)*T*(1j/(2*T)) + z*np.exp(zeta)
    # start slightly off the saddle along +-descent eigendirection
    h = 1e-3
    # second derivative numeric
    d2 = (dPhi(zeta0+h) - dPhi(zeta0-h))/(2*h)
    # descent directions: Re[d2 * e^{2i a}] < 0 -> e^{ia} = +-i/sqrt phase...
    # direction where Re Phi decreases: angle a with Re(d2 e^{2ia}) < 0 max
    a0 = 0.5*(np.pi - np.angle(d2))
    d = np.exp(1j*(a0 + (0 if sign > 0 else np.pi)))
    zeta = zeta0 + 10*h*d
    pts = [zeta]
    for _ in range(nstep):
        g = dPhi(zeta)
        if abs(g) < 1e-14:
            break
        step = -np.conj(g)/abs(g)*ds*max(1.0, abs(zeta - zeta0))
        zeta = zeta + step
        pts.append(zeta)
        if np.real(zeta) > 12:
            break
    return np.array(pts)

for T in (0.30, 2.35, 3.00):
    i = np.argmin(abs(Ts - T))
    T = Ts[i]
    print("T=%.3f" % T)
    for name, v0 in (("fam", fam[i]), ("part", partner[i])):
        if v0 is None:
            continue
        r = record(v0, T)
        n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
        zeta_s = (r['n'] - n0)*2*T/1j
        ends = []
        for sign in (+1, -1):
            p = trace(T, zeta_s, sign)
            ends.append((p[-1].real, p[-1].imag))
        print("  %s saddle zeta=%7.3f%+7.3fj  ends: (%.1f, %.2fpi) & (%.1f, %.2fpi)" %
              (name, zeta_s.real, zeta_s.imag,
               ends[0][0], ends[0][1]/np.pi, ends[1][0], ends[1][1]/np.pi))
    print()
