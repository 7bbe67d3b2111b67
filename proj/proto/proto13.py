#!/usr/bin/env python3
"""Scan hairpin homotopy classes: entry/exit Im-levels in different decay bands
B_j = (pi/2 + 2pi(j-1), 3pi/2 + 2pi(j-1)) shifted so B0=(pi/2,3pi/2), etc.
Tabulate value vs exact at several T."""
import numpy as np
from proto1 import z, exact_K
from proto2 import record, bare_of, multistart

def Kback(T, im_in, im_out, X0=-6.0, X1=14.0, m=160001):
    n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
    sqrt_i = np.exp(1j*np.pi/4)
    def integrand(zeta):
        n = 1j*zeta/(2*T) + n0
        St = (n*n - 0.25)*T
        Gt = (2*n + 1)*T
        amp = sqrt_i/np.sqrt(2*T*z*np.exp(np.real(zeta)))
        sig = np.imag(zeta) - 2.5*np.pi
        return amp*np.exp(-0.5j*sig)*np.exp(1j*(St+Gt))*np.exp(z*np.exp(zeta))*np.exp(zeta)
    val = 0j
    for za, zb in (((X1+1j*im_in), (X0+1j*im_in)),
                   ((X0+1j*im_in), (X0+1j*im_out)),
                   ((X0+1j*im_out), (X1+1j*im_out))):
        s = np.linspace(0, 1, m)
        pts = za + (zb-za)*s
        f = integrand(pts)
        val += np.trapz(f, pts)
    return np.exp(-1j*np.pi/4)/np.sqrt(2*np.pi)*val

bands = {  # representative Im levels, avoiding saddle Im values (0.63, 2.52)
    'Bm1': -np.pi,          # (-3pi/2, -pi/2)
    'B0':   np.pi,          # (pi/2, 3pi/2)   NOTE: 2.52 < pi -> fam saddle below
    'B1':   3*np.pi,        # (5pi/2, 7pi/2)
}
for T in (1.0, 2.35, 3.0):
    ex = exact_K(z*z, T)
    print("T=%.2f  exact=%s" % (T, ex))
    for nin, iin in bands.items():
        for nout, iout in bands.items():
            if iin >= iout:
                continue
            v = Kback(T, iin, iout)
            print("   %s->%s : %9.6f%+9.6fj   rel=%.3e" %
                  (nin, nout, v.real, v.imag, abs(v-ex)/abs(ex)))
    print()
