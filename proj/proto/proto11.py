#!/usr/bin/env python3
"""Ground truth for the uniform: numerically evaluate the inverse transform
K(v'') = (1/sqrt(2 pi i)) Int Ktil(u'') e^{u'' v''} du''
for the quartic at the diagonal point, using the exact closed form of Ktil on
the k=1 sheet (both relevant saddles live there).

In zeta (w = e^zeta):
  n(zeta)  = (i zeta - i Log z + 2 pi - 2T)/(2T)
  Stil     = (n^2 - 1/4) T,  Gtil = (2n+1) T
  |Muv|    = 2 T z e^{Re zeta},  sigma_til = Im zeta - 5 pi/2
  integrand = sqrt(i/|Muv|) e^{-i sigma/2} e^{i(Stil+Gtil)} e^{z e^zeta} e^{zeta}
Contour: hairpin entering from Re zeta=+inf at Im zeta=-3pi/4, bulging through
the saddle strip, exiting at Im zeta=+2.65 (above the fam saddle at Im 2.51).
"""
import numpy as np
from proto1 import z, exact_K

sqrt_i = np.exp(1j*np.pi/4)
inv_sqrt_2pii = np.exp(-1j*np.pi/4)/np.sqrt(2*np.pi)

def Kback(T, lo=-3*np.pi/4, hi=2.65, X0=-6.0, X1=14.0, m=120001):
    n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
    def integrand(zeta):
        n = 1j*zeta/(2*T) + n0
        St = (n*n - 0.25)*T
        Gt = (2*n + 1)*T
        amp = sqrt_i/np.sqrt(2*T*z*np.exp(np.real(zeta)))
        sig = np.imag(zeta) - 2.5*np.pi
        return amp*np.exp(-0.5j*sig)*np.exp(1j*(St+Gt))*np.exp(z*np.exp(zeta))*np.exp(zeta)
    # three legs: down-arm (X1 -> X0 at Im=lo), riser (lo -> hi at Re=X0),
    # up-arm (X0 -> X1 at Im=hi)
    val = 0j
    for za, zb in (((X1+1j*lo), (X0+1j*lo)),
                   ((X0+1j*lo), (X0+1j*hi)),
                   ((X0+1j*hi), (X1+1j*hi))):
        s = np.linspace(0, 1, m)
        pts = za + (zb-za)*s
        f = integrand(pts)
        val += np.trapz(f, pts)
    return inv_sqrt_2pii*val

for T in (1.0, 1.5, 2.0, 2.1, 2.2, 2.3, 2.35, 2.4, 2.5, 2.6, 2.8, 3.0):
    k = Kback(T)
    ex = exact_K(z*z, T)
    # convergence check with denser grid / wider span
    k2 = Kback(T, X1=17.0, m=240001)
    print("T=%.2f  Kback=%9.6f%+9.6fj  exact=%9.6f%+9.6fj  |rel|=%.3e  conv=%.1e" %
          (T, k.real, k.imag, ex.real, ex.imag, abs(k-ex)/abs(ex), abs(k2-k)/abs(k)))
