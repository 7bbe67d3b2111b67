#!/usr/bin/env python3
"""SPA self-check of the transform-back integrand: its saddle contributions
must equal the bare terms t_fam, t_part."""
import numpy as np
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of
from proto3 import partner

def pieces(T):
    n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
    sqrt_i = np.exp(1j*np.pi/4)
    def integrand(zeta):
        n = 1j*zeta/(2*T) + n0
        St = (n*n - 0.25)*T
        Gt = (2*n + 1)*T
        amp = sqrt_i/np.sqrt(2*T*z*np.exp(np.real(zeta)))
        sig = np.imag(zeta) - 2.5*np.pi
        return amp*np.exp(-0.5j*sig)*np.exp(1j*(St+Gt))*np.exp(z*np.exp(zeta))*np.exp(zeta)
    return n0, integrand

T = 2.35
i = np.argmin(abs(Ts - T))
T = Ts[i]
n0, integrand = pieces(T)
pref = np.exp(-1j*np.pi/4)/np.sqrt(2*np.pi)

for name, v0 in (("fam", fam[i]), ("part", partner[i])):
    r = record(v0, T)
    n = r['n']
    # zeta of this saddle: n = i zeta/(2T) + n0 -> zeta = (n - n0) * 2T / i
    zeta_s = (n - n0)*2*T/1j
    w = np.exp(zeta_s)
    print("%s: v0=%s  n=%s" % (name, v0, n))
    print("   zeta_s=%s  w=%s  u''=%s" % (zeta_s, w, z*np.exp(-1j*(2*n+2)*T)))
    # numeric second derivative of log integrand
    h = 1e-4
    f0 = integrand(zeta_s)
    d2 = (np.log(integrand(zeta_s+h)) - 2*np.log(f0) + np.log(integrand(zeta_s-h)))/h**2
    spa = pref*f0*np.sqrt(2*np.pi/(-d2))
    t = bare_of(r)
    print("   spa (both sqrt signs): %s | %s" % (spa, -spa))
    print("   bare t               : %s" % t)
    print("   ratio                : %s" % (spa/t))
