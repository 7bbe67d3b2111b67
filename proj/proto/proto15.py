#!/usr/bin/env python3
"""Exact conjugate propagator as Laurent series + wedge inverse transform.

Ktil_q(w) = (1/sqrt(2 pi i)) (1/w) sum_m (u'/w)^m e^{-i(m+1/2)^2 T}
Inverse:  K(v'') = (1/sqrt(2 pi i)) Int Ktil(w) e^{w v''} dw over wedge
  w(t) = alpha + |t| e^{i sgn(t)(pi/2+tau)},  t in (-L, L)
Then replace Ktil_q by the semiclassical Ktil_sc (k=1 sheet, zeta form) and
compare both inverse values against exact K."""
import numpy as np
from proto1 import z, exact_K

sqrt2pii = np.sqrt(2*np.pi)*np.exp(1j*np.pi/4)

def Ktil_q(w, T, M=300):
    r = z/w
    s = np.zeros_like(w)
    for m in range(M-1, -1, -1):
        s = s*r + np.exp(-1j*(m+0.5)**2*T)
    return (1.0/sqrt2pii)*s/w

def Ktil_sc(w, T):
    """k=1 sheet semiclassical conjugate propagator (quartic closed form)."""
    zeta = np.log(w)             # principal: fine for the wedge (|arg w|<pi)
    n0 = (-1j*np.log(z) + 2*np.pi - 2*T)/(2*T)
    n = 1j*zeta/(2*T) + n0
    St = (n*n - 0.25)*T
    Gt = (2*n + 1)*T
    amp = np.exp(1j*np.pi/4)/np.sqrt(2*T*z*np.exp(np.real(zeta)))
    sig = np.imag(zeta) - 2.5*np.pi
    return amp*np.exp(-0.5j*sig)*np.exp(1j*(St+Gt))

def invert(Kf, T, alpha=1.0, tau=np.pi/4, L=60.0, m=600001):
    t = np.linspace(-L, L, m)
    e = np.exp(1j*np.sign(t)*(np.pi/2+tau))
    w = alpha + np.abs(t)*e
    dw = e*np.sign(t)
    dw[t == 0] = 1.0  # measure-zero point, direction irrelevant
    f = Kf(w, T)*np.exp(w*z)*dw
    return (1.0/sqrt2pii)*np.trapz(f, t)

print("  T     inv(Ktil_q) vs exact     inv(Ktil_sc) vs exact")
for T in (0.5, 1.0, 1.5, 2.0, 2.1, 2.2, 2.3, 2.35, 2.4, 2.5, 2.6, 2.8, 3.0):
    ex = exact_K(z*z, T)
    kq = invert(Ktil_q, T)
    ks = invert(Ktil_sc, T)
    print("%5.2f   %.3e                %.3e   (ks=%9.6f%+9.6fj ex=%9.6f%+9.6fj)" %
          (T, abs(kq-ex)/abs(ex), abs(ks-ex)/abs(ex), ks.real, ks.imag, ex.real, ex.imag))
