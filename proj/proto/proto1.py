#!/usr/bin/env python3
"""Prototype: quartic model (a^+a+1/2)^2, hbar=b=c=1, diagonal z=1/(2 sqrt 2).

Closed forms for number-diagonal symbols:
  Htil(n) = n^2 + 2n + 1/4,  Htil'(n) = 2n+2,  Htil''=2,  n=uv conserved.
  u(t)=u0 e^{-i Om t}, v(t)=v0 e^{+i Om t}, Om=Htil'(n)
  M_uu = e^{-iOmT}(1-2inT), M_uv=-2iT u0^2 e^{-iOmT},
  M_vu = +2iT v0^2 e^{iOmT}, M_vv = e^{iOmT}(1+2inT)
  S = [n Htil' - Htil] T - i n   (hbar=1, boundary term -i n)
  G = (2n+1) T
  sigma_vv = unwound arg M_vv(t), t: 0->T
"""
import numpy as np
from scipy import special

z = 1.0/(2.0*np.sqrt(2.0))


def Om(n): return 2.0*n + 2.0


def flow_vT(v0, T, u0=z):
    n = u0*v0
    return v0*np.exp(1j*Om(n)*T)


def Mvv(v0, T, u0=z):
    n = u0*v0
    return np.exp(1j*Om(n)*T)*(1.0 + 2j*n*T)


def Muv(v0, T, u0=z):
    n = u0*v0
    return -2j*T*u0**2*np.exp(-1j*Om(n)*T)


def sigma_vv(v0, T, u0=z, m=4000):
    # unwound arg of Mvv(t) along t in [0,T]
    ts = np.linspace(0, T, m)
    n = u0*v0
    ph = np.unwrap(np.angle(np.exp(1j*Om(n)*ts)*(1.0+2j*n*ts)))
    return ph[-1] - ph[0]


def sigma_uv(v0, T, u0=z, m=4000):
    ts = np.linspace(1e-9, T, m)
    n = u0*v0
    ph = np.unwrap(np.angle(-2j*ts*u0**2*np.exp(-1j*Om(n)*ts)))
    return ph[-1]


def S_and_G(v0, T, u0=z):
    n = u0*v0
    Ht = n**2 + 2*n + 0.25
    Htp = 2*n + 2
    S = (n*Htp - Ht)*T - 1j*n
    G = (2*n + 1)*T
    return S, G


def bare_term(v0, T, u0=z):
    S, G = S_and_G(v0, T, u0)
    sig = sigma_vv(v0, T, u0)
    mvv = Mvv(v0, T, u0)
    return np.exp(1j*(S+G))*np.exp(-0.5j*sig)/np.sqrt(abs(mvv))


def vv_residual(v0, T, u0=z, vpp=z):
    return flow_vT(v0, T, u0) - vpp


def newton_vv(v0, T, u0=z, vpp=z, tol=1e-13, itmax=80):
    for _ in range(itmax):
        r = vv_residual(v0, T, u0, vpp)
        if abs(r) < tol:
            return v0, True
        d = Mvv(v0, T, u0)
        if abs(d) < 1e-15:
            return v0, False
        step = r/d
        # damping
        ok = False
        for k in range(9):
            cand = v0 - step/(2**k)
            if abs(vv_residual(cand, T, u0, vpp)) < abs(r):
                v0 = cand
                ok = True
                break
        if not ok:
            v0 = v0 - step
    return v0, abs(vv_residual(v0, T, u0, vpp)) < 1e-9


def exact_K(x, T, N=80):
    m = np.arange(N)
    return np.sum(x**m/special.factorial(m)*np.exp(-1j*(m+0.5)**2*T))


# --- (1) continued family + bare vs exact over the sweep ---
Ts = np.linspace(0.05, 3.0, 200)
v0 = z
fam = []
for T in Ts:
    v0, ok = newton_vv(v0, T)
    assert ok, T
    fam.append(v0)
fam = np.array(fam)

bare = np.array([bare_term(fam[i], Ts[i]) for i in range(len(Ts))])
exact = np.array([exact_K(z*z, T) for T in Ts])
rel = np.abs(np.abs(bare)**2 - np.abs(exact)**2)/np.abs(exact)**2
m1 = (Ts >= 0.1) & (Ts <= 1.5)
m2 = (Ts >= 2.0) & (Ts <= 3.0)
print("bare rel-err |K|^2: max on [0.1,1.5] =", rel[m1].max())
print("bare rel-err |K|^2: max on [2.0,3.0] =", rel[m2].max())
print("min |Mvv| along family:", min(abs(Mvv(fam[i], Ts[i])) for i in range(len(Ts))))
