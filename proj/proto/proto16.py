#!/usr/bin/env python3
"""Engineered true-caustic scenario for the quartic model.

Pick T_c, set n_c = i/(2 T_c), v0_c = n_c/u', v'' = v0_c e^{i(2n_c+2)T_c}.
Then the VV problem (u', v'') has an exact caustic at T_c: m_vv = 0.
Check: continued family around T_c, |m_vv| dip, nearby pair for the uniform,
bare blow-up vs exact, uniform finiteness/smoothness at T_c +- {1e-3,1e-2}.
"""
import numpy as np
from proto1 import z as zfig, exact_K

u0 = 1.0/(2.0*np.sqrt(2.0))
Tc = 1.0
nc = 0.5j/Tc
v0c = nc/u0
vpp = v0c*np.exp(1j*(2*nc+2)*Tc)
print("u' =", u0, " v'' =", vpp, " v0_c =", v0c)

def flow(v0, T):
    n = u0*v0
    Om = 2*n+2
    vT = v0*np.exp(1j*Om*T)
    mvv = np.exp(2j*(n+1)*T)*(1+2j*n*T)
    muv = -2j*T*u0*u0*np.exp(-1j*Om*T)
    return vT, mvv, muv, n

def newton(v0, T, tol=1e-12, itmax=60):
    for _ in range(itmax):
        vT, mvv, _, _ = flow(v0, T)
        r = vT - vpp
        if abs(r) < tol:
            return v0
        # dvT/dv0 = m_vv
        step = r/mvv
        # damped
        for _ in range(8):
            v1 = v0 - step
            r1 = flow(v1, T)[0] - vpp
            if abs(r1) < abs(r):
                break
            step /= 2
        v0 = v1
    return v0 if abs(flow(v0, T)[0]-vpp) < 1e-9 else None

def E_of(v0, T):
    """S + G + (i ln|muv| - sigma_uv)/2 for quartic closed form."""
    n = u0*v0
    S = (n*n - 0.25)*T + (2*n+2)*n*T - (n*n+2*n+0.25)*T  # (nH'-H)T
    S = (n*(2*n+2) - (n*n+2*n+0.25))*T - 1j*n
    G = (2*n+1)*T
    muv = -2j*T*u0*u0*np.exp(-1j*(2*n+2)*T)
    # sigma_uv: continuous from base arg(-2i t u0^2) at t->0+, along t in [0,T]
    # muv(t) = -2i t u0^2 e^{-i Om t}: arg = base - Re(Om) t
    Om = 2*n+2
    sig = np.angle(-2j*u0*u0) - np.real(Om)*T
    return S + G + (1j*np.log(abs(muv)) - sig)/2.0

def bare_t(v0, T):
    n = u0*v0
    S = (n*(2*n+2) - (n*n+2*n+0.25))*T - 1j*n
    G = (2*n+1)*T
    mvv = np.exp(2j*(n+1)*T)*(1+2j*n*T)
    # sigma_vv from 0, track arg(mvv(t)) along t
    ts = np.linspace(0, T, 4001)
    mv = np.exp(2j*(n+1)*ts)*(1+2j*n*ts)
    sig = np.concatenate([[0], np.cumsum(np.angle(mv[1:]/mv[:-1]))])[-1]
    return np.exp(1j*(S+G))*np.exp(-0.5j*sig)/np.sqrt(abs(mvv))

# K = sum_m (zf* z0)^m/m! e^{-iE_m T}; zf* = v'' ; z0 = u' -> x = vpp*u0
def exactK(T):
    x = vpp*u0
    m = np.arange(120)
    import scipy.special as sp
    return np.sum(x**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

# continued family: anchor at T=0.6 from... seed by analytic branch near v0_c:
# continue from Tc outward with tiny offsets, and from T=0 with v0=vpp.
print("\nfamily from T=0 (v0=vpp) continued up:")
Ts = np.linspace(0.01, 1.4, 140)
v0 = vpp
fam = {}
for T in Ts:
    v0n = newton(v0, T)
    if v0n is None:
        print("  lost at T=%.3f" % T)
        break
    v0 = v0n
    fam[round(T,6)] = v0
    _, mvv, _, n = flow(v0, T)
print("  reached T=%.3f" % max(fam))
for T in (0.6, 0.8, 0.9, 0.95, 0.99, 1.0, 1.01, 1.05, 1.1, 1.2, 1.4):
    if round(T,6) in fam:
        v0 = fam[round(T,6)]
        _, mvv, _, n = flow(v0, T)
        print("  T=%5.3f v0=%9.5f%+9.5fj |mvv|=%10.3e  n=%8.5f%+8.5fj  |1+2inT|=%9.2e"
              % (T, v0.real, v0.imag, abs(mvv), n.real, n.imag, abs(1+2j*n*T)))
