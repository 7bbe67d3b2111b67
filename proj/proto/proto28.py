#!/usr/bin/env python3
"""Scan caustic scenario T_c for acceptance-6 bare contrast.

Family: n_c = i/(2 T_c), v0_c = n_c/u0, vpp = v0_c e^{i(2n_c+2)T_c}.
At probes T_c +/- {1e-3, 1e-2}: single-family bare/exact and pair-sum/exact.
"""
import numpy as np
import scipy.special as sp

u0 = 1.0/(2.0*np.sqrt(2.0))

def flow_all(v0, T):
    n = u0*v0
    vT = v0*np.exp(1j*(2*n+2)*T)
    mvv = np.exp(2j*(n+1)*T)*(1+2j*n*T)
    muv = -2j*T*u0*u0*np.exp(-1j*(2*n+2)*T)
    return vT, mvv, muv, n

def newton(vpp, v0, T, tol=1e-12, itmax=80):
    for _ in range(itmax):
        vT, mvv, _, _ = flow_all(v0, T)
        r = vT - vpp
        if abs(r) < tol: return v0
        if abs(mvv) < 1e-300: return None
        step = r/mvv
        v1 = v0 - step
        for _ in range(9):
            if abs(flow_all(v1, T)[0] - vpp) < abs(r): break
            step /= 2; v1 = v0 - step
        v0 = v1
    return v0 if abs(flow_all(v0, T)[0]-vpp) < 1e-9 else None

def bare_t(v0, T):
    vT, mvv, muv, n = flow_all(v0, T)
    S = (n*n - 0.25)*T - 1j*n
    G = (2*n+1)*T
    ts = np.linspace(1e-9, T, 4001)
    mv = np.exp(2j*(n+1)*ts)*(1+2j*n*ts)
    sig = np.cumsum(np.concatenate([[np.angle(mv[0])], np.angle(mv[1:]/mv[:-1])]))[-1] - np.angle(mv[0])
    return np.exp(1j*(S+G))*np.exp(-0.5j*sig)/np.sqrt(abs(mvv))

def exactK(vpp, T):
    m = np.arange(250)
    return np.sum((vpp*u0)**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

for Tc in (0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0):
    nc = 1j/(2*Tc)
    v0c = nc/u0
    vpp = v0c*np.exp(1j*(2*nc+2)*Tc)
    line = "Tc=%.2f |x|=%.3f:" % (Tc, abs(vpp*u0))
    ok = True
    for d in (-1e-2, -1e-3, 1e-3, 1e-2):
        T = Tc + d
        # roots near v0c
        seeds = [v0c + r*np.exp(1j*a) for r in (0.05, 0.2, 0.5, 1.0)
                 for a in np.linspace(0, 2*np.pi, 8, endpoint=False)] + [v0c]
        roots = []
        for sd in seeds:
            r = newton(vpp, sd, T)
            if r is not None and all(abs(r-q) > 1e-6 for q in roots):
                roots.append(r)
        roots.sort(key=lambda r: abs(r-v0c))
        pair = roots[:2]
        ex = abs(exactK(vpp, T))**2
        t1 = abs(bare_t(pair[0], T))**2/ex
        ts = abs(sum(bare_t(r, T) for r in pair))**2/ex if len(pair) == 2 else float('nan')
        line += "  d=%+.0e: 1f=%.1fx pair=%.1fx" % (d, t1, ts)
        if ts < 10: ok = False
    print(line + ("   <-- all pair>=10x" if ok else ""))
