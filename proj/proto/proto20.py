#!/usr/bin/env python3
"""Map the (a)/(b) assembly handoff and class rules.

1. fig1 sweep: assembly (a), all 3 classes, with argWa, to test rules.
2. caustic scenario extended probes: both assemblies x 3 classes.
"""
import numpy as np
import scipy.special as sp

u0 = 1.0/(2.0*np.sqrt(2.0))

def make(vpp):
    def flow(v0, T):
        n = u0*v0
        Om = 2*n+2
        return v0*np.exp(1j*Om*T), np.exp(2j*(n+1)*T)*(1+2j*n*T), -2j*T*u0*u0*np.exp(-1j*Om*T), n
    def newton(v0, T, tol=1e-12, itmax=80):
        for _ in range(itmax):
            vT, mvv, _, _ = flow(v0, T)
            r = vT - vpp
            if abs(r) < tol:
                return v0
            step = r/mvv
            for _ in range(9):
                v1 = v0 - step
                if abs(flow(v1, T)[0] - vpp) < abs(r):
                    break
                step /= 2
            v0 = v1
        return v0 if abs(flow(v0, T)[0]-vpp) < 1e-9 else None
    def all_roots(T, lim=3.0, gn=14):
        roots = []
        for re in np.linspace(-lim, lim, gn):
            for im in np.linspace(-lim, lim, gn):
                r = newton(re+1j*im, T)
                if r is None: continue
                if abs(r.real) > lim or abs(r.imag) > lim: continue
                if all(abs(r-q) > 1e-7 for q in roots):
                    roots.append(r)
        return sorted(roots, key=lambda q: (round(q.real,9), round(q.imag,9)))
    def record(v0, T):
        vT, mvv, muv, n = flow(v0, T)
        S = (n*(2*n+2) - (n*n+2*n+0.25))*T - 1j*n
        G = (2*n+1)*T
        ts = np.linspace(1e-9, T, 6001)
        mv = np.exp(2j*(n+1)*ts)*(1+2j*n*ts)
        sig_vv = np.cumsum(np.concatenate([[np.angle(mv[0])], np.angle(mv[1:]/mv[:-1])]))[-1] - np.angle(mv[0])
        sig_uv = np.angle(-2j*u0*u0) - np.real(2*n+2)*T
        uT = u0*np.exp(-1j*(2*n+2)*T)
        t = np.exp(1j*(S+G))*np.exp(-0.5j*sig_vv)/np.sqrt(abs(mvv))
        R = G + (1j*np.log(abs(muv)) - sig_uv)/2.0
        return dict(v0=v0, uT=uT, mvv=mvv, muv=muv, S=S, R=R, n=n, t=t, E=S+R)
    return flow, newton, all_roots, record

def airy_sol(zeta, cls):
    if cls == 'LR':
        return sp.airy(zeta)[0:2]
    w = np.exp(2j*np.pi/3) if cls == 'LD' else np.exp(-2j*np.pi/3)
    a, ap = sp.airy(zeta*w)[0:2]
    return -w*a, -w*w*ap

def uni(ra, rb, mode, cls):
    Ea, Eb = (ra['E'], rb['E']) if mode == 'a' else (ra['S'], rb['S'])
    A = (Ea+Eb)/2.0
    W = -0.75*(Ea-Eb)
    B = np.power(complex(W), 2.0/3.0)
    s = np.sqrt(complex(B))
    fs = []
    for sgn, r in ((+1, ra), (-1, rb)):
        f = np.sqrt(sgn*2*r['muv']*s/(1j*r['mvv']))
        if mode == 'b':
            f = f*np.exp(1j*r['R'])
        c = f*np.exp(1j*(A - sgn*(2.0/3.0)*W))/np.sqrt(-sgn*2j*s)
        if np.real(c/r['t']) < 0:
            f = -f
        fs.append(f)
    fp, fm = fs
    c0 = (fp+fm)/2.0
    c1 = (fp-fm)/(2.0*s)
    ai, aip = airy_sol(-B, cls)
    return np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip), B, W

def pair_of(recs):
    best = min(((abs(recs[i]['uT']-recs[j]['uT']), i, j)
                for i in range(len(recs)) for j in range(i+1, len(recs))), key=lambda x: x[0])
    return best

def exactK(vpp, T):
    m = np.arange(200)
    return np.sum((vpp*u0)**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

print("== fig1, assembly (a), class scan ==")
print("  T      exact|K|2   a-LR%    a-DR%    a-LD%   argWa/pi  |Wa|   argWb/pi  |Wb|")
flow, newton, all_roots, record = make(u0)
for T in np.arange(1.2, 3.01, 0.1):
    recs = [record(r, T) for r in all_roots(T)]
    recs = [r for r in recs if abs(r['t']) < 50]
    if len(recs) < 2:
        continue
    _, i, j = pair_of(recs)
    ex = abs(exactK(u0, T))**2
    row = "  %4.2f   %8.4f " % (T, ex)
    for cls in ('LR','DR','LD'):
        val, B, Wa = uni(recs[i], recs[j], 'a', cls)
        row += " %7.2f" % (100*abs(abs(val)**2-ex)/ex)
    _, _, Wb = uni(recs[i], recs[j], 'b', 'LR')
    row += "   %+5.2f  %6.3f   %+5.2f  %6.3f" % (np.angle(Wa)/np.pi, abs(Wa), np.angle(Wb)/np.pi, abs(Wb))
    print(row)

print("\n== caustic scenario, extended probes, both assemblies ==")
Tc = 1.0
nc = 0.5j/Tc
vppc = (nc/u0)*np.exp(1j*(2*nc+2)*Tc)
flow, newton, all_roots, record = make(vppc)
print("  dT        exact|K|2  a-LR%   a-DR%   a-LD%   b-LR%   b-DR%   b-LD%  argWa/pi |Wa|  argWb/pi  |Wb|   sep")
for dT in (-0.3,-0.2,-0.1,-0.05,-0.02,-0.01,-0.001,0.001,0.01,0.02,0.05,0.1,0.2,0.3):
    T = Tc + dT
    recs = [record(r, T) for r in all_roots(T, gn=18)]
    if len(recs) < 2:
        continue
    sep, i, j = pair_of(recs)
    ex = abs(exactK(vppc, T))**2
    row = "  %+7.3f   %8.4f " % (dT, ex)
    for mode in ('a','b'):
        for cls in ('LR','DR','LD'):
            val, B, W = uni(recs[i], recs[j], mode, cls)
            row += " %6.1f" % (100*abs(abs(val)**2-ex)/ex)
        if mode == 'a':
            _, _, Wa = uni(recs[i], recs[j], 'a', 'LR')
    _, _, Wb = uni(recs[i], recs[j], 'b', 'LR')
    row += "  %+5.2f %5.2f   %+5.2f %6.4f  %5.3f" % (np.angle(Wa)/np.pi, abs(Wa), np.angle(Wb)/np.pi, abs(Wb), sep)
    print(row)
