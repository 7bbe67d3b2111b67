#!/usr/bin/env python3
"""Variant (b) uniform: cubic map from the pure phase S, with e^{iR} in f_+-.

A = (S+ + S-)/2h, W = -(3/4h)(S+ - S-), B = W^{2/3} principal,
f_+- = e^{iR_+-/h} (+-2 m_uv B^{1/2}/(i m_vv))^{1/2} branch-fixed to bare,
value = sqrt(2pi) e^{iA}[c0 Ai_s(-B) - i c1 Ai_s'(-B)], class by sign(arg W).

Run: caustic probes + full fig1 sweep + T=0.5 reduction.
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

def uni_b(ra, rb):
    A = (ra['S']+rb['S'])/2.0
    W = -0.75*(ra['S']-rb['S'])
    B = np.power(complex(W), 2.0/3.0)
    s = np.sqrt(complex(B))
    fs = []
    for sgn, r in ((+1, ra), (-1, rb)):
        f = np.exp(1j*r['R'])*np.sqrt(sgn*2*r['muv']*s/(1j*r['mvv']))
        c = f*np.exp(1j*(A - sgn*(2.0/3.0)*W))/np.sqrt(-sgn*2j*s)
        if np.real(c/r['t']) < 0:
            f = -f
        fs.append(f)
    fp, fm = fs
    c0 = (fp+fm)/2.0
    c1 = (fp-fm)/(2.0*s)
    argB = np.angle(B)
    bnd = min(abs(argB), abs(abs(argB)-2*np.pi/3)) < 1e-9
    cls = 'LR' if (bnd or abs(argB) >= 2*np.pi/3) else ('DR' if argB > 0 else 'LD')
    ai, aip = airy_sol(-B, cls)
    val = np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    return val, B, W, cls, bnd

def exactK(vpp, T):
    x = vpp*u0
    m = np.arange(160)
    return np.sum(x**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

# ---- caustic scenario ----
Tc = 1.0
nc = 0.5j/Tc
vpp_c = (nc/u0)*np.exp(1j*(2*nc+2)*Tc)
flow, newton, all_roots, record = make(vpp_c)
print("caustic probes (variant b):")
print("  T        exact|K|^2  unif|K|^2   rel     |B|      |W|      cls")
for dT in (-1e-2, -1e-3, 1e-3, 1e-2):
    T = Tc + dT
    recs = [record(r, T) for r in all_roots(T, gn=18)]
    best = min(((abs(recs[i]['uT']-recs[j]['uT']), i, j)
                for i in range(len(recs)) for j in range(i+1, len(recs))), key=lambda x: x[0])
    _, i, j = best
    val, B, W, cls, bnd = uni_b(recs[i], recs[j])
    ex = exactK(vpp_c, T)
    print("  %7.4f  %9.5f  %9.5f  %6.2f%%  %7.4f  %7.1e  %s%s"
          % (T, abs(ex)**2, abs(val)**2, 100*abs(abs(val)**2-abs(ex)**2)/abs(ex)**2,
             abs(B), abs(W), cls, "!" if bnd else ""))

# ---- fig1 sweep ----
vpp_f = u0
flow, newton, all_roots, record = make(vpp_f)
print("\nfig1 sweep (variant b, raw pair assembly, no switch):")
Ts = np.linspace(0.05, 3.0, 60)
worst = 0.0
for T in Ts:
    recs = [record(r, T) for r in all_roots(T)]
    recs = [r for r in recs if abs(r['t']) < 50]
    if len(recs) < 2:
        continue
    best = min(((abs(recs[i]['uT']-recs[j]['uT']), i, j)
                for i in range(len(recs)) for j in range(i+1, len(recs))), key=lambda x: x[0])
    _, i, j = best
    val, B, W, cls, bnd = uni_b(recs[i], recs[j])
    ex = exactK(vpp_f, T)
    rel = abs(abs(val)**2-abs(ex)**2)/abs(ex)**2
    ratio = np.exp(-4.0/3.0*abs((recs[i]['E']-recs[j]['E']).imag)*0.75)
    print("  T=%5.3f rel=%7.2f%%  |B|=%7.3f argW=%+5.2fpi %s%s ratio=%7.1e nr=%d"
          % (T, 100*rel, abs(B), np.angle(W)/np.pi, cls, "!" if bnd else "", ratio, len(recs)))
