#!/usr/bin/env python3
"""fig1 sweep with assembly (b), all classes, and the geography rule
(|argW|<pi/2 -> LR, argW>pi/2 -> LD, argW<-pi/2 -> DR). Includes the
T=0.5 reduction-to-bare check and fine scans near class-boundary T."""
import numpy as np
import scipy.special as sp

u0 = 1.0/(2.0*np.sqrt(2.0))
vpp = u0

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

def airy_sol(zeta, cls):
    if cls == 'LR':
        return sp.airy(zeta)[0:2]
    w = np.exp(2j*np.pi/3) if cls == 'LD' else np.exp(-2j*np.pi/3)
    a, ap = sp.airy(zeta*w)[0:2]
    return -w*a, -w*w*ap

def uni_b(ra, rb, cls):
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
    ai, aip = airy_sol(-B, cls)
    return np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip), B, W

def geo_cls(W):
    a = np.angle(W)
    if abs(a) < np.pi/2:
        return 'LR'
    return 'LD' if a > 0 else 'DR'

def exactK(T):
    m = np.arange(200)
    return np.sum((vpp*u0)**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

print("  T     exact|K|2  bare%    b-LR%   b-DR%   b-LD%   geo->  geo%   argWb/pi |Wb|  nr")
Ts = list(np.arange(0.3, 3.001, 0.1)) + [0.5, 2.38, 2.42, 2.44, 2.46, 2.07, 2.12]
for T in sorted(set(round(t, 3) for t in Ts)):
    recs = [record(r, T) for r in all_roots(T)]
    recs = [r for r in recs if np.isfinite(r['t']) and abs(r['t']) < 1e4]
    ex = abs(exactK(T))**2
    if len(recs) < 2:
        bare = sum(r['t'] for r in recs)
        print("  %4.2f  %8.4f  %6.2f   (single root, bare only)" % (T, ex, 100*abs(abs(bare)**2-ex)/ex))
        continue
    sep, i, j = min(((abs(recs[i]['uT']-recs[j]['uT']), i, j)
                     for i in range(len(recs)) for j in range(i+1, len(recs))), key=lambda x: x[0])
    bare = recs[i]['t'] + recs[j]['t']
    row = "  %4.2f  %8.4f  %6.1f " % (T, ex, 100*abs(abs(bare)**2-ex)/ex)
    vals = {}
    for cls in ('LR','DR','LD'):
        val, B, W = uni_b(recs[i], recs[j], cls)
        vals[cls] = val
        row += "  %6.2f" % (100*abs(abs(val)**2-ex)/ex)
    g = geo_cls(W)
    row += "   %s  %6.2f   %+5.2f %6.3f  %d" % (g, 100*abs(abs(vals[g])**2-ex)/ex, np.angle(W)/np.pi, abs(W), len(recs))
    print(row)

# reduction to bare at T=0.5 using pair if available
T = 0.5
recs = [record(r, T) for r in all_roots(T)]
recs = [r for r in recs if np.isfinite(r['t']) and abs(r['t']) < 1e4]
print("\nT=0.5: roots in box:", len(recs))
if len(recs) >= 2:
    sep, i, j = min(((abs(recs[i]['uT']-recs[j]['uT']), i, j)
                     for i in range(len(recs)) for j in range(i+1, len(recs))), key=lambda x: x[0])
    val, B, W = uni_b(recs[i], recs[j], geo_cls(W))
    b1 = recs[i]['t'] if abs(recs[i]['t']) > abs(recs[j]['t']) else recs[j]['t']
    print("  |unif - bare1|/|bare1| = %.3e  (ratio=%.1e, |W|=%.2f)"
          % (abs(val-b1)/abs(b1), np.exp(-4/3*abs(W.imag)), abs(W)))
