#!/usr/bin/env python3
"""Fix pass: proximity referee near confluence, confluent value with c1,
third-saddle test on fig1 tail, and full-pipeline error summaries."""
import numpy as np
import scipy.special as sp

u0 = 1.0/(2.0*np.sqrt(2.0))

def flow_all(vpp, v0, T):
    n = u0*v0
    vT = v0*np.exp(1j*(2*n+2)*T)
    mvv = np.exp(2j*(n+1)*T)*(1+2j*n*T)
    muv = -2j*T*u0*u0*np.exp(-1j*(2*n+2)*T)
    return vT, mvv, muv, n

def mk_newton(vpp):
    def newton(v0, T, tol=1e-12, itmax=80):
        for _ in range(itmax):
            vT, mvv, _, _ = flow_all(vpp, v0, T)
            r = vT - vpp
            if abs(r) < tol:
                return v0
            step = r/mvv
            for _ in range(9):
                v1 = v0 - step
                if abs(flow_all(vpp, v1, T)[0] - vpp) < abs(r):
                    break
                step /= 2
            v0 = v1
        return v0 if abs(flow_all(vpp, v0, T)[0]-vpp) < 1e-9 else None
    return newton

def all_roots(vpp, T, lim=3.0, gn=16):
    newton = mk_newton(vpp)
    roots = []
    for re in np.linspace(-lim, lim, gn):
        for im in np.linspace(-lim, lim, gn):
            r = newton(re+1j*im, T)
            if r is None: continue
            if abs(r.real) > lim or abs(r.imag) > lim: continue
            if all(abs(r-q) > 1e-7 for q in roots):
                roots.append(r)
    return sorted(roots, key=lambda q: (round(q.real,9), round(q.imag,9)))

def record(vpp, v0, T):
    vT, mvv, muv, n = flow_all(vpp, v0, T)
    S = (n*(2*n+2) - (n*n+2*n+0.25))*T - 1j*n
    G = (2*n+1)*T
    ts = np.linspace(1e-9, T, 6001)
    mv = np.exp(2j*(n+1)*ts)*(1+2j*n*ts)
    sig_vv = np.cumsum(np.concatenate([[np.angle(mv[0])], np.angle(mv[1:]/mv[:-1])]))[-1] - np.angle(mv[0])
    sig_uv = np.angle(-2j*u0*u0) - np.real(2*n+2)*T
    R = G + (1j*np.log(abs(muv)) - sig_uv)/2.0
    t = np.exp(1j*(S+G))*np.exp(-0.5j*sig_vv)/np.sqrt(abs(mvv))
    uT = u0*np.exp(-1j*(2*n+2)*T)
    h = 1e-5
    q_p = flow_all(vpp, v0+h, T); q_m = flow_all(vpp, v0-h, T)
    chi3 = 1j*((q_p[1]/q_p[2]) - (q_m[1]/q_m[2]))/(2*h)/muv
    return dict(v0=v0, uT=uT, mvv=mvv, muv=muv, S=S, R=R, t=t, chi3=chi3, n=n)

def airy_sol(zeta, cls):
    if cls == 'LR':
        return sp.airy(zeta)[0:2]
    w = np.exp(2j*np.pi/3) if cls == 'LD' else np.exp(-2j*np.pi/3)
    a, ap = sp.airy(zeta*w)[0:2]
    return -w*a, -w*w*ap

def R_and_more(vpp, v0, T):
    _, mvv, muv, n = flow_all(vpp, v0, T)
    G = (2*n+1)*T
    sig_uv = np.angle(-2j*u0*u0) - np.real(2*n+2)*T
    return G + (1j*np.log(abs(muv)) - sig_uv)/2.0, mvv, muv

def confluent_value(vpp, v0c, T):
    """Double-saddle (fold) value: cubic-only map at the confluent point,
    c0 and c1 from chi''', chi'''' and dR/dw."""
    rc = record(vpp, v0c, T)
    h = 1e-4
    Rp_, mvv_p, muv_p = R_and_more(vpp, v0c+h, T)
    Rm_, mvv_m, muv_m = R_and_more(vpp, v0c-h, T)
    muv, mvv = rc['muv'], rc['mvv']
    dR_dv0 = (Rp_-Rm_)/(2*h)
    Rp = dR_dv0/muv
    chi2 = lambda m1, m2: 1j*m1/m2
    d1 = (chi2(mvv_p, muv_p) - chi2(mvv_m, muv_m))/(2*h)
    d2 = (chi2(mvv_p, muv_p) - 2*chi2(mvv, muv) + chi2(mvv_m, muv_m))/(h*h)
    dmuv = (muv_p-muv_m)/(2*h)
    chi3 = d1/muv
    chi4 = d2/(muv*muv) - (dmuv/muv**3)*d1
    Xp = np.power(chi3/2.0, 1.0/3.0)
    wp = 1.0/Xp
    Xpp = chi4/(12.0*Xp*Xp)
    wpp = -Xpp/(Xp**3)
    F = np.exp(1j*rc['R'])
    c0 = F*wp
    c1 = F*(1j*Rp*wp*wp) + F*wpp
    A = rc['S']
    out = {}
    for cls in ('LR','DR','LD'):
        ai, aip = airy_sol(0.0, cls)
        out[cls] = np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    return out

def uni_pair(ra, rb):
    sep = abs(ra['uT']-rb['uT'])
    if sep >= 1e-4:
        W = -0.75*(ra['S']-rb['S'])
    else:
        chi3c = (ra['chi3']+rb['chi3'])/2.0
        W = (chi3c/2.0)*((ra['uT']-rb['uT'])/2.0)**3
    A = (ra['S']+rb['S'])/2.0
    B = np.power(complex(W), 2.0/3.0)
    s = np.sqrt(complex(B))
    fs = []
    for sgn, r in ((+1, ra), (-1, rb)):
        f = np.exp(1j*r['R'])*np.sqrt(sgn*2*s*r['muv']/(1j*r['mvv']))
        c = f*np.exp(1j*(A - sgn*(2.0/3.0)*W))/np.sqrt(-sgn*2j*s)
        if np.real(c/r['t']) < 0:
            f = -f
        fs.append(f)
    fp, fm = fs
    if abs(W) < 0.05 and abs(fp+fm) < abs(fp-fm):
        fm = -fm
    c0 = (fp+fm)/2.0
    c1 = (fp-fm)/(2.0*s)
    out = {}
    for cls in ('LR','DR','LD'):
        ai, aip = airy_sol(-B, cls)
        out[cls] = np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    return out, W, B

def exactK(vpp, T):
    m = np.arange(200)
    return np.sum((vpp*u0)**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

# --- 1. third saddle on fig1 tail ---
print("== fig1 tail: third root and composite value ==")
vpp = u0
prev = None
for T in (2.2, 2.3, 2.4, 2.5, 2.6, 2.7, 2.8, 2.9, 3.0):
    roots = all_roots(vpp, T, lim=5.0, gn=24)
    recs = [record(vpp, r, T) for r in roots]
    sep, i, j = min(((abs(recs[a]['uT']-recs[b]['uT']), a, b)
                     for a in range(len(recs)) for b in range(a+1, len(recs))), key=lambda x: x[0])
    cand, W, B = uni_pair(recs[i], recs[j])
    pick = 'LR' if prev is None else min(cand, key=lambda c: abs(cand[c]-prev))
    prev = cand[pick]
    others = [r for k, r in enumerate(recs) if k not in (i, j)]
    ex = abs(exactK(vpp, T))**2
    base = cand[pick]
    line = "  T=%4.2f nroots=%d unif=%8.4f err=%6.2f%%" % (
        T, len(recs), abs(base)**2, 100*abs(abs(base)**2-ex)/ex)
    for r in others[:3]:
        comp = base + r['t']
        line += "  +t(v0=%5.2f%+5.2fi,|t|=%5.3f)->err=%6.2f%%" % (
            r['v0'].real, r['v0'].imag, abs(r['t']), 100*abs(abs(comp)**2-ex)/ex)
    print(line)

# --- 2. caustic ladder with proximity referee ---
print("\n== caustic ladder, proximity referee, no Hermite ==")
Tc = 1.0
nc = 0.5j/Tc
vppc = (nc/u0)*np.exp(1j*(2*nc+2)*Tc)
v0c = nc/u0
newtonc = mk_newton(vppc)
for dT in (1e-3, 1e-4, 1e-5, 1e-6):
    T = Tc + dT
    g = np.sqrt(dT)
    roots = []
    for th in np.linspace(0, 2*np.pi, 13):
        r = newtonc(v0c + 3*g*np.exp(1j*th), T)
        if r is not None and all(abs(r-q) > 1e-8 for q in roots):
            roots.append(r)
    if len(roots) < 2:
        print("  dT=%.0e: %d roots" % (dT, len(roots)))
        continue
    ra, rb = record(vppc, roots[0], T), record(vppc, roots[1], T)
    cand, W, B = uni_pair(ra, rb)
    ex = abs(exactK(vppc, T))**2
    errs = {c: 100*abs(abs(v)**2-ex)/ex for c, v in cand.items()}
    print("  dT=%.0e sep=%.2e exact=%.4f  LR=%.2f%% DR=%.2f%% LD=%.2f%%  |W|=%.1e"
          % (dT, abs(ra['uT']-rb['uT']), ex, errs['LR'], errs['DR'], errs['LD'], abs(W)))

# --- 3. confluent with c1 at exact Tc ---
print("\n== confluent value with c1 at T=Tc ==")
ex = abs(exactK(vppc, Tc))**2
out = confluent_value(vppc, v0c, Tc)
for cls, v in out.items():
    print("  %s: |K|^2 = %.4f  err = %.2f%%  (exact %.4f)" % (cls, abs(v)**2, 100*abs(abs(v)**2-ex)/ex, ex))
