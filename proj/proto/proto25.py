#!/usr/bin/env python3
"""Final frozen pipeline, python reference run.

bare  = single T-continued family trajectory.
unif  = pair (family + nearest partner) assembly (b) with continuity-selected
        Airy class; proximity referee below |W|=0.05; confluent branch below
        sep 1e-3; fallback to bare when no partner.
Outputs: fig1 200-pt criteria, caustic 5-pt stencil, reduction check.
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
        if abs(r) < tol:
            return v0
        step = r/mvv
        for _ in range(9):
            v1 = v0 - step
            if abs(flow_all(v1, T)[0] - vpp) < abs(r):
                break
            step /= 2
        v0 = v1
    return v0 if abs(flow_all(v0, T)[0]-vpp) < 1e-9 else None

def record(v0, T):
    vT, mvv, muv, n = flow_all(v0, T)
    S = (n*(2*n+2) - (n*n+2*n+0.25))*T - 1j*n
    G = (2*n+1)*T
    ts = np.linspace(1e-9, T, 4001)
    mv = np.exp(2j*(n+1)*ts)*(1+2j*n*ts)
    sig_vv = np.cumsum(np.concatenate([[np.angle(mv[0])], np.angle(mv[1:]/mv[:-1])]))[-1] - np.angle(mv[0])
    sig_uv = np.angle(-2j*u0*u0) - np.real(2*n+2)*T
    R = G + (1j*np.log(abs(muv)) - sig_uv)/2.0
    t = np.exp(1j*(S+G))*np.exp(-0.5j*sig_vv)/np.sqrt(abs(mvv))
    uT = u0*np.exp(-1j*(2*n+2)*T)
    h = 1e-5
    q_p = flow_all(v0+h, T); q_m = flow_all(v0-h, T)
    chi3 = 1j*((q_p[1]/q_p[2]) - (q_m[1]/q_m[2]))/(2*h)/muv
    return dict(v0=v0, uT=uT, mvv=mvv, muv=muv, S=S, R=R, t=t, chi3=chi3)

def airy_sol(zeta, cls):
    if cls == 'LR':
        return sp.airy(zeta)[0:2]
    w = np.exp(2j*np.pi/3) if cls == 'LD' else np.exp(-2j*np.pi/3)
    a, ap = sp.airy(zeta*w)[0:2]
    return -w*a, -w*w*ap

def pair_candidates(ra, rb):
    dS = ra['S']-rb['S']
    if abs(dS) > 1e-12:
        W = -0.75*dS
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

def confluent_candidates(vpp, v0c, T):
    rc = record(v0c, T)
    h = 1e-4
    def Rof(v0):
        _, mvv, muv, n = flow_all(v0, T)
        G = (2*n+1)*T
        sig_uv = np.angle(-2j*u0*u0) - np.real(2*n+2)*T
        return G + (1j*np.log(abs(muv)) - sig_uv)/2.0, mvv, muv
    Rp_, mvv_p, muv_p = Rof(v0c+h)
    Rm_, mvv_m, muv_m = Rof(v0c-h)
    muv, mvv = rc['muv'], rc['mvv']
    Rp = ((Rp_-Rm_)/(2*h))/muv
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
    c1 = F*1j*Rp*wp*wp + F*wpp
    A = rc['S']
    out = {}
    for cls in ('LR','DR','LD'):
        ai, aip = airy_sol(0.0, cls)
        out[cls] = np.sqrt(2*np.pi)*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    return out

def exactK(vpp, T):
    m = np.arange(200)
    return np.sum((vpp*u0)**m/sp.factorial(m)*np.exp(-1j*(m+0.5)**2*T))

class Walker:
    """T-continued family + partner + class continuity, walked from T0."""
    def __init__(self, vpp, lim=3.0, gn=12):
        self.vpp = vpp
        self.lim, self.gn = lim, gn
        self.T = None
        self.family = None
        self.prev_val = None

    def roots_at(self, T, seeds):
        roots = []
        for sd in seeds:
            r = newton(self.vpp, sd, T)
            if r is None: continue
            if abs(r.real) > self.lim or abs(r.imag) > self.lim: continue
            if all(abs(r-q) > 1e-7 for q in roots):
                roots.append(r)
        return roots

    def step_to(self, T):
        grid = [re+1j*im for re in np.linspace(-self.lim, self.lim, self.gn)
                         for im in np.linspace(-self.lim, self.lim, self.gn)]
        seeds = grid if self.family is None else [self.family] + grid
        roots = self.roots_at(T, seeds)
        if not roots:
            return None
        if self.family is None:
            fam = min(roots, key=lambda r: abs(r - self.vpp))  # v0 -> vpp as T->0
        else:
            fam = min(roots, key=lambda r: abs(r - self.family))
        self.family = fam
        self.T = T
        return roots

    def eval_at(self, T, roots):
        fam = self.family
        recs = {complex(r): record(r, T) for r in roots}
        rf = recs[complex(fam)]
        others = [recs[complex(r)] for r in roots if abs(r-fam) > 1e-7]
        bare = rf['t']
        if not others:
            self.prev_val = bare
            return bare, 'fallback', None, rf
        rp = min(others, key=lambda r: abs(r['uT']-rf['uT']))
        sep = abs(rp['uT']-rf['uT'])
        if sep < 1e-3:
            v0m = (rf['v0']+rp['v0'])/2.0
            cand = confluent_candidates(self.vpp, v0m, T)
        else:
            cand, W, B = pair_candidates(rf, rp)
        if self.prev_val is None or abs(self.prev_val) == 0:
            pick = 'LR'
        else:
            pick = min(cand, key=lambda c: abs(cand[c]-self.prev_val))
        self.prev_val = cand[pick]
        return cand[pick], pick, sep, rf

def run_sweep(vpp, T_lo, T_hi, n_pts, label, extra_Ts=()):
    Ts = list(np.linspace(T_lo, T_hi, n_pts)) + list(extra_Ts)
    Ts = sorted(set(round(t, 12) for t in Ts))
    wk = Walker(vpp)
    walk_step = 0.05
    results = {}
    Tcur = 0.0
    for T in Ts:
        while Tcur + walk_step < T - 1e-12:
            Tcur += walk_step
            wk.step_to(Tcur)
        roots = wk.step_to(T)
        Tcur = T
        if roots is None:
            results[T] = None
            continue
        val, pick, sep, rf = wk.eval_at(T, roots)
        results[T] = (val, pick, sep, rf)
    return results

# ---- fig1 ----
print("== fig1, 200 points ==")
res = run_sweep(u0, 0.05, 3.0, 200, "fig1")
worst_u = (0.0, None); worst_b_pre = (0.0, None); best_b_post = None
bare_over50 = False
fails = 0
for T, r in sorted(res.items()):
    ex = abs(exactK(u0, T))**2
    if r is None:
        print("  T=%.3f NO ROOTS" % T); continue
    val, pick, sep, rf = r
    eu = 100*abs(abs(val)**2-ex)/ex
    if eu > worst_u[0]: worst_u = (eu, T)
    if eu >= 10.0: fails += 1
    eb = 100*abs(abs(rf['t'])**2-ex)/ex
    if 0.1 <= T <= 1.5 and eb > worst_b_pre[0]: worst_b_pre = (eb, T)
    if 2.0 <= T <= 3.0 and eb > 50.0: bare_over50 = True
print("  uniform worst: %.2f%% at T=%.4f ; points >=10%%: %d" % (worst_u[0], worst_u[1], fails))
print("  bare worst on [0.1,1.5]: %.2f%% at T=%.4f (<5%% required)" % worst_b_pre)
print("  bare >50%% somewhere in [2,3]: %s" % bare_over50)

# ---- caustic stencil ----
print("\n== caustic scenario stencil ==")
Tc_true = 1.0
nc = 0.5j
vppc = (nc/u0)*np.exp(1j*(2*nc+2)*Tc_true)
stencil = [Tc_true-1e-2, Tc_true-1e-3, Tc_true, Tc_true+1e-3, Tc_true+1e-2]
res = run_sweep(vppc, 0.3, 1.05, 16, "caustic", extra_Ts=stencil)
vals = {}
for T in stencil:
    r = res[T]
    ex = abs(exactK(vppc, T))**2
    val, pick, sep, rf = r
    vals[T] = abs(val)**2
    bare2 = abs(rf['t'])**2
    print("  T=%8.5f exact=%.4f unif=%.4f (err %.2f%%, %s, sep=%s) bare=%.3e (%.1fx exact)"
          % (T, ex, abs(val)**2, 100*abs(abs(val)**2-ex)/ex, pick,
             "None" if sep is None else "%.1e" % sep, bare2, bare2/ex))
v = [vals[T] for T in stencil]
d2a = v[0] - 2*v[1] + v[2]
d2b = v[2] - 2*v[3] + v[4]
print("  second differences: %.3e (lo), %.3e (hi)" % (d2a, d2b))

# ---- reduction at T=0.5 ----
res = run_sweep(u0, 0.5, 0.5, 1, "red")
val, pick, sep, rf = res[0.5]
print("\nT=0.5 reduction: |unif-bare|/|bare| = %.3e (mode %s)" % (abs(val-rf['t'])/abs(rf['t']), pick))
