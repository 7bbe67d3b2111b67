#!/usr/bin/env python3
"""Prototype: uniform Airy propagator for the quartic model, full pipeline."""
import numpy as np
from scipy import special
from proto1 import (z, Om, flow_vT, Mvv, Muv, sigma_vv, sigma_uv, S_and_G,
                    bare_term, newton_vv, exact_K, Ts, fam)

SQ2PI = np.sqrt(2.0*np.pi)


def record(v0, T, u0=z):
    """All per-trajectory data the uniform formula needs."""
    n = u0*v0
    S, G = S_and_G(v0, T, u0)
    return dict(v0=v0, n=n, T=T, u0=u0,
                uT=u0*np.exp(-1j*Om(n)*T),
                S=S, G=G,
                mvv=Mvv(v0, T, u0), muv=Muv(v0, T, u0),
                svv=sigma_vv(v0, T, u0), suv=sigma_uv(v0, T, u0))


def bare_of(rec):
    return (np.exp(1j*(rec['S']+rec['G']))*np.exp(-0.5j*rec['svv'])
            / np.sqrt(abs(rec['mvv'])))


def E_of(rec):
    Rt = rec['G'] + 0.5*(1j*np.log(abs(rec['muv'])) - rec['suv'])
    return rec['S'] + Rt


def multistart(T, u0=z, vpp=z, half=2.0, ngrid=13):
    roots = []
    for re in np.linspace(-half, half, ngrid):
        for im in np.linspace(-half, half, ngrid):
            g = vpp + re + 1j*im
            r, ok = newton_vv(g, T, u0, vpp)
            if ok and abs(vv_res(r, T, u0, vpp)) < 1e-10:
                if not any(abs(r-q) < 1e-7 for q in roots):
                    roots.append(r)
    return sorted(roots, key=lambda c: (c.real, c.imag))


def vv_res(v0, T, u0, vpp):
    return flow_vT(v0, T, u0) - vpp


def uniform_value(rec_a, rec_b, verbose=False):
    Ea, Eb = E_of(rec_a), E_of(rec_b)
    W = -0.75*(Ea - Eb)          # = B^{3/2} with a=+ labeling
    plus, minus = rec_a, rec_b
    if W.real < 0 or (W.real == 0 and W.imag < 0):
        W = -W
        plus, minus = rec_b, rec_a
    Ep, Em = E_of(plus), E_of(minus)
    A = 0.5*(Ep + Em)
    logW = np.log(W)
    B = np.exp(2.0/3.0*logW)
    sqB = np.exp(1.0/3.0*logW)   # B^{1/2}, consistent branch
    fp2 = 2.0*plus['muv']*sqB/(1j*plus['mvv'])
    fm2 = -2.0*minus['muv']*sqB/(1j*minus['mvv'])
    fp, fm = np.sqrt(fp2), np.sqrt(fm2)
    # branch fix: steepest-descent contribution must match the bare term
    cp = fp*np.exp(1j*Ep)/np.sqrt(-2j*sqB)
    cm = fm*np.exp(1j*Em)/np.sqrt(+2j*sqB)
    tp, tm = bare_of(plus), bare_of(minus)
    if np.real(cp/tp) < 0:
        fp = -fp
    if np.real(cm/tm) < 0:
        fm = -fm
    c0 = 0.5*(fp + fm)
    c1 = (fp - fm)/(2.0*sqB)
    ai, aip, _, _ = special.airy(-B)
    val = SQ2PI*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    if verbose:
        print("  W=%s B=%s |cp/tp|=%.3f |cm/tm|=%.3f" %
              (W, B, abs(cp/tp), abs(cm/tm)))
    return val, B


# --- sweep: continued root + partner by multistart, uniform vs exact ---
print("checking scipy airy complex:", special.airy(1+1j)[0])
sel = range(0, len(Ts), 4)
worst = 0.0
worstT = None
for i in sel:
    T = Ts[i]
    cont = fam[i]
    roots = multistart(T)
    rc = record(cont, T)
    # partner: nearest in u'' among distinct roots
    others = [r for r in roots if abs(r - cont) > 1e-7]
    if not others:
        print("T=%.3f: no partner among %d roots" % (T, len(roots)))
        continue
    recs = [record(r, T) for r in others]
    part = min(recs, key=lambda q: abs(q['uT'] - rc['uT']))
    val, B = uniform_value(rc, part)
    ex = exact_K(z*z, T)
    r2 = abs(abs(val)**2 - abs(ex)**2)/abs(ex)**2
    if r2 > worst:
        worst, worstT = r2, T
    if i % 20 == 0 or r2 > 0.1:
        print("T=%.3f roots=%d partner=%.4f%+.4fj B=%.3f%+.3fj rel|K|^2=%.2e"
              % (T, len(roots), part['v0'].real, part['v0'].imag,
                 B.real, B.imag, r2))
print("worst uniform rel err |K|^2 = %.3e at T=%.3f" % (worst, worstT))
