#!/usr/bin/env python3
"""Isolate the closed-form assembly: compare
   - uniform closed form
   - brute-force contour quadrature of (1/sqrt(2pi)) int (c0+c1 X) e^{i(A-BX+X^3/3)} dX
     over the standard contour (arms at 5pi/6 and pi/6)
   - saddle contributions c+ and c-
   - bare 2-term sum and exact."""
import numpy as np
from scipy import special
from proto1 import z, Ts, fam, exact_K
from proto2 import record, bare_of, E_of
from proto3 import partner

SQ2PI = np.sqrt(2*np.pi)


def quad_LR(A, B, c0, c1, smax=12.0, npts=6000):
    # contour: s<0: X = |s| e^{i 5pi/6}; s>0: X = s e^{i pi/6}
    s = np.linspace(-smax, smax, npts)
    X = np.where(s < 0, -s*np.exp(1j*5*np.pi/6), s*np.exp(1j*np.pi/6))
    dX = np.gradient(X)
    f = (c0 + c1*X)*np.exp(1j*(A - B*X + X**3/3.0))
    return np.sum(f*dX)/SQ2PI


def assemble(i, report=True):
    T = Ts[i]
    ra, rb = record(fam[i], T), record(partner[i], T)
    Ea, Eb = E_of(ra), E_of(rb)
    W = -0.75*(Ea - Eb)
    plus, minus, Ep, Em = ra, rb, Ea, Eb
    if W.imag < 0:
        W = -W
        plus, minus, Ep, Em = rb, ra, Eb, Ea
    A = 0.5*(Ep + Em)
    logW = np.log(W)
    B = np.exp(2.0/3.0*logW)
    sqB = np.exp(1.0/3.0*logW)
    fp = np.sqrt(2.0*plus['muv']*sqB/(1j*plus['mvv']))
    fm = np.sqrt(-2.0*minus['muv']*sqB/(1j*minus['mvv']))
    cp = fp*np.exp(1j*Ep)/np.sqrt(-2j*sqB)
    cm = fm*np.exp(1j*Em)/np.sqrt(+2j*sqB)
    tp, tm = bare_of(plus), bare_of(minus)
    if np.real(cp/tp) < 0:
        fp = -fp
        cp = -cp
    if np.real(cm/tm) < 0:
        fm = -fm
        cm = -cm
    c0 = 0.5*(fp + fm)
    c1 = (fp - fm)/(2.0*sqB)
    ai, aip, _, _ = special.airy(-B)
    closed = SQ2PI*np.exp(1j*A)*(c0*ai - 1j*c1*aip)
    # subtract e^{iA} scale for the quadrature (avoid overflow): quad includes it
    quad = quad_LR(A - A.real*0, B, c0, c1)  # keep full A
    ex = exact_K(z*z, T)
    if report:
        print("T=%.3f  argW=%+.3fpi |B|=%.2f" % (T, np.angle(W)/np.pi, abs(B)))
        print("   exact     = %s" % ex)
        print("   bare sum  = %s" % (tp+tm))
        print("   c+        = %s" % cp)
        print("   c-        = %s" % cm)
        print("   closed    = %s" % closed)
        print("   quad LR   = %s" % quad)
        print("   |closed|^2/|ex|^2-1 = %+.3f   |quad|^2/|ex|^2-1 = %+.3f"
              % (abs(closed)**2/abs(ex)**2-1, abs(quad)**2/abs(ex)**2-1))
    return closed, quad, ex


for i in [5, 25, 50, 100, 140, 152, 156, 165, 185]:
    assemble(i)
    print()
