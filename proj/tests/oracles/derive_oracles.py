"""Reference values frozen into the unit tests.

Every number here comes from an evaluation that shares no code with the
library: mpmath adaptive quadrature at 30 digits, cross-checked where noted by
a composite trapezoid on 10^6 cells with one Richardson step, and sympy for
the closed-form polynomial case.

    python3 tests/oracles/derive_oracles.py
"""
import math

import mpmath as mp
import numpy as np
import sympy as sp

mp.mp.dps = 30


def trapezoid_richardson(f, a, b, n=1_000_000):
    def trap(m):
        x = np.linspace(a, b, m + 1)
        y = f(x)
        return (b - a) / m * (y.sum() - 0.5 * (y[0] + y[-1]))
    return (4 * trap(n) - trap(n // 2)) / 3


def kernel_w_r2():
    # r^{1-d} int_0^r r1^{d-1} e^{W(r1) - W(r)} dr1 with W = r^2, d = 3, r = 2
    q = mp.quad(lambda t: t**2 * mp.e**(t**2 - 4), [0, 2]) / 4
    t = trapezoid_richardson(lambda x: x**2 * np.exp(x**2 - 4), 0.0, 2.0) / 4
    return q, t


def kernel_theta_z_r2():
    # r^{2-d} int_0^r r1^{d-3} e^{Z(r1) - Z(r)} dr1 with Z = r^2, d = 3, r = 2
    q = mp.quad(lambda t: mp.e**(t**2 - 4), [0, 2]) / 2
    t = trapezoid_richardson(lambda x: np.exp(x**2 - 4), 0.0, 2.0) / 2
    return q, t


def transport_exponent_smooth():
    # V(1) for U = 1e-3 r^2 / (1+r)^3, d = 3
    d = 3
    U = lambda r: mp.mpf("1e-3") * r**2 / (1 + r)**3
    dU = lambda r: mp.diff(U, r)
    g = lambda r: (dU(r) + (d - 1) * U(r) / r) / (r / 2 - U(r))
    return mp.quad(g, [mp.mpf("1e-30"), 1])


def f_theta_polynomial():
    # Polynomial profile, distinct constants so every coefficient is exercised.
    r, s = sp.symbols("r s", positive=True)
    d = 3
    mu, lam, R, CV, kap = sp.Rational(13, 10), sp.Rational(2, 5), sp.Rational(7, 10), sp.Rational(3, 2), sp.Rational(9, 10)
    nu = 2 * mu + lam
    P = 1 + r**2 / 2
    U = r / 10 + r**2 / 20
    T = sp.Rational(1, 50) - r**2 / 100
    Ef = U * P * (U**2 / 2 + CV * T) + U * P * R * T
    intEf = sp.integrate(Ef.subs(r, s), (s, 0, r))
    intU2r = sp.integrate((U**2 / r).subs(r, s), (s, 0, r))
    F = (Ef + (d - 2) / r * intEf
         + (kap / CV - nu) * (sp.diff(U**2, r) / 2 + (d - 2) / (2 * r) * U**2)
         - lam * (d - 1) * (U**2 / r + (d - 2) / r * intU2r))
    return sp.nsimplify(F.subs(r, 1)), sp.N(F.subs(r, 1), 20)


def smallness():
    Pd, delta, T0, alpha = 1e-2, 1e-1, 1e-2, 1e-3
    return (Pd + delta + T0 + alpha + Pd * T0 / alpha + alpha**2 / (Pd * T0)
            + alpha * math.log(1 / (Pd * delta**2)))


if __name__ == "__main__":
    q, t = kernel_w_r2()
    print("kernel W=r^2, d=3, r=2:       ", mp.nstr(q, 17), " trapezoid+Richardson", repr(t))
    q, t = kernel_theta_z_r2()
    print("kernel_theta Z=r^2, d=3, r=2: ", mp.nstr(q, 17), " trapezoid+Richardson", repr(t))
    print("smooth V(1):                  ", mp.nstr(transport_exponent_smooth(), 17))
    exact, num = f_theta_polynomial()
    print("F_Theta polynomial at r=1:    ", exact, "=", num)
    print("smallness S:                  ", repr(smallness()))
